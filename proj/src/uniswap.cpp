#include "feeamm/uniswap.hpp"

#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "feeamm/swap.hpp"

namespace feeamm::uniswap {

namespace mp = boost::multiprecision;

namespace {

template <class Op>
UintAmount checked(Op op, const char* what) {
    try {
        return UintAmount(op());
    } catch (const std::overflow_error&) {
        throw Error(ErrorCode::Overflow, std::string(what) + " overflows 256 bits");
    } catch (const std::range_error&) {
        throw Error(ErrorCode::Underflow, std::string(what) + " goes below zero");
    }
}

}  // namespace

UintAmount UintAmount::parse(const std::string& decimal) {
    if (decimal.empty() || decimal.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError, "not an unsigned decimal integer: '" + decimal + "'");
    }
    mp::cpp_int wide(decimal);
    if (wide > mp::cpp_int(std::numeric_limits<Uint256>::max())) {
        throw Error(ErrorCode::ParseError, "value exceeds 256 bits: " + decimal);
    }
    return UintAmount(Uint256(wide));
}

UintAmount operator+(const UintAmount& a, const UintAmount& b) {
    return checked([&] { return Uint256(a.value_ + b.value_); }, "addition");
}

UintAmount operator-(const UintAmount& a, const UintAmount& b) {
    return checked([&] { return Uint256(a.value_ - b.value_); }, "subtraction");
}

UintAmount operator*(const UintAmount& a, const UintAmount& b) {
    return checked([&] { return Uint256(a.value_ * b.value_); }, "multiplication");
}

UintAmount operator/(const UintAmount& a, const UintAmount& b) {
    if (b.is_zero()) throw Error(ErrorCode::DomainError, "division by zero");
    return UintAmount(Uint256(a.value_ / b.value_));
}

UintAmount get_amount_out(const UintAmount& amount_in, const UintAmount& reserve_in,
                          const UintAmount& reserve_out) {
    if (amount_in.is_zero()) {
        throw Error(ErrorCode::InsufficientInputAmount, "UniswapV2Library: INSUFFICIENT_INPUT_AMOUNT");
    }
    if (reserve_in.is_zero() || reserve_out.is_zero()) {
        throw Error(ErrorCode::InsufficientLiquidity, "UniswapV2Library: INSUFFICIENT_LIQUIDITY");
    }
    UintAmount amount_in_with_fee = amount_in * kFeeNumerator;
    UintAmount numerator = amount_in_with_fee * reserve_out;
    UintAmount denominator = reserve_in * kFeeDenominator + amount_in_with_fee;
    return numerator / denominator;
}

bool k_invariant_check(const UintAmount& balance0, const UintAmount& balance1,
                       const UintAmount& amount0_in, const UintAmount& amount1_in,
                       const UintAmount& reserve0, const UintAmount& reserve1) {
    const UintAmount fee_cut = kFeeDenominator - kFeeNumerator;
    UintAmount balance0_adjusted = balance0 * kFeeDenominator - amount0_in * fee_cut;
    UintAmount balance1_adjusted = balance1 * kFeeDenominator - amount1_in * fee_cut;
    return balance0_adjusted * balance1_adjusted >=
           reserve0 * reserve1 * (UintAmount(kFeeDenominator) * kFeeDenominator);
}

bool product_check(const UintAmount& amount_in, const UintAmount& amount_out,
                   const UintAmount& reserve_in, const UintAmount& reserve_out) {
    if (amount_out >= reserve_out) return false;
    return (reserve_in + amount_in) * (reserve_out - amount_out) >= reserve_in * reserve_out;
}

Divergence differential_compare(const UintAmount& amount_in, const UintAmount& reserve_in,
                                const UintAmount& reserve_out) {
    using Real = mp::cpp_bin_float_50;
    UintAmount integer_out = get_amount_out(amount_in, reserve_in, reserve_out);

    const Real phi = Real(kFeeNumerator) / Real(kFeeDenominator);
    Real real_out = constant_product_output(phi, Real(amount_in.value()), Real(reserve_in.value()),
                                            Real(reserve_out.value()));
    UintAmount real_floor(Uint256(mp::cpp_int(mp::floor(real_out))));

    mp::cpp_int diff = mp::cpp_int(integer_out.value()) - mp::cpp_int(real_floor.value());
    if (diff > std::numeric_limits<std::int64_t>::max() || diff < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::Overflow, "divergence does not fit in 64 bits");
    }
    return {integer_out, real_floor, diff.convert_to<std::int64_t>()};
}

Divergence differential_compare(const UintAmount& amount_in, const UintAmount& reserve_in,
                                const UintAmount& reserve_out, double phi) {
    if (phi != 0.997) {
        throw Error(ErrorCode::DomainError, "the integer path hard-codes a 997/1000 fee");
    }
    return differential_compare(amount_in, reserve_in, reserve_out);
}

}  // namespace feeamm::uniswap
