#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "feeamm/error.hpp"

namespace feeamm::uniswap {

// 256-bit unsigned with checked arithmetic: overflow and negative results
// raise instead of wrapping, like a reverting contract.
using Uint256 = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::unsigned_magnitude, boost::multiprecision::checked, void>>;

class UintAmount {
public:
    UintAmount() = default;
    UintAmount(std::uint64_t v) : value_(v) {}
    explicit UintAmount(Uint256 v) : value_(std::move(v)) {}

    // Decimal digits only; anything else, or a value above 2^256 - 1, throws ParseError.
    static UintAmount parse(const std::string& decimal);

    const Uint256& value() const noexcept { return value_; }
    std::string str() const { return value_.str(); }
    bool is_zero() const { return value_.is_zero(); }

    friend UintAmount operator+(const UintAmount& a, const UintAmount& b);
    friend UintAmount operator-(const UintAmount& a, const UintAmount& b);
    friend UintAmount operator*(const UintAmount& a, const UintAmount& b);
    friend UintAmount operator/(const UintAmount& a, const UintAmount& b);

    friend bool operator==(const UintAmount& a, const UintAmount& b) { return a.value_ == b.value_; }
    friend bool operator<(const UintAmount& a, const UintAmount& b) { return a.value_ < b.value_; }
    friend bool operator<=(const UintAmount& a, const UintAmount& b) { return a.value_ <= b.value_; }
    friend bool operator>(const UintAmount& a, const UintAmount& b) { return a.value_ > b.value_; }
    friend bool operator>=(const UintAmount& a, const UintAmount& b) { return a.value_ >= b.value_; }

private:
    Uint256 value_;
};

inline constexpr std::uint64_t kFeeNumerator = 997;
inline constexpr std::uint64_t kFeeDenominator = 1000;

/// Periphery library getAmountOut:
/// floor(amount_in * 997 * reserve_out / (reserve_in * 1000 + amount_in * 997)).
UintAmount get_amount_out(const UintAmount& amount_in, const UintAmount& reserve_in,
                          const UintAmount& reserve_out);

/// Pair swap K check on fee-adjusted balances:
/// (b0 * 1000 - a0in * 3) * (b1 * 1000 - a1in * 3) >= r0 * r1 * 1000^2.
bool k_invariant_check(const UintAmount& balance0, const UintAmount& balance1,
                       const UintAmount& amount0_in, const UintAmount& amount1_in,
                       const UintAmount& reserve0, const UintAmount& reserve1);

// Plain constant-product check (r0 + x) * (r1 - y) >= r0 * r1 in exact integers.
bool product_check(const UintAmount& amount_in, const UintAmount& amount_out,
                   const UintAmount& reserve_in, const UintAmount& reserve_out);

struct Divergence {
    UintAmount integer_out;
    UintAmount real_out_floor;
    std::int64_t divergence;
};

// Integer output minus the floor of the real-valued model at phi = 0.997.
// The real side is evaluated in a 50-digit binary float.
Divergence differential_compare(const UintAmount& amount_in, const UintAmount& reserve_in,
                                const UintAmount& reserve_out);

// Same comparison for an arbitrary real-valued fee; anything but 0.997 is
// rejected because the integer side hard-codes 997/1000.
Divergence differential_compare(const UintAmount& amount_in, const UintAmount& reserve_in,
                                const UintAmount& reserve_out, double phi);

}  // namespace feeamm::uniswap
