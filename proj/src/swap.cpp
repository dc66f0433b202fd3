#include "feeamm/swap.hpp"

#include "detail/checks.hpp"

namespace feeamm {

namespace {

void check_reserves(double r0, double r1) {
    detail::require_positive(r0, "reserve r0");
    detail::require_positive(r1, "reserve r1");
}

}  // namespace

double swap_rate(FeeParam fee, double x, double r0, double r1) {
    detail::require_non_negative(x, "swap amount");
    check_reserves(r0, r1);
    return constant_product_rate(fee.value(), x, r0, r1);
}

double swap_output(FeeParam fee, double x, double r0, double r1) {
    return x * swap_rate(fee, x, r0, r1);
}

SwapQuote quote_swap(FeeParam fee, double x, double r0, double r1) {
    double rate = swap_rate(fee, x, r0, r1);
    return {rate, x * rate};
}

SwapOutcome apply_swap(const SystemState& state, const SwapTx& tx) {
    require_enabled(state, tx);
    auto oriented = *lookup_pool(state, tx.token_in(), tx.token_out());
    double x = tx.amount_in();
    double y = swap_output(oriented.fee, x, oriented.reserve_in, oriented.reserve_out);
    double reserve_out = oriented.reserve_out - y;
    if (!(reserve_out > 0.0)) {
        // Mathematically impossible; only reachable once y rounds to the whole reserve.
        throw Error(ErrorCode::DomainError, "swap output rounds to the entire reserve");
    }

    const Pool& pool = *state.find_pool(canonical_pair(tx.token_in(), tx.token_out()));
    Pool next_pool = pool.with_reserve(tx.token_in(), oriented.reserve_in + x)
                         .with_reserve(tx.token_out(), reserve_out);

    const Wallet& wallet = *state.find_wallet(tx.sender());
    Wallet next_wallet = wallet.with_balance(tx.token_in(), wallet.balance(tx.token_in()) - x)
                             .with_balance(tx.token_out(), wallet.balance(tx.token_out()) + y);

    return {state.with_pool(std::move(next_pool)).with_wallet(std::move(next_wallet)), y};
}

SystemState execute_swap(const SystemState& state, const SwapTx& tx) {
    return apply_swap(state, tx).state;
}

double round_trip_output(FeeParam fee, double x, double r0, double r1) {
    double y = swap_output(fee, x, r0, r1);
    if (y == 0.0) return 0.0;
    return swap_output(fee, y, r1 - y, r0 + x);
}

double additivity_factor(FeeParam fee, double x, double y, double r0, double r1) {
    detail::require_positive(x, "first swap amount");
    detail::require_positive(y, "second swap amount");
    check_reserves(r0, r1);
    const double phi = fee.value();
    const double lead = phi * r1 * x;
    const double tail = phi * r1 * r0 * y;
    const double fee_reduced = r0 + phi * x + phi * y;  // r0 + phi x + phi y
    const double mixed = r0 + x + phi * y;               // r0 + x + phi y
    return ((lead * fee_reduced + tail) * mixed) / (fee_reduced * (lead * mixed + tail));
}

}  // namespace feeamm
