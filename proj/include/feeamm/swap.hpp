#pragma once

#include "feeamm/state.hpp"

namespace feeamm {

// Constant-product swap rate with trading fee: phi * r1 / (r0 + phi * x).
// Templated so the same expression can be evaluated in wider number types.
template <class Real>
Real constant_product_rate(const Real& phi, const Real& x, const Real& r0, const Real& r1) {
    return phi * r1 / (r0 + phi * x);
}

template <class Real>
Real constant_product_output(const Real& phi, const Real& x, const Real& r0, const Real& r1) {
    return x * constant_product_rate(phi, x, r0, r1);
}

/// Output tokens per input token for swapping x against reserves (r0, r1).
/// x == 0 is accepted and yields the internal rate phi * r1 / r0.
double swap_rate(FeeParam fee, double x, double r0, double r1);

/// x * swap_rate(...); always strictly below r1.
double swap_output(FeeParam fee, double x, double r0, double r1);

struct SwapQuote {
    double rate;
    double amount_out;
};

SwapQuote quote_swap(FeeParam fee, double x, double r0, double r1);

struct SwapOutcome {
    SystemState state;
    double amount_out;
};

SwapOutcome apply_swap(const SystemState& state, const SwapTx& tx);
SystemState execute_swap(const SystemState& state, const SwapTx& tx);

/// Amount of the input token recovered by swapping x for y and immediately
/// swapping all of y back on the updated reserves. Equals x only when phi == 1.
double round_trip_output(FeeParam fee, double x, double r0, double r1);

/// Factor Z with swap_rate(x + y) == (alpha x + beta y) / (x + y) * Z, where
/// alpha and beta are the rates of swapping x and then y sequentially.
double additivity_factor(FeeParam fee, double x, double y, double r0, double r1);

}  // namespace feeamm
