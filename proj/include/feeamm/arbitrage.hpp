#pragma once

#include <optional>

#include "feeamm/state.hpp"

namespace feeamm {

// Swap value x0 of token0 after which the internal rate equals p0 / p1.
// A non-positive result means no swap in this direction reaches equilibrium.
double equilibrium_value(FeeParam fee, double p0, double p1, double r0, double r1);

// Gain-maximising swap value written in terms of an equilibrium value x0.
double optimal_swap_value_from_equilibrium(FeeParam fee, double p0, double p1, double r0,
                                           double r1, double x0);

// Gain-maximising swap value (sqrt(p1 phi r0 r1 / p0) - r0) / phi. A
// non-positive result means no profitable swap in this direction.
double optimal_swap_value(FeeParam fee, double p0, double p1, double r0, double r1);

bool is_equilibrium(const SystemState& state, const PriceOracle& oracle, const TokenId& t0,
                    const TokenId& t1, double tol);

struct ArbitrageSolution {
    TokenId token_in;
    TokenId token_out;
    std::optional<double> x_equil;
    std::optional<double> x_max;
    double gain = 0.0;
    // Whether the sender can actually pay x_max.
    bool enabled = false;

    bool has_arbitrage() const noexcept { return x_max.has_value(); }
};

// Tries both orientations of the pair and reports the profitable one. When
// the pool is not mispriced, direction is (t0, t1) and both values are empty.
ArbitrageSolution solve_arbitrage(const SystemState& state, const PriceOracle& oracle,
                                  const TokenId& t0, const TokenId& t1, const AccountId& sender);

}  // namespace feeamm
