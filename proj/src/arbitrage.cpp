#include "feeamm/arbitrage.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/checks.hpp"
#include "feeamm/rates.hpp"

namespace feeamm {

namespace {

void check_inputs(double p0, double p1, double r0, double r1) {
    detail::require_positive(p0, "price p0");
    detail::require_positive(p1, "price p1");
    detail::require_positive(r0, "reserve r0");
    detail::require_positive(r1, "reserve r1");
}

struct Candidate {
    TokenId token_in;
    TokenId token_out;
    double x_equil;
    double x_max;
    bool mispriced;
};

Candidate evaluate_direction(const SystemState& state, const PriceOracle& oracle,
                             const TokenId& token_in, const TokenId& token_out) {
    auto pool = lookup_pool(state, token_in, token_out);
    if (!pool) {
        throw Error(ErrorCode::NoPool, "no pool for " + token_in.symbol() + "/" + token_out.symbol());
    }
    double p_in = oracle.price(token_in);
    double p_out = oracle.price(token_out);
    double internal = internal_rate(pool->fee, pool->reserve_in, pool->reserve_out).value();
    double external = p_in / p_out;
    return {token_in,
            token_out,
            equilibrium_value(pool->fee, p_in, p_out, pool->reserve_in, pool->reserve_out),
            optimal_swap_value(pool->fee, p_in, p_out, pool->reserve_in, pool->reserve_out),
            internal > external};
}

}  // namespace

double equilibrium_value(FeeParam fee, double p0, double p1, double r0, double r1) {
    check_inputs(p0, p1, r0, r1);
    const double phi = fee.value();
    const double sp0 = std::sqrt(p0);
    const double disc = p0 * r0 * (phi - 1.0) * (phi - 1.0) + 4.0 * p1 * r1 * phi * phi;
    return (-sp0 * r0 * (1.0 + phi) + std::sqrt(r0) * std::sqrt(disc)) / (2.0 * sp0 * phi);
}

double optimal_swap_value_from_equilibrium(FeeParam fee, double p0, double p1, double r0,
                                           double r1, double x0) {
    check_inputs(p0, p1, r0, r1);
    detail::require_finite(x0, "equilibrium value", ErrorCode::DomainError);
    const double phi = fee.value();
    const double sp0 = std::sqrt(p0);
    return x0 + (-sp0 * r0 - sp0 * phi * x0 + std::sqrt(p1 * phi * r0 * r1)) / (sp0 * phi);
}

double optimal_swap_value(FeeParam fee, double p0, double p1, double r0, double r1) {
    check_inputs(p0, p1, r0, r1);
    const double phi = fee.value();
    return (std::sqrt(p1 * phi * r0 * r1 / p0) - r0) / phi;
}

bool is_equilibrium(const SystemState& state, const PriceOracle& oracle, const TokenId& t0,
                    const TokenId& t1, double tol) {
    double internal = internal_rate(state, t0, t1).value();
    double external = external_rate(oracle, t0, t1).value();
    return std::abs(internal - external) <= tol * external;
}

ArbitrageSolution solve_arbitrage(const SystemState& state, const PriceOracle& oracle,
                                  const TokenId& t0, const TokenId& t1, const AccountId& sender) {
    Candidate forward = evaluate_direction(state, oracle, t0, t1);
    Candidate backward = evaluate_direction(state, oracle, t1, t0);
    auto profitable = [](const Candidate& c) { return c.mispriced && c.x_max > 0.0; };
    if (profitable(forward) && profitable(backward)) {
        // Would need phi^2 > 1.
        throw std::logic_error("both swap directions report an arbitrage");
    }

    ArbitrageSolution solution{t0, t1, std::nullopt, std::nullopt, 0.0, false};
    const Candidate* chosen = profitable(forward) ? &forward : profitable(backward) ? &backward : nullptr;
    if (chosen == nullptr) return solution;

    solution.token_in = chosen->token_in;
    solution.token_out = chosen->token_out;
    if (chosen->x_equil > 0.0) solution.x_equil = chosen->x_equil;
    solution.x_max = chosen->x_max;
    solution.gain = SwapGainFunction(state, oracle, sender, chosen->token_in, chosen->token_out)(chosen->x_max);
    solution.enabled = balance_of(state, sender, chosen->token_in) >= chosen->x_max;
    return solution;
}

}  // namespace feeamm
