#pragma once

#include <vector>

#include "feeamm/state.hpp"

namespace feeamm {

class ExchangeRate {
public:
    explicit ExchangeRate(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

// Price ratio P(t0) / P(t1): units of t1 bought with one unit of t0.
ExchangeRate external_rate(const PriceOracle& oracle, const TokenId& t0, const TokenId& t1);

// Limit of the swap rate as the input tends to zero: phi * r1 / r0.
ExchangeRate internal_rate(FeeParam fee, double r0, double r1);
ExchangeRate internal_rate(const SystemState& state, const TokenId& t0, const TokenId& t1);

// Redemption value of one pool-share token at oracle prices.
double minted_price(const Pool& pool, const PriceOracle& oracle);

double wealth(const SystemState& state, const PriceOracle& oracle, const AccountId& account);

// Wealth of the sender after minus before executing tx.
double gain(const SystemState& state, const PriceOracle& oracle, const SwapTx& tx);

// gain(x0 + x1) - gain(x0) - gain'(x1), where gain' is evaluated in the state
// reached after swapping x0.
double epsilon_fee(const SystemState& state, const PriceOracle& oracle, const AccountId& sender,
                   const TokenId& token_in, const TokenId& token_out, double x0, double x1);

struct GainSample {
    double x;
    double gain;
};

// Uniform samples of the sender's gain on [x_min, x_max]; x == 0 is the
// empty swap and has gain 0.
std::vector<GainSample> gain_curve(const SystemState& state, const PriceOracle& oracle,
                                   const AccountId& sender, const TokenId& token_in,
                                   const TokenId& token_out, double x_min, double x_max,
                                   int steps);

// Sender gain of swapping x, evaluated directly from the reserves, prices and
// the sender's share of the pool. Agrees with gain() but skips the state copy
// and the balance check, so it can be sampled densely.
class SwapGainFunction {
public:
    SwapGainFunction(const SystemState& state, const PriceOracle& oracle,
                     const AccountId& sender, const TokenId& token_in, const TokenId& token_out);

    double operator()(double x) const;

    FeeParam fee() const noexcept { return fee_; }
    double reserve_in() const noexcept { return reserve_in_; }
    double reserve_out() const noexcept { return reserve_out_; }
    double price_in() const noexcept { return price_in_; }
    double price_out() const noexcept { return price_out_; }
    double pool_share() const noexcept { return share_; }

private:
    FeeParam fee_;
    double reserve_in_;
    double reserve_out_;
    double price_in_;
    double price_out_;
    double share_;
};

}  // namespace feeamm
