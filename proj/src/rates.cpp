#include "feeamm/rates.hpp"

#include "detail/checks.hpp"
#include "feeamm/swap.hpp"

namespace feeamm {

ExchangeRate::ExchangeRate(double value) : value_(value) {
    detail::require_positive(value, "exchange rate");
}

ExchangeRate external_rate(const PriceOracle& oracle, const TokenId& t0, const TokenId& t1) {
    return ExchangeRate(oracle.price(t0) / oracle.price(t1));
}

ExchangeRate internal_rate(FeeParam fee, double r0, double r1) {
    return ExchangeRate(swap_rate(fee, 0.0, r0, r1));
}

ExchangeRate internal_rate(const SystemState& state, const TokenId& t0, const TokenId& t1) {
    auto pool = lookup_pool(state, t0, t1);
    if (!pool) throw Error(ErrorCode::NoPool, "no pool for " + t0.symbol() + "/" + t1.symbol());
    return internal_rate(pool->fee, pool->reserve_in, pool->reserve_out);
}

double minted_price(const Pool& pool, const PriceOracle& oracle) {
    double value = pool.r0() * oracle.price(pool.token0()) + pool.r1() * oracle.price(pool.token1());
    return value / pool.minted_supply();
}

double wealth(const SystemState& state, const PriceOracle& oracle, const AccountId& account) {
    const Wallet* wallet = state.find_wallet(account);
    if (wallet == nullptr) return 0.0;
    double total = 0.0;
    for (const auto& [token, amount] : wallet->balances()) {
        if (amount > 0.0) total += amount * oracle.price(token);
    }
    for (const auto& [pair, amount] : wallet->minted_balances()) {
        if (amount > 0.0) total += amount * minted_price(*state.find_pool(pair), oracle);
    }
    return total;
}

double gain(const SystemState& state, const PriceOracle& oracle, const SwapTx& tx) {
    SystemState next = execute_swap(state, tx);
    return wealth(next, oracle, tx.sender()) - wealth(state, oracle, tx.sender());
}

double epsilon_fee(const SystemState& state, const PriceOracle& oracle, const AccountId& sender,
                   const TokenId& token_in, const TokenId& token_out, double x0, double x1) {
    SwapTx first(sender, x0, token_in, token_out);
    SwapTx second = first.with_amount(x1);
    SwapTx joined = first.with_amount(x0 + x1);
    SystemState after_first = execute_swap(state, first);
    return gain(state, oracle, joined) - gain(state, oracle, first) -
           gain(after_first, oracle, second);
}

std::vector<GainSample> gain_curve(const SystemState& state, const PriceOracle& oracle,
                                   const AccountId& sender, const TokenId& token_in,
                                   const TokenId& token_out, double x_min, double x_max,
                                   int steps) {
    detail::require_non_negative(x_min, "x_min", ErrorCode::InvalidRange);
    detail::require_finite(x_max, "x_max", ErrorCode::InvalidRange);
    if (!(x_max > x_min)) throw Error(ErrorCode::InvalidRange, "x_max must exceed x_min");
    if (steps < 2) throw Error(ErrorCode::InvalidRange, "at least two samples are required");

    std::vector<GainSample> samples;
    samples.reserve(static_cast<std::size_t>(steps));
    const double width = x_max - x_min;
    for (int i = 0; i < steps; ++i) {
        double x = i + 1 == steps ? x_max : x_min + width * i / (steps - 1);
        double g = 0.0;
        if (x > 0.0) g = gain(state, oracle, SwapTx(sender, x, token_in, token_out));
        samples.push_back({x, g});
    }
    return samples;
}

SwapGainFunction::SwapGainFunction(const SystemState& state, const PriceOracle& oracle,
                                   const AccountId& sender, const TokenId& token_in,
                                   const TokenId& token_out)
    : fee_(1.0) {
    auto pair = canonical_pair(token_in, token_out);
    const Pool* pool = state.find_pool(pair);
    if (pool == nullptr) {
        throw Error(ErrorCode::NoPool, "no pool for " + token_in.symbol() + "/" + token_out.symbol());
    }
    fee_ = pool->fee();
    reserve_in_ = pool->reserve_of(token_in);
    reserve_out_ = pool->reserve_of(token_out);
    price_in_ = oracle.price(token_in);
    price_out_ = oracle.price(token_out);
    const Wallet* wallet = state.find_wallet(sender);
    share_ = wallet == nullptr ? 0.0 : wallet->minted_balance(pair) / pool->minted_supply();
}

double SwapGainFunction::operator()(double x) const {
    // The sender trades x for y and its pool share absorbs a share_ fraction
    // of the opposite change in the pool's value.
    double y = swap_output(fee_, x, reserve_in_, reserve_out_);
    return (1.0 - share_) * (price_out_ * y - price_in_ * x);
}

}  // namespace feeamm
