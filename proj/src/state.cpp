#include "feeamm/state.hpp"

#include <set>

#include "detail/checks.hpp"

namespace feeamm {

using detail::require_non_negative;
using detail::require_positive;

TokenId::TokenId(std::string symbol) : symbol_(std::move(symbol)) {
    if (symbol_.empty()) throw Error(ErrorCode::InvalidToken, "token symbol must be non-empty");
}

MintedTokenId MintedTokenId::of(const TokenId& a, const TokenId& b) {
    if (a == b) throw Error(ErrorCode::InvalidPair, "pair needs two distinct tokens, got " + a.symbol() + " twice");
    return a < b ? MintedTokenId(a, b) : MintedTokenId(b, a);
}

MintedTokenId canonical_pair(const TokenId& a, const TokenId& b) { return MintedTokenId::of(a, b); }

FeeParam::FeeParam(double phi) : phi_(phi) {
    detail::require_finite(phi, "fee", ErrorCode::DomainError);
    if (!(phi > 0.0 && phi <= 1.0)) {
        throw Error(ErrorCode::DomainError, "fee must lie in (0, 1], got " + std::to_string(phi));
    }
}

Pool::Pool(TokenId token0, TokenId token1, double r0, double r1, FeeParam fee,
           double minted_supply)
    : token0_(std::move(token0)),
      token1_(std::move(token1)),
      r0_(r0),
      r1_(r1),
      fee_(fee),
      minted_supply_(minted_supply) {
    if (token0_ == token1_) throw Error(ErrorCode::InvalidPair, "pool tokens must differ");
    require_positive(r0_, "reserve r0");
    require_positive(r1_, "reserve r1");
    require_positive(minted_supply_, "minted supply");
}

double Pool::reserve_of(const TokenId& token) const {
    if (token == token0_) return r0_;
    if (token == token1_) return r1_;
    throw Error(ErrorCode::InvalidPair, token.symbol() + " is not traded by this pool");
}

Pool Pool::with_reserve(const TokenId& token, double reserve) const {
    Pool next = *this;
    if (token == token0_) {
        require_positive(reserve, "reserve r0");
        next.r0_ = reserve;
    } else if (token == token1_) {
        require_positive(reserve, "reserve r1");
        next.r1_ = reserve;
    } else {
        throw Error(ErrorCode::InvalidPair, token.symbol() + " is not traded by this pool");
    }
    return next;
}

Wallet::Wallet(AccountId owner, std::map<TokenId, double> balances,
               std::map<MintedTokenId, double> minted_balances)
    : owner_(std::move(owner)),
      balances_(std::move(balances)),
      minted_balances_(std::move(minted_balances)) {
    if (owner_.empty()) throw Error(ErrorCode::InvalidState, "wallet owner must be non-empty");
    for (const auto& [token, amount] : balances_) {
        require_non_negative(amount, "balance of " + token.symbol(), ErrorCode::InvalidState);
    }
    for (const auto& [pair, amount] : minted_balances_) {
        require_non_negative(amount,
                             "minted balance of " + pair.first().symbol() + "/" + pair.second().symbol(),
                             ErrorCode::InvalidState);
    }
}

double Wallet::balance(const TokenId& token) const {
    auto it = balances_.find(token);
    return it == balances_.end() ? 0.0 : it->second;
}

double Wallet::minted_balance(const MintedTokenId& pair) const {
    auto it = minted_balances_.find(pair);
    return it == minted_balances_.end() ? 0.0 : it->second;
}

Wallet Wallet::with_balance(const TokenId& token, double amount) const {
    require_non_negative(amount, "balance of " + token.symbol(), ErrorCode::InvalidState);
    Wallet next = *this;
    next.balances_[token] = amount;
    return next;
}

SystemState::SystemState(std::vector<Pool> pools, std::vector<Wallet> wallets) {
    for (auto& pool : pools) {
        auto pair = pool.pair();
        if (pools_.count(pair) != 0) {
            throw Error(ErrorCode::InvalidState, "more than one pool for pair " +
                                                     pair.first().symbol() + "/" + pair.second().symbol());
        }
        pools_.emplace(std::move(pair), std::move(pool));
    }
    for (auto& wallet : wallets) {
        auto owner = wallet.owner();
        if (wallets_.count(owner) != 0) {
            throw Error(ErrorCode::InvalidState, "duplicate wallet for " + owner);
        }
        wallets_.emplace(std::move(owner), std::move(wallet));
    }
    validate();
}

void SystemState::validate() const {
    std::map<MintedTokenId, double> held;
    for (const auto& [owner, wallet] : wallets_) {
        for (const auto& [pair, amount] : wallet.minted_balances()) {
            if (amount > 0.0 && pools_.count(pair) == 0) {
                throw Error(ErrorCode::InvalidState, owner + " holds shares of a missing pool " +
                                                         pair.first().symbol() + "/" + pair.second().symbol());
            }
            held[pair] += amount;
        }
    }
    for (const auto& [pair, amount] : held) {
        auto it = pools_.find(pair);
        if (it != pools_.end() && amount > it->second.minted_supply()) {
            throw Error(ErrorCode::InvalidState, "minted balances of " + pair.first().symbol() + "/" +
                                                     pair.second().symbol() + " exceed the minted supply");
        }
    }
}

const Pool* SystemState::find_pool(const MintedTokenId& pair) const {
    auto it = pools_.find(pair);
    return it == pools_.end() ? nullptr : &it->second;
}

const Wallet* SystemState::find_wallet(const AccountId& owner) const {
    auto it = wallets_.find(owner);
    return it == wallets_.end() ? nullptr : &it->second;
}

SystemState SystemState::with_pool(Pool pool) const {
    SystemState next = *this;
    auto pair = pool.pair();
    next.pools_.insert_or_assign(std::move(pair), std::move(pool));
    next.validate();
    return next;
}

SystemState SystemState::with_wallet(Wallet wallet) const {
    SystemState next = *this;
    auto owner = wallet.owner();
    next.wallets_.insert_or_assign(std::move(owner), std::move(wallet));
    next.validate();
    return next;
}

PriceOracle::PriceOracle(std::map<TokenId, double> prices) : prices_(std::move(prices)) {
    for (const auto& [token, price] : prices_) {
        require_positive(price, "price of " + token.symbol());
    }
}

double PriceOracle::price(const TokenId& token) const {
    auto it = prices_.find(token);
    if (it == prices_.end()) throw Error(ErrorCode::MissingPrice, "no price for " + token.symbol());
    return it->second;
}

SwapTx::SwapTx(AccountId sender, double amount_in, TokenId token_in, TokenId token_out)
    : sender_(std::move(sender)),
      amount_in_(amount_in),
      token_in_(std::move(token_in)),
      token_out_(std::move(token_out)) {
    require_positive(amount_in_, "swap amount", ErrorCode::NonPositiveAmount);
    if (token_in_ == token_out_) throw Error(ErrorCode::InvalidPair, "swap tokens must differ");
}

SwapTx SwapTx::with_amount(double amount_in) const {
    return SwapTx(sender_, amount_in, token_in_, token_out_);
}

std::optional<OrientedPool> lookup_pool(const SystemState& state, const TokenId& token_in,
                                        const TokenId& token_out) {
    const Pool* pool = state.find_pool(canonical_pair(token_in, token_out));
    if (pool == nullptr) return std::nullopt;
    return OrientedPool{pool->reserve_of(token_in), pool->reserve_of(token_out), pool->fee()};
}

double balance_of(const SystemState& state, const AccountId& account, const TokenId& token) {
    const Wallet* wallet = state.find_wallet(account);
    return wallet == nullptr ? 0.0 : wallet->balance(token);
}

double total_supply(const SystemState& state, const TokenId& token) {
    double total = 0.0;
    for (const auto& [owner, wallet] : state.wallets()) total += wallet.balance(token);
    for (const auto& [pair, pool] : state.pools()) {
        if (pair.contains(token)) total += pool.reserve_of(token);
    }
    return total;
}

void require_enabled(const SystemState& state, const SwapTx& tx) {
    if (!lookup_pool(state, tx.token_in(), tx.token_out())) {
        throw Error(ErrorCode::NoPool,
                    "no pool for " + tx.token_in().symbol() + "/" + tx.token_out().symbol());
    }
    double held = balance_of(state, tx.sender(), tx.token_in());
    if (held < tx.amount_in()) {
        throw Error(ErrorCode::InsufficientBalance,
                    tx.sender() + " holds " + std::to_string(held) + " " + tx.token_in().symbol() +
                        ", needs " + std::to_string(tx.amount_in()));
    }
}

bool is_enabled(const SystemState& state, const SwapTx& tx) {
    try {
        require_enabled(state, tx);
        return true;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace feeamm
