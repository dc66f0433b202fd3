#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feeamm/error.hpp"

namespace feeamm {

using AccountId = std::string;

class TokenId {
public:
    explicit TokenId(std::string symbol);

    const std::string& symbol() const noexcept { return symbol_; }

    friend bool operator==(const TokenId&, const TokenId&) = default;
    friend auto operator<=>(const TokenId&, const TokenId&) = default;

private:
    std::string symbol_;
};

// Pool-share token of an unordered pair; first() < second() always holds.
class MintedTokenId {
public:
    static MintedTokenId of(const TokenId& a, const TokenId& b);

    const TokenId& first() const noexcept { return first_; }
    const TokenId& second() const noexcept { return second_; }
    bool contains(const TokenId& t) const noexcept { return t == first_ || t == second_; }

    friend bool operator==(const MintedTokenId&, const MintedTokenId&) = default;
    friend auto operator<=>(const MintedTokenId&, const MintedTokenId&) = default;

private:
    MintedTokenId(TokenId first, TokenId second)
        : first_(std::move(first)), second_(std::move(second)) {}

    TokenId first_;
    TokenId second_;
};

MintedTokenId canonical_pair(const TokenId& a, const TokenId& b);

/// Trading fee phi in (0, 1]. Only phi * x of a swapped amount x rebalances
/// the pool; phi == 1 is the fee-less model.
class FeeParam {
public:
    explicit FeeParam(double phi);

    double value() const noexcept { return phi_; }
    bool feeless() const noexcept { return phi_ == 1.0; }

private:
    double phi_;
};

class Pool {
public:
    Pool(TokenId token0, TokenId token1, double r0, double r1, FeeParam fee,
         double minted_supply);

    const TokenId& token0() const noexcept { return token0_; }
    const TokenId& token1() const noexcept { return token1_; }
    double r0() const noexcept { return r0_; }
    double r1() const noexcept { return r1_; }
    FeeParam fee() const noexcept { return fee_; }
    double minted_supply() const noexcept { return minted_supply_; }
    MintedTokenId pair() const { return canonical_pair(token0_, token1_); }

    double reserve_of(const TokenId& token) const;
    Pool with_reserve(const TokenId& token, double reserve) const;

private:
    TokenId token0_;
    TokenId token1_;
    double r0_;
    double r1_;
    FeeParam fee_;
    double minted_supply_;
};

class Wallet {
public:
    explicit Wallet(AccountId owner, std::map<TokenId, double> balances = {},
                    std::map<MintedTokenId, double> minted_balances = {});

    const AccountId& owner() const noexcept { return owner_; }
    const std::map<TokenId, double>& balances() const noexcept { return balances_; }
    const std::map<MintedTokenId, double>& minted_balances() const noexcept {
        return minted_balances_;
    }

    // Absent keys read as zero.
    double balance(const TokenId& token) const;
    double minted_balance(const MintedTokenId& pair) const;

    Wallet with_balance(const TokenId& token, double amount) const;

private:
    AccountId owner_;
    std::map<TokenId, double> balances_;
    std::map<MintedTokenId, double> minted_balances_;
};

/// Wallets plus at most one pool per unordered token pair. Values are
/// immutable; the with_* members return modified copies.
class SystemState {
public:
    SystemState() = default;
    SystemState(std::vector<Pool> pools, std::vector<Wallet> wallets);

    const std::map<MintedTokenId, Pool>& pools() const noexcept { return pools_; }
    const std::map<AccountId, Wallet>& wallets() const noexcept { return wallets_; }

    const Pool* find_pool(const MintedTokenId& pair) const;
    const Wallet* find_wallet(const AccountId& owner) const;

    SystemState with_pool(Pool pool) const;
    SystemState with_wallet(Wallet wallet) const;

private:
    void validate() const;

    std::map<MintedTokenId, Pool> pools_;
    std::map<AccountId, Wallet> wallets_;
};

class PriceOracle {
public:
    PriceOracle() = default;
    explicit PriceOracle(std::map<TokenId, double> prices);

    bool has(const TokenId& token) const { return prices_.count(token) != 0; }
    double price(const TokenId& token) const;
    const std::map<TokenId, double>& prices() const noexcept { return prices_; }

private:
    std::map<TokenId, double> prices_;
};

class SwapTx {
public:
    SwapTx(AccountId sender, double amount_in, TokenId token_in, TokenId token_out);

    const AccountId& sender() const noexcept { return sender_; }
    double amount_in() const noexcept { return amount_in_; }
    const TokenId& token_in() const noexcept { return token_in_; }
    const TokenId& token_out() const noexcept { return token_out_; }

    SwapTx with_amount(double amount_in) const;

private:
    AccountId sender_;
    double amount_in_;
    TokenId token_in_;
    TokenId token_out_;
};

struct OrientedPool {
    double reserve_in;
    double reserve_out;
    FeeParam fee;
};

std::optional<OrientedPool> lookup_pool(const SystemState& state, const TokenId& token_in,
                                        const TokenId& token_out);

double balance_of(const SystemState& state, const AccountId& account, const TokenId& token);

// Sum of all wallet balances and pool reserves of an atomic token.
double total_supply(const SystemState& state, const TokenId& token);

// A swap is enabled when its pool exists and the sender can pay amount_in.
void require_enabled(const SystemState& state, const SwapTx& tx);
bool is_enabled(const SystemState& state, const SwapTx& tx);

}  // namespace feeamm
