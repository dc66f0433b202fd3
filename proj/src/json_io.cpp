#include "feeamm/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace feeamm::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw Error(ErrorCode::ParseError, path + ": " + message);
}

const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "." + key, "missing");
    return *it;
}

double number(const json& value, const std::string& path) {
    if (!value.is_number()) fail(path, "expected a number");
    double v = value.get<double>();
    if (!std::isfinite(v)) fail(path, "must be finite");
    return v;
}

double positive(const json& value, const std::string& path) {
    double v = number(value, path);
    if (!(v > 0.0)) fail(path, "must be positive");
    return v;
}

double non_negative(const json& value, const std::string& path) {
    double v = number(value, path);
    if (v < 0.0) fail(path, "must be non-negative");
    return v;
}

std::string text(const json& value, const std::string& path) {
    if (!value.is_string()) fail(path, "expected a string");
    auto s = value.get<std::string>();
    if (s.empty()) fail(path, "must be non-empty");
    return s;
}

const json& array(const json& value, const std::string& path) {
    if (!value.is_array()) fail(path, "expected an array");
    return value;
}

// Rewrites library validation errors with the field path they came from.
template <class F>
auto at_path(const std::string& path, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        fail(path, e.what());
    }
}

MintedTokenId parse_pair_key(const std::string& key, const std::string& path) {
    auto slash = key.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == key.size() ||
        key.find('/', slash + 1) != std::string::npos) {
        fail(path, "pair key must look like \"A/B\"");
    }
    return at_path(path, [&] {
        return canonical_pair(TokenId(key.substr(0, slash)), TokenId(key.substr(slash + 1)));
    });
}

std::string path_index(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

}  // namespace

std::string pair_key(const MintedTokenId& pair) {
    return pair.first().symbol() + "/" + pair.second().symbol();
}

SystemState state_from_json(const json& doc) {
    if (!doc.is_object()) fail("$", "expected an object");
    std::vector<Pool> pools;
    std::vector<Wallet> wallets;

    if (doc.contains("pools")) {
        const json& items = array(doc["pools"], "pools");
        for (std::size_t i = 0; i < items.size(); ++i) {
            const auto base = path_index("pools", i);
            const json& p = items[i];
            auto token0 = text(field(p, "token0", base), base + ".token0");
            auto token1 = text(field(p, "token1", base), base + ".token1");
            double r0 = positive(field(p, "r0", base), base + ".r0");
            double r1 = positive(field(p, "r1", base), base + ".r1");
            double fee = number(field(p, "fee", base), base + ".fee");
            double supply = positive(field(p, "minted_supply", base), base + ".minted_supply");
            at_path(base + ".fee", [&] { return FeeParam(fee); });
            pools.push_back(at_path(base, [&] {
                return Pool(TokenId(token0), TokenId(token1), r0, r1, FeeParam(fee), supply);
            }));
        }
    }

    if (doc.contains("wallets")) {
        const json& items = array(doc["wallets"], "wallets");
        for (std::size_t i = 0; i < items.size(); ++i) {
            const auto base = path_index("wallets", i);
            const json& w = items[i];
            auto owner = text(field(w, "owner", base), base + ".owner");
            std::map<TokenId, double> balances;
            std::map<MintedTokenId, double> minted;
            if (w.contains("balances")) {
                const json& b = w["balances"];
                if (!b.is_object()) fail(base + ".balances", "expected an object");
                for (const auto& [symbol, amount] : b.items()) {
                    auto path = base + ".balances." + symbol;
                    balances[at_path(path, [&] { return TokenId(symbol); })] = non_negative(amount, path);
                }
            }
            if (w.contains("minted_balances")) {
                const json& m = w["minted_balances"];
                if (!m.is_object()) fail(base + ".minted_balances", "expected an object");
                for (const auto& [key, amount] : m.items()) {
                    auto path = base + ".minted_balances." + key;
                    minted[parse_pair_key(key, path)] = non_negative(amount, path);
                }
            }
            wallets.emplace_back(std::move(owner), std::move(balances), std::move(minted));
        }
    }

    return at_path("$", [&] { return SystemState(std::move(pools), std::move(wallets)); });
}

PriceOracle oracle_from_json(const json& doc) {
    const json& prices = field(doc, "prices", "$");
    if (!prices.is_object()) fail("prices", "expected an object");
    std::map<TokenId, double> out;
    for (const auto& [symbol, value] : prices.items()) {
        auto path = "prices." + symbol;
        out[at_path(path, [&] { return TokenId(symbol); })] = positive(value, path);
    }
    return PriceOracle(std::move(out));
}

std::vector<SwapTx> trace_from_json(const json& doc) {
    const json& items = array(doc, "trace");
    std::vector<SwapTx> trace;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto base = path_index("trace", i);
        const json& t = items[i];
        auto sender = text(field(t, "sender", base), base + ".sender");
        double amount = positive(field(t, "amount_in", base), base + ".amount_in");
        auto token_in = text(field(t, "token_in", base), base + ".token_in");
        auto token_out = text(field(t, "token_out", base), base + ".token_out");
        trace.push_back(at_path(base, [&] {
            return SwapTx(sender, amount, TokenId(token_in), TokenId(token_out));
        }));
    }
    return trace;
}

json to_json(const SystemState& state) {
    json pools = json::array();
    for (const auto& [pair, pool] : state.pools()) {
        pools.push_back({{"token0", pool.token0().symbol()},
                         {"token1", pool.token1().symbol()},
                         {"r0", pool.r0()},
                         {"r1", pool.r1()},
                         {"fee", pool.fee().value()},
                         {"minted_supply", pool.minted_supply()}});
    }
    json wallets = json::array();
    for (const auto& [owner, wallet] : state.wallets()) {
        json balances = json::object();
        for (const auto& [token, amount] : wallet.balances()) balances[token.symbol()] = amount;
        json minted = json::object();
        for (const auto& [pair, amount] : wallet.minted_balances()) minted[pair_key(pair)] = amount;
        wallets.push_back({{"owner", owner}, {"balances", balances}, {"minted_balances", minted}});
    }
    return {{"pools", pools}, {"wallets", wallets}};
}

json to_json(const PriceOracle& oracle) {
    json prices = json::object();
    for (const auto& [token, price] : oracle.prices()) prices[token.symbol()] = price;
    return {{"prices", prices}};
}

json to_json(const SwapTx& tx) {
    return {{"sender", tx.sender()},
            {"amount_in", tx.amount_in()},
            {"token_in", tx.token_in().symbol()},
            {"token_out", tx.token_out().symbol()}};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

double round_sig(double value, int digits) {
    if (!std::isfinite(value) || value == 0.0) return value;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return std::strtod(buf, nullptr);
}

json round_numbers(const json& doc, int digits) {
    if (doc.is_number_float()) return round_sig(doc.get<double>(), digits);
    if (doc.is_array() || doc.is_object()) {
        json out = doc;
        for (auto it = out.begin(); it != out.end(); ++it) *it = round_numbers(*it, digits);
        return out;
    }
    return doc;
}

}  // namespace feeamm::io
