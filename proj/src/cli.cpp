#include "feeamm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "feeamm/arbitrage.hpp"
#include "feeamm/json_io.hpp"
#include "feeamm/numeric_oracle.hpp"
#include "feeamm/rates.hpp"
#include "feeamm/swap.hpp"
#include "feeamm/uniswap.hpp"

namespace feeamm::cli {

namespace {

using io::json;

struct Inputs {
    std::string state_path;
    std::string oracle_path;
    std::vector<std::string> pair;
    std::string sender;
};

struct Options {
    Inputs in;
    std::string trace_path;
    bool verify = false;
    double verify_tol = 1e-6;
    double x_min = 0.0;
    double x_max = 0.0;
    int steps = 0;
    std::string out_path;
    std::string cases_path;
    std::optional<int> random_cases;
    std::optional<std::uint64_t> seed;
};

void print(std::ostream& out, const json& doc) { out << io::round_numbers(doc).dump(2) << '\n'; }

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::NoPool:
        case ErrorCode::InsufficientBalance:
        case ErrorCode::NonPositiveAmount:
            return kDisabledTransaction;
        default:
            return kValidationFailure;
    }
}

SystemState load_state(const std::string& path) { return io::state_from_json(io::read_json_file(path)); }
PriceOracle load_oracle(const std::string& path) { return io::oracle_from_json(io::read_json_file(path)); }

std::pair<TokenId, TokenId> pair_of(const Inputs& in) { return {TokenId(in.pair.at(0)), TokenId(in.pair.at(1))}; }

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
    SystemState state = load_state(opt.in.state_path);
    PriceOracle oracle = load_oracle(opt.in.oracle_path);
    auto trace = io::trace_from_json(io::read_json_file(opt.trace_path));

    json steps = json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const SwapTx& tx = trace[i];
        SwapOutcome outcome = [&] {
            try {
                return apply_swap(state, tx);
            } catch (const Error& e) {
                throw Error(e.code(), "step " + std::to_string(i) + ": " + e.what());
            }
        }();
        double g = wealth(outcome.state, oracle, tx.sender()) - wealth(state, oracle, tx.sender());
        state = std::move(outcome.state);
        steps.push_back({{"index", i},
                         {"tx", io::to_json(tx)},
                         {"amount_out", outcome.amount_out},
                         {"gain", g},
                         {"state", io::to_json(state)}});
    }
    print(out, {{"steps", steps}, {"final_state", io::to_json(state)}});
    (void)err;
    return kSuccess;
}

int cmd_rate(const Options& opt, std::ostream& out) {
    SystemState state = load_state(opt.in.state_path);
    PriceOracle oracle = load_oracle(opt.in.oracle_path);
    auto [t0, t1] = pair_of(opt.in);
    print(out, {{"pair", {t0.symbol(), t1.symbol()}},
                {"internal", internal_rate(state, t0, t1).value()},
                {"external", external_rate(oracle, t0, t1).value()}});
    return kSuccess;
}

double search_upper_bound(double x_equil, double phi) {
    return x_equil / phi + std::max(1.0, x_equil);
}

int cmd_arbitrage(const Options& opt, std::ostream& out, std::ostream& err) {
    SystemState state = load_state(opt.in.state_path);
    PriceOracle oracle = load_oracle(opt.in.oracle_path);
    auto [t0, t1] = pair_of(opt.in);
    ArbitrageSolution sol = solve_arbitrage(state, oracle, t0, t1, opt.in.sender);

    auto optional_number = [](const std::optional<double>& v) -> json { return v ? json(*v) : json(nullptr); };
    json doc = {{"direction", {sol.token_in.symbol(), sol.token_out.symbol()}},
                {"x_equil", optional_number(sol.x_equil)},
                {"x_max", optional_number(sol.x_max)},
                {"gain", sol.gain},
                {"enabled", sol.enabled}};

    int code = kSuccess;
    if (opt.verify) {
        json verify = {{"tolerance", opt.verify_tol}};
        if (sol.x_max) {
            SwapGainFunction g(state, oracle, opt.in.sender, sol.token_in, sol.token_out);
            double hi = search_upper_bound(sol.x_equil.value_or(*sol.x_max), g.fee().value());
            oracle::ScalarFunction f{[&g](double x) { return g(x); }, 0.0, hi};
            auto best = oracle::golden_max(f, 0.0, hi);
            double discrepancy = std::abs(best.x - *sol.x_max) / *sol.x_max;
            verify["oracle_x_max"] = best.x;
            verify["oracle_gain"] = best.value;
            verify["relative_discrepancy"] = discrepancy;
            if (!(discrepancy <= opt.verify_tol)) code = kVerificationFailure;
        } else {
            // No mispricing: no positive swap in either direction may gain.
            double best_gain = 0.0;
            for (auto [a, b] : {std::pair{t0, t1}, std::pair{t1, t0}}) {
                SwapGainFunction g(state, oracle, opt.in.sender, a, b);
                oracle::ScalarFunction f{[&g](double x) { return g(x); }, 0.0, g.reserve_in()};
                best_gain = std::max(best_gain, oracle::golden_max(f, 0.0, g.reserve_in()).value);
            }
            verify["oracle_gain"] = best_gain;
            if (best_gain > 0.0) code = kVerificationFailure;
        }
        doc["verify"] = verify;
    }
    print(out, doc);
    if (code != kSuccess) err << "verification discrepancy exceeds tolerance\n";
    return code;
}

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_gain_curve(const Options& opt, std::ostream& out) {
    SystemState state = load_state(opt.in.state_path);
    PriceOracle oracle = load_oracle(opt.in.oracle_path);
    auto [t0, t1] = pair_of(opt.in);
    auto samples = gain_curve(state, oracle, opt.in.sender, t0, t1, opt.x_min, opt.x_max, opt.steps);
    ArbitrageSolution sol = solve_arbitrage(state, oracle, t0, t1, opt.in.sender);

    std::ofstream csv(opt.out_path);
    if (!csv) throw Error(ErrorCode::IoError, "cannot write " + opt.out_path);
    csv << "x,gain\n";
    for (const auto& s : samples) csv << full_precision(s.x) << ',' << full_precision(s.gain) << '\n';
    if (sol.has_arbitrage() && sol.token_in == t0) {
        if (sol.x_equil) csv << "#x_equil," << full_precision(*sol.x_equil) << '\n';
        csv << "#x_max," << full_precision(*sol.x_max) << '\n';
    }
    if (!csv.flush()) throw Error(ErrorCode::IoError, "failed writing " + opt.out_path);
    print(out, {{"out", opt.out_path}, {"rows", samples.size()}});
    return kSuccess;
}

struct Case {
    uniswap::UintAmount amount_in;
    uniswap::UintAmount reserve_in;
    uniswap::UintAmount reserve_out;
};

uniswap::UintAmount amount_field(const json& c, const char* key, const std::string& base) {
    auto path = base + "." + key;
    if (!c.is_object() || !c.contains(key)) throw Error(ErrorCode::ParseError, path + ": missing");
    const json& v = c[key];
    if (v.is_string()) {
        try {
            return uniswap::UintAmount::parse(v.get<std::string>());
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, path + ": " + e.what());
        }
    }
    if (v.is_number_unsigned()) return uniswap::UintAmount(v.get<std::uint64_t>());
    throw Error(ErrorCode::ParseError, path + ": expected an unsigned integer or decimal string");
}

std::vector<Case> load_cases(const std::string& path) {
    json doc = io::read_json_file(path);
    if (!doc.is_array()) throw Error(ErrorCode::ParseError, "cases: expected an array");
    std::vector<Case> cases;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        auto base = "cases[" + std::to_string(i) + "]";
        cases.push_back({amount_field(doc[i], "amount_in", base), amount_field(doc[i], "reserve_in", base),
                         amount_field(doc[i], "reserve_out", base)});
    }
    return cases;
}

// A value with a uniformly chosen bit length in [1, 96], so every magnitude
// below 2^96 is exercised.
uniswap::UintAmount random_amount(std::mt19937_64& rng) {
    int bits = 1 + static_cast<int>(rng() % 96);
    uniswap::Uint256 v = 1;
    for (int i = 1; i < bits; ++i) v = (v << 1) | uniswap::Uint256(rng() & 1u);
    return uniswap::UintAmount(v);
}

std::vector<Case> random_cases(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Case> cases;
    cases.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto amount = random_amount(rng);
        auto reserve_in = random_amount(rng);
        auto reserve_out = random_amount(rng);
        cases.push_back({amount, reserve_in, reserve_out});
    }
    return cases;
}

int cmd_uniswap_check(const Options& opt, std::ostream& out, std::ostream& err) {
    std::vector<Case> cases;
    if (!opt.cases_path.empty()) {
        cases = load_cases(opt.cases_path);
    } else {
        if (!opt.random_cases || !opt.seed) {
            throw Error(ErrorCode::ParseError, "either --cases or both --random and --seed are required");
        }
        if (*opt.random_cases < 0) throw Error(ErrorCode::ParseError, "--random must be non-negative");
        cases = random_cases(*opt.random_cases, *opt.seed);
    }

    json report = json::array();
    std::size_t failures = 0;
    for (const auto& c : cases) {
        auto d = uniswap::differential_compare(c.amount_in, c.reserve_in, c.reserve_out);
        bool k_ok = uniswap::k_invariant_check(c.reserve_in + c.amount_in, c.reserve_out - d.integer_out,
                                               c.amount_in, 0, c.reserve_in, c.reserve_out);
        bool product_ok = uniswap::product_check(c.amount_in, d.integer_out, c.reserve_in, c.reserve_out);
        bool pass = k_ok && product_ok && std::abs(d.divergence) <= 1;
        if (!pass) ++failures;
        report.push_back({{"inputs",
                           {{"amount_in", c.amount_in.str()},
                            {"reserve_in", c.reserve_in.str()},
                            {"reserve_out", c.reserve_out.str()}}},
                          {"integer_out", d.integer_out.str()},
                          {"real_out_floor", d.real_out_floor.str()},
                          {"divergence", d.divergence},
                          {"k_check", k_ok},
                          {"pass", pass}});
    }

    if (opt.out_path.empty()) {
        out << report.dump(2) << '\n';
    } else {
        std::ofstream file(opt.out_path);
        if (!file) throw Error(ErrorCode::IoError, "cannot write " + opt.out_path);
        file << report.dump(2) << '\n';
        if (!file.flush()) throw Error(ErrorCode::IoError, "failed writing " + opt.out_path);
    }
    err << cases.size() << " cases, " << failures << " failures\n";
    return failures == 0 ? kSuccess : kVerificationFailure;
}

void add_inputs(CLI::App* cmd, Inputs& in, bool with_pair, bool with_sender) {
    cmd->add_option("--state", in.state_path, "State JSON document")->required();
    cmd->add_option("--oracle", in.oracle_path, "Oracle JSON document")->required();
    if (with_pair) {
        cmd->add_option("--pair", in.pair, "Token pair, input token first: T0,T1")
            ->required()
            ->delimiter(',')
            ->expected(2);
    }
    if (with_sender) cmd->add_option("--sender", in.sender, "Trading account")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fee-adjusted constant-product AMM toolkit", "feeamm"};
    app.require_subcommand(1);
    Options opt;

    auto* simulate = app.add_subcommand("simulate", "Replay a swap trace and report each step");
    add_inputs(simulate, opt.in, false, false);
    simulate->add_option("--trace", opt.trace_path, "Trace JSON document")->required();

    auto* rate = app.add_subcommand("rate", "Print internal and external exchange rates of a pair");
    add_inputs(rate, opt.in, true, false);

    auto* arbitrage = app.add_subcommand("arbitrage", "Solve for the gain-maximising swap");
    add_inputs(arbitrage, opt.in, true, true);
    arbitrage->add_flag("--verify", opt.verify, "Cross-check against a golden-section maximiser");
    arbitrage->add_option("--verify-tol", opt.verify_tol, "Relative tolerance for --verify")
        ->capture_default_str();

    auto* curve = app.add_subcommand("gain-curve", "Sample the sender gain as CSV");
    add_inputs(curve, opt.in, true, true);
    curve->add_option("--x-min", opt.x_min)->required();
    curve->add_option("--x-max", opt.x_max)->required();
    curve->add_option("--steps", opt.steps)->required();
    curve->add_option("--out", opt.out_path, "CSV output path")->required();

    auto* check = app.add_subcommand("uniswap-check", "Compare integer getAmountOut with the real model");
    check->add_option("--cases", opt.cases_path, "Case JSON document");
    check->add_option("--random", opt.random_cases, "Number of random cases");
    check->add_option("--seed", opt.seed, "Seed for --random");
    check->add_option("--out", opt.out_path, "Write the report here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidationFailure;
    }

    try {
        if (*simulate) return cmd_simulate(opt, out, err);
        if (*rate) return cmd_rate(opt, out);
        if (*arbitrage) return cmd_arbitrage(opt, out, err);
        if (*curve) return cmd_gain_curve(opt, out);
        if (*check) return cmd_uniswap_check(opt, out, err);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return *simulate ? exit_code_for(e) : (e.code() == ErrorCode::InsufficientBalance ? kDisabledTransaction
                                                                                           : kValidationFailure);
    }
    return kValidationFailure;
}

}  // namespace feeamm::cli
