#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "feeamm/cli.hpp"
#include "feeamm/json_io.hpp"

using feeamm::io::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = feeamm::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmp_file(const std::string& name, const std::string& content) {
    fs::path dir(FEEAMM_TEST_TMPDIR);
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
}

std::string state_doc(double a0, double a1, double r0, double r1, double fee) {
    json doc = {{"pools", {{{"token0", "T0"}, {"token1", "T1"}, {"r0", r0}, {"r1", r1}, {"fee", fee},
                            {"minted_supply", 100}}}},
                {"wallets", {{{"owner", "A"}, {"balances", {{"T0", a0}, {"T1", a1}}}}}}};
    return doc.dump();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

const fs::path& oracle_path() {
    static const fs::path p = tmp_file("oracle.json", R"({"prices": {"T0": 4, "T1": 5}})");
    return p;
}

}  // namespace

TEST_CASE("simulate replays a swap on the 40/60 pool", "[cli]") {
    auto state = tmp_file("ex1_state.json", state_doc(30, 20, 40, 60, 0.997));
    auto trace = tmp_file("ex1_trace.json", R"([{"sender":"A","amount_in":10.0,"token_in":"T0","token_out":"T1"}])");
    auto r = run_cli({"simulate", "--state", state, "--oracle", oracle_path(), "--trace", trace});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    auto wallet = doc["final_state"]["wallets"][0]["balances"];
    CHECK(wallet["T0"].get<double>() == Catch::Approx(20.0));
    CHECK(wallet["T1"].get<double>() == Catch::Approx(31.97).margin(0.005));
    CHECK(doc["steps"][0]["amount_out"].get<double>() == Catch::Approx(11.9711827096).epsilon(1e-11));
    CHECK(doc["steps"].size() == 1);
}

TEST_CASE("simulate replays a split swap on the 400/600 pool", "[cli]") {
    auto state = tmp_file("ex4_state.json", state_doc(300, 200, 400, 600, 0.997));
    auto trace = tmp_file("ex4_trace.json",
                          R"([{"sender":"A","amount_in":40,"token_in":"T0","token_out":"T1"},
                              {"sender":"A","amount_in":60,"token_in":"T0","token_out":"T1"}])");
    auto r = run_cli({"simulate", "--state", state, "--oracle", oracle_path(), "--trace", trace});
    REQUIRE(r.code == 0);
    auto wallet = json::parse(r.out)["final_state"]["wallets"][0]["balances"];
    CHECK(wallet["T0"].get<double>() == Catch::Approx(200.0));
    CHECK(wallet["T1"].get<double>() == Catch::Approx(319.696).margin(0.001));
}

TEST_CASE("simulate stops at a disabled transaction", "[cli]") {
    auto state = tmp_file("ex1_state_b.json", state_doc(30, 20, 40, 60, 0.997));
    auto trace = tmp_file("missing_pool.json", R"([{"sender":"A","amount_in":1,"token_in":"T0","token_out":"T9"}])");
    auto r = run_cli({"simulate", "--state", state, "--oracle", oracle_path(), "--trace", trace});
    CHECK(r.code == 2);
    CHECK(r.err.find("step 0") != std::string::npos);

    auto broke = tmp_file("too_much.json", R"([{"sender":"A","amount_in":1,"token_in":"T0","token_out":"T1"},
                                               {"sender":"A","amount_in":100,"token_in":"T0","token_out":"T1"}])");
    r = run_cli({"simulate", "--state", state, "--oracle", oracle_path(), "--trace", broke});
    CHECK(r.code == 2);
    CHECK(r.err.find("step 1") != std::string::npos);
}

TEST_CASE("simulate rejects invalid input files", "[cli]") {
    auto bad = tmp_file("bad_state.json", state_doc(30, 20, -40, 60, 0.997));
    auto trace = tmp_file("empty_trace.json", "[]");
    auto r = run_cli({"simulate", "--state", bad, "--oracle", oracle_path(), "--trace", trace});
    CHECK(r.code == 1);
    CHECK(r.err.find("pools[0].r0") != std::string::npos);

    r = run_cli({"simulate", "--state", "/nonexistent.json", "--oracle", oracle_path(), "--trace", trace});
    CHECK(r.code == 1);
    CHECK(run_cli({"simulate"}).code == 1);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("rate prints internal and external rates", "[cli]") {
    auto state = tmp_file("ex2_state.json", state_doc(30, 20, 40, 60, 0.997));
    auto r = run_cli({"rate", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["internal"].get<double>() == 1.4955);
    CHECK(doc["external"].get<double>() == 0.8);
}

TEST_CASE("arbitrage solves and verifies the 10/30 pool", "[cli]") {
    auto state = tmp_file("ex5_state.json", state_doc(30, 20, 10, 30, 0.9));
    auto r = run_cli({"arbitrage", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                      "--verify"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["x_max"].get<double>() == Catch::Approx(9.3013).margin(1e-4));
    CHECK(doc["x_equil"].get<double>() == Catch::Approx(8.81732863796).epsilon(1e-11));
    CHECK(doc["direction"] == json({"T0", "T1"}));
    CHECK(doc["enabled"] == true);
    CHECK(doc["verify"]["relative_discrepancy"].get<double>() <= 1e-6);

    r = run_cli({"arbitrage", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                 "--verify", "--verify-tol", "0"});
    CHECK(r.code == 3);
}

TEST_CASE("arbitrage on a balanced pool reports nothing", "[cli]") {
    auto state = tmp_file("balanced.json", state_doc(30, 20, 40, 32, 1.0));
    auto r = run_cli({"arbitrage", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                      "--verify"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"x_max\": null") != std::string::npos);
}

TEST_CASE("arbitrage errors", "[cli]") {
    auto state = tmp_file("ex5_state_b.json", state_doc(30, 20, 10, 30, 0.9));
    CHECK(run_cli({"arbitrage", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T9", "--sender", "A"})
              .code == 1);
    auto partial = tmp_file("partial_oracle.json", R"({"prices": {"T0": 4}})");
    CHECK(run_cli({"arbitrage", "--state", state, "--oracle", partial, "--pair", "T0,T1", "--sender", "A"}).code ==
          1);
}

TEST_CASE("gain-curve writes the 10/30 pool curve", "[cli]") {
    auto state = tmp_file("ex5_state_c.json", state_doc(30, 20, 10, 30, 0.9));
    auto csv = fs::path(FEEAMM_TEST_TMPDIR) / "curve.csv";
    auto r = run_cli({"gain-curve", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                      "--x-min", "0", "--x-max", "30", "--steps", "3000", "--out", csv});
    REQUIRE(r.code == 0);

    std::ifstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,gain");
    std::vector<std::pair<double, double>> rows;
    double marker_x_max = 0;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        if (line.rfind("#x_max,", 0) == 0) marker_x_max = std::stod(line.substr(comma + 1));
        if (line[0] == '#') continue;
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    REQUIRE(rows.size() == 3000);
    auto best = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.second < b.second; });
    CHECK(best->first == Catch::Approx(9.30).margin(0.02));
    CHECK(marker_x_max == Catch::Approx(9.301303412082040).epsilon(1e-15));
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        REQUIRE(2 * rows[i].second >= rows[i - 1].second + rows[i + 1].second);
    }
}

TEST_CASE("gain-curve edge cases", "[cli]") {
    auto state = tmp_file("ex5_state_d.json", state_doc(30, 20, 10, 30, 0.9));
    auto csv = fs::path(FEEAMM_TEST_TMPDIR) / "curve2.csv";
    auto r = run_cli({"gain-curve", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                      "--x-min", "0", "--x-max", "30", "--steps", "2", "--out", csv});
    REQUIRE(r.code == 0);
    auto text = read_file(csv);
    int data_rows = 0;
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) data_rows += line[0] != '#';
    CHECK(data_rows == 2);

    r = run_cli({"gain-curve", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                 "--x-min", "0", "--x-max", "30", "--steps", "10", "--out", "/nonexistent/dir/curve.csv"});
    CHECK(r.code == 1);
    r = run_cli({"gain-curve", "--state", state, "--oracle", oracle_path(), "--pair", "T0,T1", "--sender", "A",
                 "--x-min", "5", "--x-max", "1", "--steps", "10", "--out", csv});
    CHECK(r.code == 1);
}

TEST_CASE("uniswap-check random cases pass and are reproducible", "[cli]") {
    auto first = fs::path(FEEAMM_TEST_TMPDIR) / "check1.json";
    auto second = fs::path(FEEAMM_TEST_TMPDIR) / "check2.json";
    auto r = run_cli({"uniswap-check", "--random", "10000", "--seed", "42", "--out", first});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("10000 cases, 0 failures") != std::string::npos);
    REQUIRE(run_cli({"uniswap-check", "--random", "10000", "--seed", "42", "--out", second}).code == 0);
    CHECK(read_file(first) == read_file(second));
    CHECK(json::parse(read_file(first)).size() == 10000);

    CHECK(run_cli({"uniswap-check", "--random", "10"}).code == 1);
}

TEST_CASE("uniswap-check curated cases", "[cli]") {
    auto cases = tmp_file("cases.json", R"([{"amount_in": "10000000000000000000",
                                            "reserve_in": "40000000000000000000",
                                            "reserve_out": "60000000000000000000"},
                                           {"amount_in": 10, "reserve_in": 40, "reserve_out": 60}])");
    auto r = run_cli({"uniswap-check", "--cases", cases});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc[0]["integer_out"] == "11971182709625775465");
    CHECK(doc[0]["pass"] == true);
    CHECK(doc[1]["k_check"] == true);

    auto malformed = tmp_file("malformed.json", R"([{"amount_in": "12x", "reserve_in": "1", "reserve_out": "1"}])");
    r = run_cli({"uniswap-check", "--cases", malformed});
    CHECK(r.code == 1);
    CHECK(r.err.find("cases[0].amount_in") != std::string::npos);
    CHECK(run_cli({"uniswap-check", "--cases", tmp_file("broken.json", "[{")}).code == 1);
}
