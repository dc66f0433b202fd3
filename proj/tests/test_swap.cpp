#include <catch_amalgamated.hpp>

#include "feeamm/swap.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"
#include "support/swap_oracles.hpp"

using namespace feeamm;
using namespace feeamm::testing;
using Catch::Approx;

TEST_CASE("swap_rate reproduces the worked example", "[swap]") {
    CHECK(10.0 * swap_rate(FeeParam(0.997), 10, 40, 60) == Approx(11.97).margin(0.005));
    CHECK(swap_rate(FeeParam(1.0), 10, 40, 60) == Approx(1.2).epsilon(1e-15));
    CHECK(swap_output(FeeParam(1.0), 10, 40, 60) == Approx(12.0).epsilon(1e-15));
    CHECK(swap_output(FeeParam(0.997), 100, 400, 600) == Approx(119.712).margin(0.001));
}

TEST_CASE("swap_rate at zero input is the internal rate", "[swap]") {
    CHECK(swap_rate(FeeParam(0.997), 0.0, 40, 60) == Approx(0.997 * 60 / 40).epsilon(1e-15));
}

TEST_CASE("swap_rate rejects out-of-domain arguments", "[swap]") {
    CHECK_THROWS_AS(swap_rate(FeeParam(1.0), -1.0, 40, 60), Error);
    CHECK_THROWS_AS(swap_rate(FeeParam(1.0), 1.0, 0.0, 60), Error);
    CHECK_THROWS_AS(swap_rate(FeeParam(1.0), 1.0, 40, -1.0), Error);
    CHECK_THROWS_AS(swap_rate(FeeParam(1.0), NAN, 40, 60), Error);
}

TEST_CASE("quote_swap bundles rate and output", "[swap]") {
    auto q = quote_swap(FeeParam(0.997), 10, 40, 60);
    CHECK(q.amount_out == Approx(10 * q.rate));
    CHECK(q.amount_out < 60.0);
}

TEST_CASE("execute_swap reproduces the worked transition", "[swap]") {
    SECTION("with the 0.3% fee") {
        auto next = execute_swap(pool_40_60_state(0.997), SwapTx("A", 10, T0, T1));
        CHECK(balance_of(next, "A", T0) == Approx(20.0).margin(0.005));
        CHECK(balance_of(next, "A", T1) == Approx(31.97).margin(0.005));
        auto pool = *lookup_pool(next, T0, T1);
        CHECK(pool.reserve_in == Approx(50.0).margin(0.005));
        CHECK(pool.reserve_out == Approx(48.03).margin(0.005));
    }
    SECTION("without fee") {
        auto next = execute_swap(pool_40_60_state(1.0), SwapTx("A", 10, T0, T1));
        CHECK(balance_of(next, "A", T0) == Approx(20.0).epsilon(1e-12));
        CHECK(balance_of(next, "A", T1) == Approx(32.0).epsilon(1e-12));
        auto pool = *lookup_pool(next, T0, T1);
        CHECK(pool.reserve_in == Approx(50.0).epsilon(1e-12));
        CHECK(pool.reserve_out == Approx(48.0).epsilon(1e-12));
    }
    SECTION("the original state is untouched") {
        auto state = pool_40_60_state();
        auto next = execute_swap(state, SwapTx("A", 10, T0, T1));
        CHECK(balance_of(state, "A", T0) == 30.0);
        CHECK(lookup_pool(state, T0, T1)->reserve_in == 40.0);
        (void)next;
    }
}

TEST_CASE("execute_swap in the reverse direction", "[swap]") {
    auto next = execute_swap(pool_40_60_state(1.0), SwapTx("A", 20, T1, T0));
    // 20 * 40 / (60 + 20) = 10
    CHECK(balance_of(next, "A", T0) == Approx(40.0).epsilon(1e-12));
    CHECK(balance_of(next, "A", T1) == Approx(0.0).margin(1e-12));
    auto pool = *lookup_pool(next, T0, T1);
    CHECK(pool.reserve_in == Approx(30.0).epsilon(1e-12));
    CHECK(pool.reserve_out == Approx(80.0).epsilon(1e-12));
}

TEST_CASE("execute_swap error paths", "[swap]") {
    auto state = pool_40_60_state();
    try {
        execute_swap(state, SwapTx("A", 1000, T0, T1));
        FAIL("expected InsufficientBalance");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsufficientBalance);
    }
    try {
        execute_swap(state, SwapTx("A", 1, T0, T2));
        FAIL("expected NoPool");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoPool);
    }
}

TEST_CASE("round trips lose value exactly when a fee is charged", "[swap]") {
    CHECK(round_trip_output(FeeParam(1.0), 10, 40, 60) == Approx(10.0).epsilon(1e-12));
    CHECK(round_trip_output(FeeParam(0.997), 10, 40, 60) < 10.0);
    CHECK(round_trip_output(FeeParam(0.9), 1, 10, 30) < 1.0);
}

TEST_CASE("additivity_factor matches the two-swap identity", "[swap]") {
    struct Case { double phi, x, y, r0, r1; };
    for (auto c : {Case{0.997, 40, 60, 400, 600}, Case{0.5, 1, 1, 100, 100}, Case{0.9, 3, 7, 10, 30}}) {
        FeeParam fee(c.phi);
        double z = additivity_factor(fee, c.x, c.y, c.r0, c.r1);
        CHECK(z == Approx(additivity_factor_oracle(fee, c.x, c.y, c.r0, c.r1)).epsilon(1e-12));
        CHECK(z > 1.0);
    }
    CHECK(additivity_factor(FeeParam(1.0), 40, 60, 400, 600) == Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(additivity_factor(FeeParam(0.9), 0.0, 1, 10, 30), Error);
}

TEST_CASE("output is bounded by the reserve", "[swap][property]") {
    Rng rng(11);
    for (int i = 0; i < 10000; ++i) {
        FeeParam fee(rng.uniform(0.01, 1.0));
        double r0 = rng.log_uniform(1e-6, 1e9);
        double r1 = rng.log_uniform(1e-6, 1e9);
        double x = i % 3 == 0 ? 1e9 * r0 : i % 3 == 1 ? 0.0 : rng.log_uniform(1e-9, 1e6) * r0;
        REQUIRE(x * swap_rate(fee, x, r0, r1) < r1);
    }
}

TEST_CASE("swap_rate is strictly monotonic under all eight orderings", "[swap][property]") {
    Rng rng(12);
    for (int mask = 0; mask < 8; ++mask) {
        // Bit i set: relation i is strict, otherwise it is weak (possibly equal).
        const bool strict_x = mask & 1, strict_r0 = mask & 2, strict_r1 = mask & 4;
        const bool any_strict = mask != 0;
        for (int i = 0; i < 2000; ++i) {
            FeeParam fee(rng.uniform(0.05, 1.0));
            double r0 = rng.log_uniform(1e-2, 1e6);
            double r1 = rng.log_uniform(1e-2, 1e6);
            double x = rng.log_uniform(1e-3, 1e3) * r0;
            auto shrink = [&](double v, bool strict) {
                if (!strict && rng.coin()) return v;
                return v * (1.0 - rng.uniform(1e-6, 0.9));
            };
            auto grow = [&](double v, bool strict) {
                if (!strict && rng.coin()) return v;
                return v * (1.0 + rng.uniform(1e-6, 10.0));
            };
            double x2 = shrink(x, strict_x);
            double r0_2 = shrink(r0, strict_r0);
            double r1_2 = grow(r1, strict_r1);
            double lhs = swap_rate(fee, x, r0, r1);
            double rhs = swap_rate(fee, x2, r0_2, r1_2);
            if (any_strict) {
                REQUIRE(lhs < rhs);
            } else {
                REQUIRE(lhs <= rhs);
            }
        }
    }
}

TEST_CASE("reserve product grows with a fee and is preserved without", "[swap][property]") {
    Rng rng(13);
    for (int i = 0; i < 10000; ++i) {
        bool feeless = i % 2 == 0;
        double phi = feeless ? 1.0 : rng.uniform(0.5, 0.9999);
        double r0 = rng.log_uniform(1, 1e6);
        double r1 = rng.log_uniform(1, 1e6);
        double x = rng.log_uniform(1e-3, 10.0) * r0;
        auto state = two_token_state(x, 0.0, r0, r1, phi);
        auto next = execute_swap(state, SwapTx("A", x, T0, T1));
        auto pool = *lookup_pool(next, T0, T1);
        double before = r0 * r1;
        double after = pool.reserve_in * pool.reserve_out;
        if (feeless) {
            REQUIRE(rel_diff(after, before) <= 1e-12);
        } else {
            REQUIRE(after > before);
        }
    }
}

TEST_CASE("Z identity and fee penalty over random instances", "[swap][property]") {
    Rng rng(14);
    for (int i = 0; i < 10000; ++i) {
        FeeParam fee(i % 10 == 0 ? 1.0 : rng.uniform(0.5, 0.9999));
        double r0 = rng.log_uniform(1, 1e6);
        double r1 = rng.log_uniform(1, 1e6);
        double x = rng.log_uniform(1e-3, 10.0) * r0;
        double y = rng.log_uniform(1e-3, 10.0) * r0;
        double z = additivity_factor(fee, x, y, r0, r1);
        REQUIRE(rel_diff(z, additivity_factor_oracle(fee, x, y, r0, r1)) <= 1e-12);
        if (fee.feeless()) {
            REQUIRE(rel_diff(z, 1.0) <= 1e-12);
        } else {
            REQUIRE(z > 1.0);
            REQUIRE(swap_output(fee, x + y, r0, r1) > split_output(fee, x, y, r0, r1));
        }
    }
}

TEST_CASE("round trips never gain", "[swap][property]") {
    Rng rng(15);
    for (int i = 0; i < 10000; ++i) {
        bool feeless = i % 4 == 0;
        FeeParam fee(feeless ? 1.0 : rng.uniform(0.5, 0.9999));
        double r0 = rng.log_uniform(1, 1e6);
        double r1 = rng.log_uniform(1, 1e6);
        double x = rng.log_uniform(1e-3, 10.0) * r0;
        double back = round_trip_output(fee, x, r0, r1);
        if (feeless) {
            REQUIRE(rel_diff(back, x) <= 1e-12);
        } else {
            REQUIRE(back < x);
        }
    }
}

TEST_CASE("random trade sequences keep reserves positive and conserve tokens", "[swap][property]") {
    Rng rng(16);
    for (int run = 0; run < 200; ++run) {
        double phi = rng.uniform(0.5, 1.0);
        SystemState state({Pool(T0, T1, rng.log_uniform(1, 1e4), rng.log_uniform(1, 1e4), FeeParam(phi), 10)},
                          {Wallet("A", {{T0, 1e5}, {T1, 1e5}}), Wallet("B", {{T0, 5e4}, {T1, 2e5}})});
        const double supply0 = total_supply(state, T0);
        const double supply1 = total_supply(state, T1);
        for (int step = 0; step < 50; ++step) {
            AccountId who = rng.coin() ? "A" : "B";
            bool forward = rng.coin();
            const TokenId& in = forward ? T0 : T1;
            const TokenId& out = forward ? T1 : T0;
            double held = balance_of(state, who, in);
            if (held <= 0.0) continue;
            double amount = held * rng.uniform(1e-4, 0.5);
            state = execute_swap(state, SwapTx(who, amount, in, out));
            auto pool = *lookup_pool(state, T0, T1);
            REQUIRE(pool.reserve_in > 0.0);
            REQUIRE(pool.reserve_out > 0.0);
            REQUIRE(rel_diff(total_supply(state, T0), supply0) <= 1e-12);
            REQUIRE(rel_diff(total_supply(state, T1), supply1) <= 1e-12);
        }
    }
}
