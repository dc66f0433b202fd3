#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "feeamm/arbitrage.hpp"
#include "feeamm/json_io.hpp"
#include "feeamm/rates.hpp"
#include "feeamm/swap.hpp"
#include "feeamm/uniswap.hpp"

namespace py = pybind11;
using namespace feeamm;
using io::json;

namespace {

// Python ints of any size cross the boundary as decimal strings.
uniswap::UintAmount to_uint(const py::int_& value) {
    if (py::bool_(value < py::int_(0))) throw Error(ErrorCode::Underflow, "amount must be non-negative");
    return uniswap::UintAmount::parse(py::str(value));
}

py::int_ to_pyint(const uniswap::UintAmount& value) {
    return py::int_(py::module_::import("builtins").attr("int")(value.str()));
}

SystemState parse_state(const std::string& text) { return io::state_from_json(io::parse_json(text)); }
PriceOracle parse_oracle(const std::string& text) { return io::oracle_from_json(io::parse_json(text)); }

SwapTx parse_tx(const std::string& text) {
    return io::trace_from_json(json::array({io::parse_json(text)})).at(0);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fee-adjusted constant-product AMM model";
    py::register_exception<Error>(m, "AmmError", PyExc_ValueError);

    m.def("swap_rate", [](double phi, double x, double r0, double r1) { return swap_rate(FeeParam(phi), x, r0, r1); },
          py::arg("phi"), py::arg("x"), py::arg("r0"), py::arg("r1"));
    m.def("swap_output",
          [](double phi, double x, double r0, double r1) { return swap_output(FeeParam(phi), x, r0, r1); },
          py::arg("phi"), py::arg("x"), py::arg("r0"), py::arg("r1"));
    m.def("internal_rate", [](double phi, double r0, double r1) { return internal_rate(FeeParam(phi), r0, r1).value(); },
          py::arg("phi"), py::arg("r0"), py::arg("r1"));
    m.def("round_trip_output",
          [](double phi, double x, double r0, double r1) { return round_trip_output(FeeParam(phi), x, r0, r1); },
          py::arg("phi"), py::arg("x"), py::arg("r0"), py::arg("r1"));
    m.def("additivity_factor",
          [](double phi, double x, double y, double r0, double r1) {
              return additivity_factor(FeeParam(phi), x, y, r0, r1);
          },
          py::arg("phi"), py::arg("x"), py::arg("y"), py::arg("r0"), py::arg("r1"));
    m.def("equilibrium_value",
          [](double phi, double p0, double p1, double r0, double r1) {
              return equilibrium_value(FeeParam(phi), p0, p1, r0, r1);
          },
          py::arg("phi"), py::arg("p0"), py::arg("p1"), py::arg("r0"), py::arg("r1"));
    m.def("optimal_swap_value",
          [](double phi, double p0, double p1, double r0, double r1) {
              return optimal_swap_value(FeeParam(phi), p0, p1, r0, r1);
          },
          py::arg("phi"), py::arg("p0"), py::arg("p1"), py::arg("r0"), py::arg("r1"));

    m.def("_execute_swap",
          [](const std::string& state, const std::string& tx) {
              auto outcome = apply_swap(parse_state(state), parse_tx(tx));
              return py::make_tuple(io::to_json(outcome.state).dump(), outcome.amount_out);
          });
    m.def("_gain", [](const std::string& state, const std::string& oracle, const std::string& tx) {
        return gain(parse_state(state), parse_oracle(oracle), parse_tx(tx));
    });
    m.def("_wealth", [](const std::string& state, const std::string& oracle, const std::string& account) {
        return wealth(parse_state(state), parse_oracle(oracle), account);
    });
    m.def("_solve_arbitrage", [](const std::string& state, const std::string& oracle, const std::string& t0,
                                 const std::string& t1, const std::string& sender) {
        auto sol = solve_arbitrage(parse_state(state), parse_oracle(oracle), TokenId(t0), TokenId(t1), sender);
        py::dict out;
        out["direction"] = py::make_tuple(sol.token_in.symbol(), sol.token_out.symbol());
        out["x_equil"] = sol.x_equil;
        out["x_max"] = sol.x_max;
        out["gain"] = sol.gain;
        out["enabled"] = sol.enabled;
        return out;
    });

    m.def("get_amount_out",
          [](const py::int_& amount_in, const py::int_& reserve_in, const py::int_& reserve_out) {
              return to_pyint(uniswap::get_amount_out(to_uint(amount_in), to_uint(reserve_in), to_uint(reserve_out)));
          },
          py::arg("amount_in"), py::arg("reserve_in"), py::arg("reserve_out"));
    m.def("k_invariant_check",
          [](const py::int_& b0, const py::int_& b1, const py::int_& a0, const py::int_& a1, const py::int_& r0,
             const py::int_& r1) {
              return uniswap::k_invariant_check(to_uint(b0), to_uint(b1), to_uint(a0), to_uint(a1), to_uint(r0),
                                                to_uint(r1));
          },
          py::arg("balance0"), py::arg("balance1"), py::arg("amount0_in"), py::arg("amount1_in"),
          py::arg("reserve0"), py::arg("reserve1"));
    m.def("differential_compare",
          [](const py::int_& amount_in, const py::int_& reserve_in, const py::int_& reserve_out) {
              auto d = uniswap::differential_compare(to_uint(amount_in), to_uint(reserve_in), to_uint(reserve_out));
              py::dict out;
              out["integer_out"] = to_pyint(d.integer_out);
              out["real_out_floor"] = to_pyint(d.real_out_floor);
              out["divergence"] = d.divergence;
              return out;
          },
          py::arg("amount_in"), py::arg("reserve_in"), py::arg("reserve_out"));
}
