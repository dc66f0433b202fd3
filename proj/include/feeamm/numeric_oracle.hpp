#pragma once

#include <functional>
#include <optional>

// Derivative-free scalar solvers used to cross-check closed forms. Nothing in
// here depends on the AMM formulas.
namespace feeamm::oracle {

struct ScalarFunction {
    std::function<double(double)> fn;
    double domain_lo;
    double domain_hi;

    double operator()(double x) const { return fn(x); }
    bool covers(double lo, double hi) const { return lo >= domain_lo && hi <= domain_hi; }
};

struct RootResult {
    double x;
    int iterations;
};

struct MaxResult {
    double x;
    double value;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kMaxTolerance = 1e-10;

// Bisection on a sign-changing bracket. Stops once the bracket is narrower
// than tol_x or cannot be split further in double precision.
RootResult bisect_root(const ScalarFunction& f, double lo, double hi,
                       double tol_x = kRootTolerance);

// Doubles hi starting from initial_hi until f(lo) and f(hi) differ in sign.
// Returns nullopt once hi exceeds limit.
std::optional<double> expand_bracket(const ScalarFunction& f, double lo, double initial_hi,
                                     double limit);

// Golden-section search for the maximum of a unimodal function.
MaxResult golden_max(const ScalarFunction& f, double lo, double hi,
                     double tol_x = kMaxTolerance);

// Best value on steps uniformly spaced points including both endpoints.
MaxResult grid_scan_max(const ScalarFunction& f, double lo, double hi, int steps);

}  // namespace feeamm::oracle
