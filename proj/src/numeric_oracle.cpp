#include "feeamm/numeric_oracle.hpp"

#include <cmath>

#include "feeamm/error.hpp"

namespace feeamm::oracle {

namespace {

void check_interval(const ScalarFunction& f, double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw Error(ErrorCode::InvalidInterval, "interval needs finite lo < hi");
    }
    if (!f.covers(lo, hi)) {
        throw Error(ErrorCode::InvalidInterval, "interval leaves the function's domain");
    }
}

bool opposite_signs(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

}  // namespace

RootResult bisect_root(const ScalarFunction& f, double lo, double hi, double tol_x) {
    check_interval(f, lo, hi);
    if (!(tol_x > 0.0)) throw Error(ErrorCode::InvalidInterval, "tolerance must be positive");
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0.0) return {lo, 0};
    if (f_hi == 0.0) return {hi, 0};
    if (!opposite_signs(f_lo, f_hi)) {
        throw Error(ErrorCode::NoSignChange, "f(lo) and f(hi) have the same sign");
    }

    int iterations = 0;
    while (hi - lo > tol_x) {
        double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;  // bracket is one ulp wide
        ++iterations;
        double f_mid = f(mid);
        if (f_mid == 0.0) return {mid, iterations};
        if (opposite_signs(f_lo, f_mid)) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return {lo + (hi - lo) / 2.0, iterations};
}

std::optional<double> expand_bracket(const ScalarFunction& f, double lo, double initial_hi,
                                     double limit) {
    double f_lo = f(lo);
    for (double hi = initial_hi; hi <= limit && hi <= f.domain_hi; hi *= 2.0) {
        double f_hi = f(hi);
        if (f_hi == 0.0 || opposite_signs(f_lo, f_hi)) return hi;
    }
    return std::nullopt;
}

MaxResult golden_max(const ScalarFunction& f, double lo, double hi, double tol_x) {
    check_interval(f, lo, hi);
    if (!(tol_x > 0.0)) throw Error(ErrorCode::InvalidInterval, "tolerance must be positive");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol_x) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            if (!(c > a && c < d)) break;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            if (!(d > c && d < b)) break;
            fd = f(d);
        }
    }

    MaxResult best = fc >= fd ? MaxResult{c, fc} : MaxResult{d, fd};
    // A maximum on the boundary is reported at the boundary itself.
    for (double endpoint : {lo, hi}) {
        double value = f(endpoint);
        if (value > best.value) best = {endpoint, value};
    }
    return best;
}

MaxResult grid_scan_max(const ScalarFunction& f, double lo, double hi, int steps) {
    if (steps < 2) throw Error(ErrorCode::InvalidInterval, "grid needs at least two points");
    check_interval(f, lo, hi);
    MaxResult best{lo, f(lo)};
    for (int i = 1; i < steps; ++i) {
        double x = i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1);
        double value = f(x);
        if (value > best.value) best = {x, value};
    }
    return best;
}

}  // namespace feeamm::oracle
