#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace wlab::roots {

// Bisection on a bracketing interval [lo, hi] of the predicate `left_side`:
// left_side(lo) is true, left_side(hi) is false. Returns the midpoint once the
// bracket is narrower than `xtol`.
inline double bisect_predicate(const std::function<bool(double)>& left_side, double lo, double hi,
                               double xtol) {
    for (int iter = 0; iter < 200 && hi - lo > xtol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (left_side(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Sign scan of f over `samples` interior points of (lo, hi), then bisection of
// each bracket to `xtol`. Values with |f| <= zero_band count as zero and never
// open a bracket, so identically-equal curves yield no roots.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                                      int samples, double xtol, double zero_band) {
    std::vector<double> roots;
    auto sign = [&](double v) { return std::abs(v) <= zero_band ? 0 : (v > 0 ? 1 : -1); };

    double last_x = 0.0;
    int last_sign = 0;
    for (int i = 1; i <= samples; ++i) {
        const double x = lo + (hi - lo) * i / (samples + 1.0);
        const int s = sign(f(x));
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
            const int left = last_sign;
            roots.push_back(bisect_predicate([&](double t) { return sign(f(t)) == left; }, last_x, x, xtol));
        }
        last_x = x;
        last_sign = s;
    }
    return roots;
}

}  // namespace wlab::roots
