#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace omitread {

// First upward crossing of f(x) = level on [a, b] with f(a) < level <= f(b).
// The bracket is first scanned on a uniform grid so that an early crossing
// is not skipped when f is non-monotone, then refined by bisection.
inline double first_crossing(const std::function<double(double)>& f, double a,
                             double b, double level, double rel_tol,
                             int scan_points = 64) {
    double lo = a, hi = b;
    double flo = f(lo);
    // locate the first sub-interval containing a crossing
    for (int i = 1; i <= scan_points; ++i) {
        const double x = a + (b - a) * (static_cast<double>(i) / scan_points);
        const double fx = f(x);
        if (flo < level && fx >= level) {
            lo = a + (b - a) * (static_cast<double>(i - 1) / scan_points);
            hi = x;
            break;
        }
        flo = fx;
        if (i == scan_points) { lo = a; hi = b; } // fall back to full bracket
    }
    while ((hi - lo) > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= level)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimization on [a, b]; terminates when the bracket width
// falls below rel_tol relative to the midpoint.
inline double golden_min(const std::function<double(double)>& f, double a,
                         double b, double rel_tol) {
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > rel_tol * (std::abs(a) + std::abs(b)) * 0.5) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
        if (b - a <= 0) break;
    }
    return 0.5 * (a + b);
}

} // namespace omitread
