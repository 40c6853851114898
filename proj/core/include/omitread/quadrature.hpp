#pragma once

#include <cmath>
#include <functional>

#include "omitread/errors.hpp"

namespace omitread {

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double gk_wk[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double g_wg[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

struct GkEstimate {
    double integral;
    double error;
};

inline GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    const double f0 = f(c);
    resk += gk_wk[0] * f0;
    resg += g_wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double x = h * gk_nodes[i];
        const double fsum = f(c - x) + f(c + x);
        resk += gk_wk[i] * fsum;
        if (i % 2 == 0) resg += g_wg[i / 2] * fsum;
    }
    resk *= h;
    resg *= h;
    return {resk, std::pow(200.0 * std::abs(resk - resg), 1.5)};
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double tol_abs, int depth) {
    const auto est = gk15(f, a, b);
    if (est.error <= tol_abs || depth >= 48) {
        if (depth >= 48 && est.error > 1e3 * tol_abs)
            throw quadrature_error("adaptive quadrature failed to reach tolerance");
        return est.integral;
    }
    const double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * tol_abs, depth + 1) +
           adapt(f, mid, b, 0.5 * tol_abs, depth + 1);
}

} // namespace detail

// Adaptive Gauss-Kronrod integral of f on [a, b] to a relative tolerance
// (with an absolute floor scaled by a caller-provided magnitude).
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double scale_hint = 1.0) {
    if (b <= a) return 0.0;
    const auto first = detail::gk15(f, a, b);
    const double scale = std::max(std::abs(first.integral), scale_hint);
    const double tol = rel_tol * scale;
    if (first.error <= tol) return first.integral;
    return detail::adapt(f, a, b, tol, 0);
}

} // namespace omitread
