#pragma once

#include <cmath>
#include <functional>

#include "omitread/mat2.hpp"

namespace omitread {

// Dormand-Prince 5(4) adaptive step integrator for a complex 2-vector.
// Used as the independent time-stepping oracle for the closed-form
// propagator; it must not share code with expm2.
inline Vec2c ode45(const std::function<Vec2c(double, const Vec2c&)>& f,
                   Vec2c y, double t0, double t1, double rel_tol = 1e-10,
                   double abs_tol = 1e-14) {
    auto axpy = [](const Vec2c& y0, double h, std::initializer_list<std::pair<double, const Vec2c*>> terms) {
        Vec2c r = y0;
        for (const auto& [c, k] : terms) {
            r.a += h * c * k->a;
            r.b += h * c * k->b;
        }
        return r;
    };

    double t = t0;
    double h = (t1 - t0) * 1e-3;
    const double hmin = (t1 - t0) * 1e-14;
    while (t < t1) {
        if (t + h > t1) h = t1 - t;
        const Vec2c k1 = f(t, y);
        const Vec2c k2 = f(t + h / 5.0, axpy(y, h, {{1.0 / 5, &k1}}));
        const Vec2c k3 = f(t + 3.0 * h / 10.0, axpy(y, h, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}));
        const Vec2c k4 = f(t + 4.0 * h / 5.0, axpy(y, h, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}}));
        const Vec2c k5 = f(t + 8.0 * h / 9.0,
                           axpy(y, h, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2}, {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}}));
        const Vec2c k6 = f(t + h,
                           axpy(y, h, {{9017.0 / 3168, &k1}, {-355.0 / 33, &k2}, {46732.0 / 5247, &k3}, {49.0 / 176, &k4}, {-5103.0 / 18656, &k5}}));
        const Vec2c y5 = axpy(y, h, {{35.0 / 384, &k1}, {500.0 / 1113, &k3}, {125.0 / 192, &k4}, {-2187.0 / 6784, &k5}, {11.0 / 84, &k6}});
        const Vec2c k7 = f(t + h, y5);
        const Vec2c y4 = axpy(y, h,
                              {{5179.0 / 57600, &k1}, {7571.0 / 16695, &k3}, {393.0 / 640, &k4}, {-92097.0 / 339200, &k5}, {187.0 / 2100, &k6}, {1.0 / 40, &k7}});

        const double err = std::hypot(std::abs(y5.a - y4.a), std::abs(y5.b - y4.b));
        const double scale = abs_tol + rel_tol * std::max({std::abs(y.a), std::abs(y.b), std::abs(y5.a), std::abs(y5.b), 1e-30});
        if (err <= scale || h <= hmin) {
            t += h;
            y = y5;
        }
        const double fac = (err > 0.0) ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, fac));
        if (h < hmin) h = hmin;
    }
    return y;
}

} // namespace omitread
