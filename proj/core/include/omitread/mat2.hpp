#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace omitread {

using cplx = std::complex<double>;

struct Vec2c {
    cplx a{0.0}, b{0.0};
};

struct Mat2c {
    cplx m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

    friend Mat2c operator*(const Mat2c& x, const Mat2c& y) {
        return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
                x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
    }
    friend Vec2c operator*(const Mat2c& x, const Vec2c& v) {
        return {x.m00 * v.a + x.m01 * v.b, x.m10 * v.a + x.m11 * v.b};
    }
    friend Mat2c operator*(cplx s, const Mat2c& x) {
        return {s * x.m00, s * x.m01, s * x.m10, s * x.m11};
    }
    friend Mat2c operator+(const Mat2c& x, const Mat2c& y) {
        return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
    }
    friend Mat2c operator-(const Mat2c& x, const Mat2c& y) {
        return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
    }

    cplx det() const { return m00 * m11 - m01 * m10; }

    Mat2c inverse() const {
        const cplx d = det();
        return {m11 / d, -m01 / d, -m10 / d, m00 / d};
    }
};

// sinh(z)/z with a series fallback near z = 0.
inline cplx sinhc(cplx z) {
    const double az = std::abs(z);
    if (az < 1e-4) {
        const cplx z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}

// exp(z) - 1 - z, stable for small |z| (leading term z^2/2).
inline cplx expm1m(cplx z) {
    if (std::abs(z) < 0.5) {
        // sum_{k>=2} z^k/k!
        cplx term = z * z / 2.0;
        cplx sum = term;
        for (int k = 3; k <= 24; ++k) {
            term *= z / static_cast<double>(k);
            sum += term;
            if (std::abs(term) < 1e-20 * (1.0 + std::abs(sum))) break;
        }
        return sum;
    }
    return std::exp(z) - 1.0 - z;
}

// exp(M t) for a 2x2 complex matrix, via the traceless split
// M = mu*I + B, exp(Mt) = e^{mu t} [cosh(s t) I + sinhc(s t) t B],
// s^2 = det(-B) ... = b^2 - c01*c10 with B = [[b, c01],[c10, -b]].
// For large |Re(s t)| the cosh/sinh pair is reassembled from the two
// exponentials e^{(mu±s)t} to avoid overflow before cancellation.
inline Mat2c expm2(const Mat2c& m, double t) {
    const cplx mu = 0.5 * (m.m00 + m.m11);
    const cplx b = 0.5 * (m.m00 - m.m11);
    const cplx s = std::sqrt(b * b + m.m01 * m.m10);
    const cplx st = s * t;

    if (std::abs(st.real()) < 30.0) {
        const cplx emu = std::exp(mu * t);
        const cplx ch = std::cosh(st);
        const cplx sh_over_s = t * sinhc(st); // = sinh(st)/s
        return {emu * (ch + b * sh_over_s), emu * (m.m01 * sh_over_s),
                emu * (m.m10 * sh_over_s), emu * (ch - b * sh_over_s)};
    }
    const cplx ep = std::exp((mu + s) * t);
    const cplx em = std::exp((mu - s) * t);
    const cplx ch = 0.5 * (ep + em);
    const cplx sh_over_s = 0.5 * (ep - em) / s;
    return {ch + b * sh_over_s, m.m01 * sh_over_s,
            m.m10 * sh_over_s, ch - b * sh_over_s};
}

} // namespace omitread
