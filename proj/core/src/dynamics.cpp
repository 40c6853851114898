#include "omitread/dynamics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "omitread/quadrature.hpp"
#include "omitread/units.hpp"

namespace omitread {

namespace {

// Pump-frame drift matrix of the fluctuation/mean dynamics.
Mat2c drift_pump_frame(const SystemParams& sys, const DriveConfig& drive, double epsilon) {
    const double big_g = std::sqrt(drive.c_om * sys.kappa * sys.gamma_mech / 4.0);
    const cplx i1(0.0, 1.0);
    return {-(sys.kappa / 2.0) - i1 * sys.omega_m, i1 * big_g,
            i1 * big_g, -(sys.gamma_mech / 2.0) - i1 * (sys.omega_m + epsilon)};
}

// Gaussian elimination with partial pivoting, n = 4. Solves the vectorized
// 2x2 Lyapunov system; no pivoting subtleties at this size.
std::array<cplx, 4> solve4(std::array<std::array<cplx, 4>, 4> a, std::array<cplx, 4> rhs) {
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r = col + 1; r < 4; ++r) {
            const cplx f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<cplx, 4> x{};
    for (int r = 3; r >= 0; --r) {
        cplx s = rhs[r];
        for (int c = r + 1; c < 4; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

// Steady normal-ordered covariance M_ij = <dv_i^dag dv_j> of the
// fluctuations: conj(B) M + M B^T = -diag(0, Gamma n_th). The equal-time
// covariance is stationary (the probe only displaces the means), so M is
// a constant of the whole measurement record.
Mat2c steady_normal_covariance(const Mat2c& b, double gamma_mech, double n_th) {
    if (n_th == 0.0) return {};
    // unknown order: M00, M01, M10, M11
    const cplx b00 = std::conj(b.m00), b01 = std::conj(b.m01);
    const cplx b10 = std::conj(b.m10), b11 = std::conj(b.m11);
    std::array<std::array<cplx, 4>, 4> a{};
    // eq (i,j): sum_k conj(B)_{ik} M_{kj} + sum_k M_{ik} B_{jk} = -D_{ij}
    a[0] = {b00 + b.m00, b.m01, b01, 0.0};
    a[1] = {b.m10, b00 + b.m11, 0.0, b01};
    a[2] = {b10, 0.0, b11 + b.m00, b.m01};
    a[3] = {0.0, b10, b.m10, b11 + b.m11};
    const std::array<cplx, 4> rhs = {0.0, 0.0, 0.0, -gamma_mech * n_th};
    const auto m = solve4(a, rhs);
    return {m[0], m[1], m[2], m[3]};
}

} // namespace

Mat2c drift_rotating(const SystemParams& sys, const DriveConfig& drive, double epsilon) {
    const double big_g = std::sqrt(drive.c_om * sys.kappa * sys.gamma_mech / 4.0);
    const cplx i1(0.0, 1.0);
    // pump-frame drift shifted by +i*w_pr, w_pr = omega_m + delta
    return {-(sys.kappa / 2.0) + i1 * drive.delta, i1 * big_g,
            i1 * big_g, -(sys.gamma_mech / 2.0) + i1 * (drive.delta - epsilon)};
}

GreenMatrix green_function(double tau, const SystemParams& sys, const DriveConfig& drive,
                           double epsilon) {
    if (tau < 0.0) throw std::domain_error("green_function: tau must be >= 0");
    const Mat2c g = expm2(drift_pump_frame(sys, drive, epsilon), tau);
    return {g.m00, g.m01, g.m10, g.m11, tau};
}

FieldMeans mean_fields(double t, const SystemParams& sys, const DriveConfig& drive,
                       double epsilon) {
    FieldMeans out;
    out.t = t;
    out.epsilon = epsilon;
    if (t <= 0.0 || drive.a_pr_in == 0.0) return out;

    const Mat2c a_rot = drift_rotating(sys, drive, epsilon);
    const Vec2c src{std::sqrt(sys.kappa) * drive.a_pr_in, 0.0};
    // v(t) = (I - e^{At}) A^{-1} s   (rotating frame, v(0) = 0)
    const Mat2c ainv = a_rot.inverse();
    const Vec2c vss = ainv * src;
    const Vec2c prop = expm2(a_rot, t) * vss;
    const cplx w_pr = cplx(0.0, -(sys.omega_m + drive.delta) * t);
    const cplx back = std::exp(w_pr); // rotate back to the pump frame
    out.d_mean = back * (vss.a - prop.a);
    out.c_mean = back * (vss.b - prop.b);
    return out;
}

double phonon_number(double t, const SystemParams& sys, const DriveConfig& drive,
                     double epsilon) {
    if (t < 0.0) return 0.0;
    const double gm = sys.gamma_mech, c = drive.c_om;
    const double a2 = drive.a_pr_in * drive.a_pr_in;
    const double gt = gm * (1.0 + c);
    const double denom = gt * gt + 4.0 * epsilon * epsilon;
    const double e_half = std::exp(-gt * t / 2.0);
    return 4.0 * gm * c * a2 / denom *
           (1.0 + e_half * e_half - 2.0 * std::cos(epsilon * t) * e_half);
}

double cav_photon_number(double t, const SystemParams& sys, const DriveConfig& drive,
                         double epsilon) {
    if (t < 0.0) return 0.0;
    const double gm = sys.gamma_mech, c = drive.c_om;
    const double a2 = drive.a_pr_in * drive.a_pr_in;
    const double gt = gm * (1.0 + c);
    const double denom = gt * gt + 4.0 * epsilon * epsilon;
    const double e_half = std::exp(-gt * t / 2.0);
    const double bracket =
        gm * c * e_half * (2.0 * gm * std::cos(epsilon * t) - 4.0 * epsilon * std::sin(epsilon * t)) +
        gm * gm + 4.0 * epsilon * epsilon + gm * gm * c * c * e_half * e_half;
    return 4.0 * a2 / (sys.kappa * denom) * bracket;
}

double steady_state_phonon_number(const SystemParams& sys, const DriveConfig& drive,
                                  double epsilon) {
    const double gm = sys.gamma_mech, c = drive.c_om;
    const double a2 = drive.a_pr_in * drive.a_pr_in;
    const double gt = gm * (1.0 + c);
    return 4.0 * gm * c * a2 / (gt * gt + 4.0 * epsilon * epsilon);
}

cplx integrated_output_amplitude(double tau, const SystemParams& sys,
                                 const DriveConfig& drive, double epsilon) {
    if (tau <= 0.0 || drive.a_pr_in == 0.0) return 0.0;
    const Mat2c a_rot = drift_rotating(sys, drive, epsilon);
    const Mat2c ainv = a_rot.inverse();
    const Vec2c src{std::sqrt(sys.kappa) * drive.a_pr_in, 0.0};
    const Vec2c vss = ainv * src;
    // Int_0^tau v(t) dt = [tau I - A^{-1}(e^{A tau} - I)] A^{-1} s
    const Mat2c eat = expm2(a_rot, tau);
    const Vec2c diff{eat.m00 * vss.a + eat.m01 * vss.b - vss.a,
                     eat.m10 * vss.a + eat.m11 * vss.b - vss.b};
    const Vec2c corr = ainv * diff;
    const cplx int_d = tau * vss.a - corr.a;
    return std::sqrt(sys.kappa) * int_d + drive.a_pr_in * tau;
}

double homodyne_mean(double tau, double phi, const SystemParams& sys,
                     const DriveConfig& drive, double epsilon) {
    if (tau < 0.0) throw std::domain_error("homodyne_mean: tau must be >= 0");
    const cplx j = integrated_output_amplitude(tau, sys, drive, epsilon);
    const cplx e_iphi = std::exp(cplx(0.0, phi));
    return 2.0 * std::sqrt(sys.kappa) * (e_iphi * std::conj(j)).real();
}

double homodyne_variance_oracle(double tau, double /*phi*/, const SystemParams& sys,
                                const DriveConfig& drive, double epsilon, double rel_tol) {
    if (tau < 0.0) throw std::domain_error("homodyne_variance_oracle: tau must be >= 0");
    if (tau == 0.0) return 0.0;
    const double shot = sys.kappa * tau;
    if (sys.n_th == 0.0) return shot; // passive dynamics on vacuum input

    const Mat2c b = drift_rotating(sys, drive, epsilon);
    const Mat2c m = steady_normal_covariance(b, sys.gamma_mech, sys.n_th);

    // Var = kappa tau + 4 kappa^2 Int_0^tau (tau-u) Re[ H_dd(u) M_dd + H_dc(u) M_dc ] du
    // with H(u) the rotating-frame propagator. The double time integral over
    // the square collapses to this single integral because the fluctuation
    // statistics are stationary.
    auto integrand = [&](double u) {
        const Mat2c h = expm2(b, u);
        return (tau - u) * (h.m00 * m.m00 + h.m01 * m.m01).real();
    };

    // panelled adaptive integration: the integrand has a fast optical
    // transient on 1/kappa and a slow tail on 1/(Gamma (1+C))
    const double u_fast = std::min(tau, 40.0 / sys.kappa);
    double total = 0.0;
    double lo = 0.0, hi = u_fast;
    const double scale = tau * (std::abs(m.m00) + std::abs(m.m01)) + 1e-300;
    while (lo < tau) {
        total += integrate(integrand, lo, hi, rel_tol, scale);
        lo = hi;
        hi = std::min(tau, hi * 8.0);
        if (hi <= lo) break;
    }
    return shot + 4.0 * sys.kappa * sys.kappa * total;
}

HomodyneStats homodyne_stats(double tau, double phi, const SystemParams& sys,
                             const DriveConfig& drive, double epsilon) {
    return {homodyne_mean(tau, phi, sys, drive, epsilon),
            homodyne_variance_oracle(tau, phi, sys, drive, epsilon), tau, phi};
}

double optimal_phi_numeric(double tau, const SystemParams& sys, const DriveConfig& drive,
                           double chi) {
    const cplx j_minus = integrated_output_amplitude(tau, sys, drive, -chi);
    const cplx j_plus = integrated_output_amplitude(tau, sys, drive, +chi);
    // <I>(phi) = 2 sqrt(kappa) Re[e^{i phi} conj(J)]; the difference is
    // maximal in modulus at phi = arg(J_- - J_+), defined modulo pi.
    double phi = std::arg(j_minus - j_plus);
    phi = std::fmod(phi, std::numbers::pi);
    if (phi < 0.0) phi += std::numbers::pi;
    return phi;
}

std::pair<bool, bool> rwa_validity_check(const SystemParams& sys, const DriveConfig& drive,
                                         double n_mech) {
    if (n_mech < 0.0) throw std::domain_error("rwa_validity_check: n_mech must be >= 0");
    constexpr double margin = 10.0;
    const double big_g = std::sqrt(drive.c_om * sys.kappa * sys.gamma_mech / 4.0);
    const double root_n = std::sqrt(n_mech);
    return {margin * big_g * root_n <= 2.0 * sys.omega_m,
            margin * sys.g0 * root_n <= sys.omega_m};
}

} // namespace omitread
