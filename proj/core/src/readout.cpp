#include "omitread/readout.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "omitread/dynamics.hpp"
#include "omitread/errors.hpp"
#include "omitread/mat2.hpp"
#include "omitread/rootfind.hpp"

namespace omitread {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Shared pieces of the closed forms, Gamma = 1 units.
struct Core {
    double x;      // |chi|/Gamma
    double c;      // C_om
    double gt;     // 1 + C_om
    double xi;     // arctan(2x/gt)
    cplx e2xi;     // e^{2 i xi}
    cplx q;        // i x - gt/2: slow pole of the mechanical response
};

Core make_core(double chi_over_gamma, double c_om) {
    Core k;
    k.x = std::abs(chi_over_gamma);
    k.c = c_om;
    k.gt = 1.0 + c_om;
    k.xi = std::atan(2.0 * k.x / k.gt);
    k.e2xi = std::exp(cplx(0.0, 2.0 * k.xi));
    k.q = cplx(-k.gt / 2.0, k.x);
    return k;
}

// 1 - F(t) = Im[e^{2 i xi} (e^{q t} - 1 - q t)] / (x t).
// The raw F subtracts nearly equal numbers at small t (the SNR rises as
// t^5); this rearrangement keeps full precision down to t -> 0.
double one_minus_f(const Core& k, double t) {
    if (k.x == 0.0) {
        // chi -> 0 limit of the expression below
        const double eg = std::exp(-k.gt * t / 2.0);
        return 1.0 - (4.0 / (k.gt * t)) * (1.0 - eg) + eg;
    }
    return (k.e2xi * expm1m(k.q * t)).imag() / (k.x * t);
}

// G(t) = -16 n_th (C/(1+C)) Re[e^{2 i xi} (e^{q t} - 1 - q t)] / ((gt^2 + 4x^2) t).
// Same stable kernel; the closed prefactor uses sin^2(xi)/x^2 = 4/(gt^2+4x^2).
double g_term_of(const Core& k, double t, double n_th) {
    if (n_th == 0.0) return 0.0;
    const double denom = (k.gt * k.gt + 4.0 * k.x * k.x) * t;
    return -16.0 * n_th * (k.c / k.gt) * (k.e2xi * expm1m(k.q * t)).real() / denom;
}

} // namespace

SnrComponents snr_components_gamma(double tau_gamma, double chi_over_gamma, double c_om,
                                   double a_pr_norm, double n_th) {
    if (tau_gamma < 0.0) throw std::domain_error("snr_components: tau must be >= 0");
    if (c_om < 0.0) throw std::domain_error("snr_components: c_om must be >= 0");
    const Core k = make_core(chi_over_gamma, c_om);

    SnrComponents out;
    out.xi = k.xi;
    if (tau_gamma == 0.0) {
        out.f_term = 1.0;
        out.noise = 0.0;
        return out;
    }
    const double omf = one_minus_f(k, tau_gamma);
    out.f_term = 1.0 - omf;
    out.g_term = g_term_of(k, tau_gamma, n_th);
    if (1.0 - out.g_term <= 0.0)
        throw std::domain_error("snr_components: 1 - G(tau) <= 0, outside validity");

    const double sin2xi = std::sin(2.0 * k.xi);
    out.signal = 4.0 * a_pr_norm * (k.c / k.gt) * tau_gamma * sin2xi * omf;
    out.noise = std::sqrt(2.0 * tau_gamma * (1.0 - out.g_term));
    out.snr = (out.noise > 0.0) ? out.signal / out.noise : 0.0;
    return out;
}

SnrComponents snr_components(double tau, double chi, double c_om, double a_pr_norm,
                             double n_th, double gamma_mech) {
    return snr_components_gamma(tau * gamma_mech, chi / gamma_mech, c_om, a_pr_norm, n_th);
}

double optimal_homodyne_angle(double tau, double chi, double c_om, double a_pr_norm,
                              double gamma_mech) {
    if (tau <= 0.0) throw std::domain_error("optimal_homodyne_angle: tau must be > 0");
    (void)a_pr_norm; // real non-negative probe: arg(a_pr_in) = 0 by convention
    const Core k = make_core(chi / gamma_mech, c_om);
    const double t = tau * gamma_mech;
    // zeta = arg[ z^2 - (z*)^2 - 2 i chi tau |z|^2 + (z*)^2 e^{-z tau/2} - z^2 e^{-z* tau/2} ]
    // (resonant probe, z = gt + 2 i x), rearranged through the same stable
    // kernel: the bracket equals -2 i |z|^2 x t (1 - F).
    const double omf = one_minus_f(k, t);
    double zeta = std::arg(cplx(0.0, -1.0) * omf);
    zeta = std::fmod(zeta, std::numbers::pi);
    if (zeta < 0.0) zeta += std::numbers::pi;
    return zeta;
}

double measurement_time_gamma(double chi_over_gamma, double c_om, double a_pr_norm,
                              double n_th) {
    auto snr_sq = [&](double t) {
        const auto s = snr_components_gamma(t, chi_over_gamma, c_om, a_pr_norm, n_th);
        return s.snr * s.snr;
    };
    if (chi_over_gamma == 0.0 || c_om == 0.0 || a_pr_norm == 0.0)
        throw no_crossing_error("SNR is identically zero");

    double lo = 1e-3;
    while (snr_sq(lo) >= 1.0 && lo > 1e-18) lo /= 2.0;
    double hi = lo;
    constexpr double tau_max = 1e9;
    while (snr_sq(hi) < 1.0) {
        hi *= 2.0;
        if (hi > tau_max)
            throw no_crossing_error("SNR^2 < 1 up to tau*Gamma = 1e9");
    }
    return first_crossing(snr_sq, hi / 2.0 < lo ? lo : hi / 2.0, hi, 1.0, 1e-10);
}

double measurement_time(double chi, double a_pr_norm, double n_th, double gamma_mech,
                        double c_om) {
    const double tg = measurement_time_gamma(chi / gamma_mech, c_om, a_pr_norm, n_th);
    return seconds_from_tau_gamma(tg, gamma_mech);
}

CooperativityOpt optimize_cooperativity_gamma(double chi_over_gamma, double a_pr_norm,
                                              double n_th, double c_max) {
    if (c_max <= 0.0) throw std::domain_error("optimize_cooperativity: c_max must be > 0");
    constexpr double c_min = 1e-3;
    constexpr int grid_n = 64;

    auto tau_of = [&](double c) {
        try {
            return measurement_time_gamma(chi_over_gamma, c, a_pr_norm, n_th);
        } catch (const no_crossing_error&) {
            return inf;
        }
    };

    const double lmin = std::log(c_min), lmax = std::log(std::max(c_max, c_min * 1.001));
    int best = 0;
    double best_tau = inf;
    std::vector<double> cs(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        cs[i] = std::exp(lmin + (lmax - lmin) * i / (grid_n - 1.0));
        const double t = tau_of(cs[i]);
        if (t < best_tau) {
            best_tau = t;
            best = i;
        }
    }
    if (!std::isfinite(best_tau))
        throw no_crossing_error("SNR^2 never reaches 1 for any cooperativity in the search domain");

    const double la = std::log(cs[std::max(0, best - 1)]);
    const double lb = std::log(cs[std::min(grid_n - 1, best + 1)]);
    const double lc = golden_min([&](double l) { return tau_of(std::exp(l)); }, la, lb, 1e-4 / std::max(1.0, std::abs(la) + std::abs(lb)));
    double c_opt = std::exp(lc);
    double tau_opt = tau_of(c_opt);
    if (best_tau < tau_opt) { // guard: keep the grid point if refinement regressed
        c_opt = cs[best];
        tau_opt = best_tau;
    }
    return {c_opt, tau_opt};
}

CooperativityResult optimize_cooperativity(double chi, double a_pr_norm, double n_th,
                                           double gamma_mech, double c_max) {
    const auto o = optimize_cooperativity_gamma(chi / gamma_mech, a_pr_norm, n_th, c_max);
    return {o.c_om_opt, seconds_from_tau_gamma(o.tau_gamma, gamma_mech)};
}

double asymptotic_tmeas_gamma(Regime r, double chi_over_gamma, double a_pr_norm,
                              double n_th) {
    const double flux = a_pr_norm * a_pr_norm;
    const double x = std::abs(chi_over_gamma);
    switch (r) {
        case Regime::weak: return 1.0 / (8.0 * flux * x * x);
        case Regime::strong: return 1.0 / (8.0 * flux);
        case Regime::weak_thermal: return (1.0 + 2.0 * n_th) / (8.0 * flux * x * x);
    }
    throw std::logic_error("unreachable");
}

double asymptotic_tmeas(Regime r, double chi, double a_pr_norm, double n_th,
                        double gamma_mech) {
    return seconds_from_tau_gamma(
        asymptotic_tmeas_gamma(r, chi / gamma_mech, a_pr_norm, n_th), gamma_mech);
}

double critical_phonon_number(double delta_sm, double g_sm, int n_spins) {
    if (delta_sm <= 0.0 || g_sm <= 0.0)
        throw std::domain_error("critical_phonon_number: delta_sm, g_sm must be > 0");
    const double r = delta_sm / g_sm;
    return r * r / n_spins;
}

CriticalAmplitude critical_probe_amplitude(double chi, double gamma_mech, double delta_sm,
                                           double g_sm, double c_om) {
    const double r2 = (delta_sm / g_sm) * (delta_sm / g_sm);
    const double x = std::abs(chi) / gamma_mech;
    CriticalAmplitude out;
    out.flux_at_c_om =
        r2 * gamma_mech * ((1.0 + c_om) * (1.0 + c_om) + 4.0 * x * x) / (4.0 * c_om);
    out.c_om_minimizing = std::sqrt(1.0 + 4.0 * x * x);
    out.flux_minimized = r2 * (gamma_mech / 2.0) * (out.c_om_minimizing + 1.0);
    return out;
}

double purcell_time(double delta_sm, double g_sm, double gamma_mech, int n_spins,
                    int beta) {
    if (delta_sm <= 0.0 || g_sm <= 0.0 || gamma_mech <= 0.0)
        throw std::domain_error("purcell_time: rates must be > 0");
    const double chi = g_sm * g_sm / delta_sm;
    return two_pi * delta_sm / (gamma_mech * chi * std::pow(n_spins, beta));
}

FeasibilityReport feasibility_report(const SpinParams& spin, const SystemParams& sys,
                                     const DriveConfig& drive, double c_max) {
    constexpr double margin = 10.0;
    FeasibilityReport r;
    const NormalizedPoint p = normalize(sys, drive, spin);
    const double a_norm = std::sqrt(p.flux_norm);

    if (drive.c_om_auto) {
        const auto o = optimize_cooperativity_gamma(p.chi_over_gamma, a_norm, p.n_th, c_max);
        r.tau_meas = seconds_from_tau_gamma(o.tau_gamma, sys.gamma_mech);
    } else {
        r.tau_meas = measurement_time(spin.chi(), a_norm, p.n_th, sys.gamma_mech, drive.c_om);
    }
    r.tau_purcell = purcell_time(spin.delta_sm, spin.g_sm, sys.gamma_mech, spin.n_spins,
                                 spin.beta);
    r.t1 = spin.gamma_rel > 0.0 ? two_pi / spin.gamma_rel : inf;
    r.qnd_ratio = std::min(r.t1, r.tau_purcell) / r.tau_meas;

    const double dg = spin.delta_sm / sys.gamma_mech;
    r.detuning_criterion_ok =
        dg * dg > margin * std::pow(spin.n_spins, spin.beta - 1) / 8.0;
    const double coll = 4.0 * spin.n_spins * spin.g_sm * spin.g_sm /
                        (sys.gamma_mech * spin.gamma_rel);
    r.cooperativity_criterion_ok = spin.gamma_rel == 0.0 ? true : coll > margin * 0.5;
    r.notes.push_back("strict-inequality margins use a factor of 10");
    return r;
}

ReadoutResult readout_point(const SystemParams& sys, const DriveConfig& drive,
                            const SpinParams& spin, double c_max) {
    ReadoutResult r;
    const NormalizedPoint p = normalize(sys, drive, spin);
    const double a_norm = std::sqrt(p.flux_norm);

    double tau_gamma;
    if (drive.c_om_auto) {
        const auto o = optimize_cooperativity_gamma(p.chi_over_gamma, a_norm, p.n_th, c_max);
        r.c_om_opt = o.c_om_opt;
        tau_gamma = o.tau_gamma;
    } else {
        r.c_om_opt = drive.c_om;
        tau_gamma = measurement_time_gamma(p.chi_over_gamma, drive.c_om, a_norm, p.n_th);
    }
    r.tau_meas = seconds_from_tau_gamma(tau_gamma, sys.gamma_mech);
    r.snr_at_tau =
        snr_components_gamma(tau_gamma, p.chi_over_gamma, r.c_om_opt, a_norm, p.n_th).snr;

    DriveConfig at_opt = drive;
    at_opt.c_om = r.c_om_opt;
    r.n_mech_at_tau = phonon_number(tau_gamma / sys.gamma_mech, sys, at_opt, spin.chi());
    r.n_crit = critical_phonon_number(spin.delta_sm, spin.g_sm, spin.n_spins);
    r.warnings = validate(sys, at_opt, spin);
    return r;
}

SweepResult sweep_chi(const std::vector<double>& chi_over_gamma_grid,
                      const ChiSweepContext& ctx) {
    SweepResult res;
    res.columns = {"chi_over_gamma", "c_om_opt", "tau_gamma", "tau_seconds",
                   "n_mech_tau", "n_cav_tau", "n_crit", "warnings"};
    res.rows.resize(chi_over_gamma_grid.size());

    // Gamma = 1 stand-in system for the dimensionless occupation formulas.
    SystemParams unit_sys;
    unit_sys.kappa = ctx.kappa_over_gamma;
    unit_sys.gamma_mech = 1.0;
    unit_sys.omega_m = 10.0 * ctx.kappa_over_gamma;
    unit_sys.g0 = 0.0;
    unit_sys.n_th = ctx.n_th;

    parallel_for(chi_over_gamma_grid.size(), ctx.jobs, [&](std::size_t i) {
        const double x = chi_over_gamma_grid[i];
        SweepRow row;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        try {
            const auto o = optimize_cooperativity_gamma(x, ctx.a_pr_norm, ctx.n_th, ctx.c_max);
            DriveConfig d;
            d.c_om = o.c_om_opt;
            d.a_pr_in = ctx.a_pr_norm; // a/sqrt(Gamma) with Gamma = 1
            const double n_mech = phonon_number(o.tau_gamma, unit_sys, d, x);
            const double n_cav = cav_photon_number(o.tau_gamma, unit_sys, d, x);
            const double n_crit = ctx.delta_sm_over_gamma / (x * ctx.n_spins);
            row.values = {x, o.c_om_opt, o.tau_gamma,
                          seconds_from_tau_gamma(o.tau_gamma, ctx.gamma_mech),
                          n_mech, n_cav, n_crit};
        } catch (const std::exception& e) {
            row.values = {x, nan, nan, nan, nan, nan, nan};
            row.warnings = e.what();
        }
        res.rows[i] = std::move(row);
    });
    for (const auto& r : res.rows)
        if (!r.warnings.empty()) res.any_errors = true;
    return res;
}

} // namespace omitread
