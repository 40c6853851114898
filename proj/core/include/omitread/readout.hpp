#pragma once

#include <string>
#include <vector>

#include "omitread/params.hpp"
#include "omitread/sweep.hpp"

namespace omitread {

// Closed-form SNR machinery for resonant-probe readout at the optimal
// homodyne angle, written in the dimensionless variables
//   x = chi/Gamma, C = C_om, flux = a_pr_in^2/Gamma, t = tau*Gamma.
// The expressions contain no kappa; the finite-kappa dynamics oracle
// converges to them as kappa/Gamma grows.

struct SnrComponents {
    double signal = 0.0; // S(tau) with the sqrt(kappa) factor stripped
    double noise = 0.0;  // N(tau), same normalization; snr = signal/noise
    double f_term = 0.0; // transient F(tau), 1 at tau=0, -> 0 at late times
    double g_term = 0.0; // thermal noise shaping G(tau), 0 at n_th = 0
    double xi = 0.0;     // arctan(2 chi / (Gamma (1+C))), in [0, pi/2)
    double snr = 0.0;
};

// Dimensionless core. SNR^2(t, n_th) = SNR^2(t, 0) / (1 - G(t)); throws
// std::domain_error if 1 - G(t) <= 0. Symmetric in the sign of chi.
SnrComponents snr_components_gamma(double tau_gamma, double chi_over_gamma, double c_om,
                                   double a_pr_norm, double n_th);

// Physical-parameter wrapper.
SnrComponents snr_components(double tau, double chi, double c_om, double a_pr_norm,
                             double n_th, double gamma_mech);

// Homodyne angle maximizing the signal for a resonant probe, from the
// closed-form arg expression, normalized to [0, pi). At resonance the two
// branches detune symmetrically, so the optimum is the phase quadrature
// (pi/2) for every tau; the angle is kept as a function for parity with
// the detuned numeric optimum in dynamics.
double optimal_homodyne_angle(double tau, double chi, double c_om, double a_pr_norm,
                              double gamma_mech);

// First tau*Gamma with SNR^2 = 1, by geometric bracket expansion from
// tau*Gamma = 1e-3 and bisection to 1e-10 relative; first-crossing
// semantics (the transient can make SNR^2 locally non-monotone).
// Throws no_crossing_error if SNR^2 < 1 up to tau*Gamma = 1e9.
double measurement_time_gamma(double chi_over_gamma, double c_om, double a_pr_norm,
                              double n_th);

// Seconds, linewidth convention (see units.hpp).
double measurement_time(double chi, double a_pr_norm, double n_th, double gamma_mech,
                        double c_om);

struct CooperativityOpt {
    double c_om_opt = 0.0;
    double tau_gamma = 0.0;
};

// Minimizes measurement_time over C_om in [1e-3, c_max]: 64-point log grid
// scan, then golden-section refinement to 1e-4 relative in C_om.
CooperativityOpt optimize_cooperativity_gamma(double chi_over_gamma, double a_pr_norm,
                                              double n_th, double c_max);

struct CooperativityResult {
    double c_om_opt = 0.0;
    double tau_meas = 0.0; // seconds, linewidth convention
};

CooperativityResult optimize_cooperativity(double chi, double a_pr_norm, double n_th,
                                           double gamma_mech, double c_max);

enum class Regime { weak, strong, weak_thermal };

// Closed-form asymptotes of the optimized measurement time:
//   weak:         1 / (8 flux x^2)            (impedance matching, C_om = 1)
//   strong:       1 / (8 flux)                (probe-photon-rate plateau)
//   weak_thermal: weak * (1 + 2 n_th)
double asymptotic_tmeas_gamma(Regime r, double chi_over_gamma, double a_pr_norm,
                              double n_th);
double asymptotic_tmeas(Regime r, double chi, double a_pr_norm, double n_th,
                        double gamma_mech);

// (delta_sm / g_sm)^2 / N
double critical_phonon_number(double delta_sm, double g_sm, int n_spins = 1);

// Probe-flux ceilings keeping the dispersive approximation intact. Both
// values are photon fluxes |a|^2 (rad/s): the bound at the given C_om and
// the bound minimized over C_om (reached at C_om = sqrt(1 + 4 chi^2/Gamma^2)).
struct CriticalAmplitude {
    double flux_at_c_om = 0.0;
    double flux_minimized = 0.0;
    double c_om_minimizing = 0.0;
};

CriticalAmplitude critical_probe_amplitude(double chi, double gamma_mech, double delta_sm,
                                           double g_sm, double c_om);

// 2 pi * delta_sm / (gamma_mech * chi * N^beta), seconds (T = 2pi/rate).
double purcell_time(double delta_sm, double g_sm, double gamma_mech, int n_spins,
                    int beta);

struct FeasibilityReport {
    double tau_meas = 0.0;    // seconds
    double tau_purcell = 0.0; // seconds
    double t1 = 0.0;          // seconds, 2pi/gamma_rel (inf when gamma_rel = 0)
    double qnd_ratio = 0.0;   // min(T1, tau_purcell) / tau_meas
    bool detuning_criterion_ok = false;      // delta^2/Gamma^2 >> N^(beta-1)/8
    bool cooperativity_criterion_ok = false; // 4 N g^2/(Gamma gamma_rel) >> 1/2
    std::vector<std::string> notes;
};

FeasibilityReport feasibility_report(const SpinParams& spin, const SystemParams& sys,
                                     const DriveConfig& drive, double c_max = 1e6);

struct ReadoutResult {
    double tau_meas = 0.0;      // seconds
    double c_om_opt = 0.0;
    double snr_at_tau = 0.0;    // ~1 up to root-finder tolerance
    double n_mech_at_tau = 0.0;
    double n_crit = 0.0;
    std::vector<std::string> warnings;
};

ReadoutResult readout_point(const SystemParams& sys, const DriveConfig& drive,
                            const SpinParams& spin, double c_max = 1e6);

// chi-sweep context: everything the extra CSV columns need.
struct ChiSweepContext {
    double a_pr_norm = 20.0;
    double n_th = 0.0;
    double c_max = 1e6;
    double gamma_mech = 1.0;          // rad/s, for the seconds column
    double kappa_over_gamma = 1e4;    // for the photon-number column
    double delta_sm_over_gamma = 750; // g_sm varied at fixed detuning
    int n_spins = 1;
    int jobs = 0;
};

// Per grid point (chi/Gamma): optimized C_om, tau, occupations at tau and
// the critical phonon number. Columns:
//   chi_over_gamma,c_om_opt,tau_gamma,tau_seconds,n_mech_tau,n_cav_tau,n_crit,warnings
// Per-point failures leave NaN values and a warning; the sweep continues.
SweepResult sweep_chi(const std::vector<double>& chi_over_gamma_grid,
                      const ChiSweepContext& ctx);

} // namespace omitread
