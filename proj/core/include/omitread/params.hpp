#pragma once

#include <string>
#include <vector>

#include "omitread/units.hpp"

namespace omitread {

// Optomechanical device rates, all angular (rad/s).
struct SystemParams {
    double kappa = 0.0;      // optical amplitude decay rate
    double gamma_mech = 0.0; // mechanical decay rate
    double omega_m = 0.0;    // mechanical frequency
    double g0 = 0.0;         // bare optomechanical coupling
    double n_th = 0.0;       // thermal phonon number of the mechanical bath

    bool sideband_resolved() const { return kappa < omega_m; }
    // hard error on non-finite or negative rates
    void check() const;
};

// Pump/probe drive configuration. The probe amplitude is real and
// non-negative by global phase convention; its phase is absorbed into
// the homodyne angle phi.
struct DriveConfig {
    double c_om = 0.0;     // optomechanical cooperativity 4G^2/(kappa Gamma)
    double a_pr_in = 0.0;  // probe amplitude, (rad/s)^(1/2); a^2 is a photon flux
    double delta = 0.0;    // probe-cavity detuning (rad/s)
    double phi = 0.0;      // homodyne angle (rad)
    double eta = 1.0;      // detection efficiency in [0, 1]
    bool c_om_auto = false; // request per-point cooperativity optimization

    void check() const;
};

// Spin-mechanical coupling parameters. chi is always recomputed from
// g_sm and delta_sm, never stored.
struct SpinParams {
    double g_sm = 0.0;     // Jaynes-Cummings coupling (rad/s)
    double delta_sm = 0.0; // spin-mechanical detuning (rad/s)
    int n_spins = 1;
    int beta = 1;           // collective-decay polarization exponent, 1 or 2
    double gamma_rel = 0.0; // intrinsic relaxation rate (rad/s); 0 = none

    double chi() const { return g_sm * g_sm / delta_sm; }
    void check() const;
};

struct DerivedSet {
    double big_g;       // optically-enhanced coupling G = g0 * a (rad/s)
    double gamma_total; // Gamma * (1 + C_om)
};

// G = sqrt(C_om kappa Gamma / 4), gamma_total = Gamma (1 + C_om).
DerivedSet derived_quantities(const SystemParams& sys, const DriveConfig& drive);

// Regime-assumption warnings (good-cavity, weak-coupling, dispersive
// validity). All "much greater/less than" checks use a factor of 10.
std::vector<std::string> validate(const SystemParams& sys, const DriveConfig& drive,
                                  const SpinParams& spin);

// The readout and sensing formulas depend only on these ratios; the
// physical-parameter entry points normalize through this struct.
struct NormalizedPoint {
    double chi_over_gamma = 0.0;
    double delta_over_gamma = 0.0;
    double c_om = 0.0;
    double flux_norm = 0.0; // a_pr_in^2 / Gamma
    double n_th = 0.0;
    double eta = 1.0;
};

NormalizedPoint normalize(const SystemParams& sys, const DriveConfig& drive,
                          const SpinParams& spin);

} // namespace omitread
