#pragma once

#include <complex>
#include <utility>

#include "omitread/mat2.hpp"
#include "omitread/params.hpp"

namespace omitread {

// Exact solutions of the linearized two-mode Langevin system
//   d/dt d = -(kappa/2 + i omega_m) d + i G c - sqrt(kappa) d_in
//   d/dt c = -(Gamma/2 + i(omega_m + eps)) c + i G d - sqrt(Gamma) c_in
// in the pump frame. These carry no large-kappa approximation and act as
// the validation oracle for the closed-form readout expressions.

// Propagator exp(A tau) of the homogeneous system; entries ordered
// (optical d, mechanical c). Identity at tau = 0, symmetric off-diagonals.
struct GreenMatrix {
    cplx dd, dc, cd, cc;
    double tau = 0.0;
};

GreenMatrix green_function(double tau, const SystemParams& sys,
                           const DriveConfig& drive, double epsilon);

// Drift matrix in the frame co-rotating with the probe (rates O(kappa),
// no fast omega_m phases). Exposed for the oracle integrations.
Mat2c drift_rotating(const SystemParams& sys, const DriveConfig& drive, double epsilon);

// Semiclassical response to the probe switched on at t = 0.
struct FieldMeans {
    cplx d_mean, c_mean; // pump-frame amplitudes
    double t = 0.0;
    double epsilon = 0.0;
};

FieldMeans mean_fields(double t, const SystemParams& sys, const DriveConfig& drive,
                       double epsilon);

// Closed-form occupations in the adiabatic (large-kappa) regime.
double phonon_number(double t, const SystemParams& sys, const DriveConfig& drive,
                     double epsilon);
double cav_photon_number(double t, const SystemParams& sys, const DriveConfig& drive,
                         double epsilon);
// Exact at any kappa.
double steady_state_phonon_number(const SystemParams& sys, const DriveConfig& drive,
                                  double epsilon);

// Integrated homodyne current: mean and variance of
//   I(tau) = sqrt(kappa) Int_0^tau [ e^{i phi} e^{-i w_pr t} d_out^dag + h.c. ] dt.
// The variance is assembled from the exact two-time output correlations
// (stationary Gaussian fluctuations propagated by the Green's function)
// with no large-kappa limit taken; it is independent of phi because the
// passive dynamics generates no anomalous correlations.
double homodyne_mean(double tau, double phi, const SystemParams& sys,
                     const DriveConfig& drive, double epsilon);
double homodyne_variance_oracle(double tau, double phi, const SystemParams& sys,
                                const DriveConfig& drive, double epsilon,
                                double rel_tol = 1e-9);

struct HomodyneStats {
    double mean = 0.0;
    double variance = 0.0;
    double tau = 0.0;
    double phi = 0.0;
};

HomodyneStats homodyne_stats(double tau, double phi, const SystemParams& sys,
                             const DriveConfig& drive, double epsilon);

// Time-integrated rotated output amplitude J(tau) = Int_0^tau <d_out> e^{i w_pr t} dt.
// The homodyne mean is 2 sqrt(kappa) Re[e^{i phi} conj(J)]; the angle
// maximizing a mean difference is arg of the J difference.
cplx integrated_output_amplitude(double tau, const SystemParams& sys,
                                 const DriveConfig& drive, double epsilon);

// Homodyne angle maximizing |<I>_{-chi} - <I>_{+chi}| at finite kappa and
// arbitrary probe detuning, normalized to [0, pi). Used where the
// resonant closed form does not apply.
double optimal_phi_numeric(double tau, const SystemParams& sys, const DriveConfig& drive,
                           double chi);

// (G sqrt(n) << 2 omega_m, g0 sqrt(n) << omega_m), << meaning a factor 10.
std::pair<bool, bool> rwa_validity_check(const SystemParams& sys,
                                         const DriveConfig& drive, double n_mech);

} // namespace omitread
