#pragma once

#include <string>
#include <vector>

#include "omitread/dynamics.hpp"

namespace omitread {

// Independent numerical routes used to validate the closed forms. None of
// these share evaluation paths with the production code they check:
// expm_taylor_squaring avoids the cosh/sinh propagator, ode_mean_fields
// steps the equations of motion directly, and variance_bruteforce_2d
// performs the literal double time integration of the output-field
// correlation functions.

// exp(M t) by scaling and squaring of a truncated Taylor series.
Mat2c expm_taylor_squaring(const Mat2c& m, double t);

// Probe response by adaptive Runge-Kutta on the rotating-frame equations
// of motion; returns pump-frame amplitudes like mean_fields.
FieldMeans ode_mean_fields(double t, const SystemParams& sys, const DriveConfig& drive,
                           double epsilon, double rel_tol = 1e-10);

// Var[I(tau)] assembled from first principles: the two-time output
// correlators are built by quadrature of Green's-function products against
// the white-noise input correlators (including the direct input terms and
// the shot-noise delta), then integrated over [0,tau]^2 on an n x n grid.
// O(n^2) Green evaluations; meant for spot checks at modest kappa*tau.
double variance_bruteforce_2d(double tau, const SystemParams& sys,
                              const DriveConfig& drive, double epsilon, int n_grid);

// Finite-kappa SNR^2 from the dynamics oracle: difference of integrated
// homodyne means at epsilon = -/+ chi, maximized over the homodyne angle,
// over the summed variances of the two branches.
double snr_sq_oracle(double tau, const SystemParams& sys, const DriveConfig& drive,
                     double chi);

struct CheckResult {
    std::string name;
    double value = 0.0;     // measured deviation (relative where sensible)
    double tolerance = 0.0;
    bool pass = false;
};

// The dynamics-vs-readout cross-check suite behind `oracle-check`.
// tol_scale multiplies every tolerance; seed fixes the randomized draws.
std::vector<CheckResult> run_oracle_checks(double tol_scale = 1.0,
                                           unsigned seed = 20240901);

} // namespace omitread
