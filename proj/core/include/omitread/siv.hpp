#pragma once

#include <complex>

#include "omitread/hermitian_eig.hpp"
#include "omitread/sweep.hpp"
#include "omitread/units.hpp"

namespace omitread {

// Ground-manifold level parameters of the defect. Angular units (rad/s,
// rad/s per tesla, rad/s per unit strain).
struct SivLevelParams {
    double lambda_so = rad_from_hz(46.0e9);  // spin-orbit splitting
    double gamma_l = rad_from_hz(1.4e9);     // orbital gyromagnetic ratio, per T
    double gamma_s = rad_from_hz(14.0e9);    // spin gyromagnetic ratio, per T
    double d_sus = rad_from_hz(1.3e15);      // Egx/Egy strain susceptibility
    double f_sus = rad_from_hz(-1.7e15);     // shear strain susceptibility
    double t_par = 0.0;  // A1g susceptibilities; only enter the identity shift
    double t_perp = 0.0;

    void check() const;
};

struct BField {
    double bx = 0.0, by = 0.0, bz = 0.0; // tesla
};

struct StrainTensor {
    double e_xx = 0.0, e_yy = 0.0, e_zz = 0.0;
    double e_xy = 0.0, e_yz = 0.0, e_zx = 0.0;
};

// Strain energies in the irreducible-representation basis (rad/s).
struct StrainEnergies {
    double e_a1g = 0.0;
    double e_egx = 0.0;
    double e_egy = 0.0;
};

StrainEnergies strain_energies(const StrainTensor& t, const SivLevelParams& p);

using Mat4 = MatNc<4>;

// Basis order throughout: { e-.down, e+.up, e+.down, e-.up }.
// Spin-orbit + Zeeman + strain, with the A1g identity shift dropped.
Mat4 hamiltonian_4x4(const BField& b, const StrainEnergies& se, const SivLevelParams& p);

// The strain part alone (same basis).
Mat4 strain_hamiltonian(const StrainEnergies& se);

// Closed-form zero-strain energies, labeled by the zero-field state each
// branch connects to. Valid for any field (bx^2+by^2 enters combined).
struct LabeledEnergies {
    double e_minus_down, e_plus_up, e_plus_down, e_minus_up;
};
LabeledEnergies analytic_energies(const BField& b, const SivLevelParams& p);

// Off-axis field magnitude |Bx| that holds E(e+.up') - E(e-.down') at
// omega_s for a given Bz. Domain: omega_s/(2(gl+gs)) <= Bz < omega_s/(2 gl).
double tune_bx(double b_z, double omega_s_target, const SivLevelParams& p);

// Dressed two-level system formed by the e-.down' and e+.up' eigenstates.
// c1..c4 are the dressed strain-matrix coefficients; only their moduli are
// invariant under eigenvector rephasing.
struct DressedTwoLevel {
    double omega_s = 0.0; // E(e+.up') - E(e-.down'), rad/s
    double g_sm = 0.0;    // |<e-.down'| H_strain |e+.up'>|, rad/s
    BField b;
    std::complex<double> c1, c2, c3, c4;
};

DressedTwoLevel strain_coupling(const BField& b, const StrainEnergies& se,
                                const SivLevelParams& p);

// Per grid point: Bx from tune_bx, g_sm from strain_coupling.
// Columns: b_z_tesla, b_x_tesla, g_sm_hz. Per-point errors are recorded in
// the row's warning field and the sweep continues.
SweepResult sweep_bz(const std::vector<double>& b_z_grid, double omega_s_target,
                     const StrainEnergies& se, const SivLevelParams& p,
                     int jobs = 0);

} // namespace omitread
