#include "omitread/siv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "omitread/errors.hpp"

namespace omitread {

namespace {
using std::complex;
using C = complex<double>;
} // namespace

void SivLevelParams::check() const {
    if (!(lambda_so > 0.0)) throw std::invalid_argument("lambda_so must be > 0");
    if (!(gamma_s > gamma_l && gamma_l > 0.0))
        throw std::invalid_argument("gyromagnetic ratios must satisfy gamma_s > gamma_l > 0");
}

StrainEnergies strain_energies(const StrainTensor& t, const SivLevelParams& p) {
    StrainEnergies e;
    e.e_a1g = p.t_perp * (t.e_xx + t.e_yy) + p.t_par * t.e_zz;
    e.e_egx = p.d_sus * (t.e_xx - t.e_yy) + p.f_sus * t.e_zx;
    e.e_egy = -2.0 * p.d_sus * t.e_xy + p.f_sus * t.e_yz;
    return e;
}

Mat4 strain_hamiltonian(const StrainEnergies& se) {
    Mat4 h{};
    const C exy(se.e_egx, se.e_egy);
    // couples equal-spin, opposite-orbital states
    h[0][2] = -exy;            // <e-.down| H |e+.down>
    h[2][0] = -std::conj(exy);
    h[1][3] = -std::conj(exy); // <e+.up| H |e-.up>
    h[3][1] = -exy;
    return h;
}

Mat4 hamiltonian_4x4(const BField& b, const StrainEnergies& se, const SivLevelParams& p) {
    p.check();
    Mat4 h = strain_hamiltonian(se);
    const double so = p.lambda_so / 2.0;
    const double zl = p.gamma_l * b.bz;
    const double zs = p.gamma_s * b.bz;
    const C bperp = p.gamma_s * C(b.bx, b.by);

    h[0][0] += -so - (zs + zl);
    h[1][1] += -so + (zs + zl);
    h[2][2] += +so - (zs - zl);
    h[3][3] += +so + (zs - zl);

    // transverse field couples equal-orbital, opposite-spin states
    h[0][3] += bperp;
    h[3][0] += std::conj(bperp);
    h[1][2] += std::conj(bperp);
    h[2][1] += bperp;
    return h;
}

LabeledEnergies analytic_energies(const BField& b, const SivLevelParams& p) {
    p.check();
    const double bt2 = b.bx * b.bx + b.by * b.by;
    const double zl = p.gamma_l * b.bz;
    auto branch = [&](double tau) {
        const double arg = 4.0 * p.gamma_s * p.gamma_s * bt2 +
                           std::pow(p.lambda_so - 2.0 * tau * p.gamma_s * b.bz, 2);
        return std::sqrt(arg);
    };
    LabeledEnergies e;
    // E_{tau,sigma} = tau [ gamma_l Bz - (2 delta_{sigma,up} - 1)/2 * sqrt(...) ]
    e.e_plus_up = (zl - 0.5 * branch(+1.0));
    e.e_plus_down = (zl + 0.5 * branch(+1.0));
    e.e_minus_up = -(zl - 0.5 * branch(-1.0));
    e.e_minus_down = -(zl + 0.5 * branch(-1.0));
    return e;
}

double tune_bx(double b_z, double omega_s_target, const SivLevelParams& p) {
    p.check();
    if (!(omega_s_target > 0.0))
        throw std::domain_error("tune_bx: omega_s_target must be > 0");
    const double lo = omega_s_target / (2.0 * (p.gamma_l + p.gamma_s));
    const double hi = omega_s_target / (2.0 * p.gamma_l);
    if (b_z < lo * (1.0 - 1e-12) || b_z >= hi)
        throw std::domain_error("tune_bx: b_z outside validity range");

    const double m = 2.0 * p.gamma_l * b_z - omega_s_target; // < 0 in range
    const double r1 = std::pow(2.0 * p.gamma_s * b_z, 2) - m * m;
    const double r2 = p.lambda_so * p.lambda_so - m * m;
    if (r1 < 0.0 || r2 < 0.0)
        throw std::domain_error("tune_bx: no real solution for these parameters");
    const double bx = std::sqrt(std::max(0.0, r1)) * std::sqrt(r2) /
                      (2.0 * p.gamma_s * std::abs(m));
    if (!std::isfinite(bx))
        throw std::domain_error("tune_bx: diverging b_x near the upper b_z limit");
    return bx;
}

DressedTwoLevel strain_coupling(const BField& b, const StrainEnergies& se,
                                const SivLevelParams& p) {
    const Mat4 h0 = hamiltonian_4x4(b, StrainEnergies{}, p); // zero strain
    const auto eig = hermitian_eig<4>(h0);

    // Greedy max-overlap assignment of eigenvectors to the zero-field
    // spin-orbit basis states (the basis this matrix is written in).
    std::array<int, 4> label_of_state{-1, -1, -1, -1}; // basis label -> eig column
    std::array<bool, 4> col_used{}, lab_used{};
    for (int pick = 0; pick < 4; ++pick) {
        double best = -1.0;
        int bl = -1, bc = -1;
        for (int lab = 0; lab < 4; ++lab) {
            if (lab_used[lab]) continue;
            for (int col = 0; col < 4; ++col) {
                if (col_used[col]) continue;
                const double ov = std::abs(eig.vectors[lab][col]);
                if (ov > best) {
                    best = ov;
                    bl = lab;
                    bc = col;
                }
            }
        }
        // ambiguity only matters between pairs competing for the same
        // label or the same eigenvector
        for (int lab = 0; lab < 4; ++lab) {
            if (lab_used[lab] || lab == bl) continue;
            if (best - std::abs(eig.vectors[lab][bc]) < 1e-6)
                throw labeling_ambiguity_error(
                    "strain_coupling: eigenvector overlaps tie; degenerate crossing");
        }
        for (int col = 0; col < 4; ++col) {
            if (col_used[col] || col == bc) continue;
            if (best - std::abs(eig.vectors[bl][col]) < 1e-6)
                throw labeling_ambiguity_error(
                    "strain_coupling: eigenvector overlaps tie; degenerate crossing");
        }
        label_of_state[bl] = bc;
        lab_used[bl] = true;
        col_used[bc] = true;
    }

    const int col_md = label_of_state[0]; // e-.down'
    const int col_pu = label_of_state[1]; // e+.up'
    const int col_pd = label_of_state[2]; // e+.down'
    const int col_mu = label_of_state[3]; // e-.up'

    const Mat4 hs = strain_hamiltonian(se);
    auto sandwich = [&](int colL, int colR) {
        C acc = 0.0;
        for (int i = 0; i < 4; ++i) {
            C row = 0.0;
            for (int j = 0; j < 4; ++j) row += hs[i][j] * eig.vectors[j][colR];
            acc += std::conj(eig.vectors[i][colL]) * row;
        }
        return acc;
    };

    DressedTwoLevel out;
    out.b = b;
    out.omega_s = eig.values[col_pu] - eig.values[col_md];
    const C exy(se.e_egx, se.e_egy);
    const double aexy = std::abs(exy);
    const C m01 = sandwich(col_md, col_pu);
    out.g_sm = std::abs(m01);
    if (aexy > 0.0) {
        out.c1 = m01 / exy;
        out.c2 = sandwich(col_md, col_pd) / exy;
        out.c3 = sandwich(col_pu, col_mu) / std::conj(exy);
        out.c4 = sandwich(col_pd, col_mu) / std::conj(exy);
    }
    return out;
}

SweepResult sweep_bz(const std::vector<double>& b_z_grid, double omega_s_target,
                     const StrainEnergies& se, const SivLevelParams& p, int jobs) {
    SweepResult res;
    res.columns = {"b_z_tesla", "b_x_tesla", "g_sm_hz", "warnings"};
    res.rows.resize(b_z_grid.size());
    parallel_for(b_z_grid.size(), jobs, [&](std::size_t i) {
        SweepRow row;
        const double bz = b_z_grid[i];
        try {
            const double bx = tune_bx(bz, omega_s_target, p);
            const auto d = strain_coupling({bx, 0.0, bz}, se, p);
            row.values = {bz, bx, hz_from_rad(d.g_sm)};
        } catch (const std::exception& e) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.values = {bz, nan, nan};
            row.warnings = e.what();
        }
        res.rows[i] = std::move(row);
    });
    for (const auto& r : res.rows)
        if (!r.warnings.empty()) res.any_errors = true;
    return res;
}

} // namespace omitread
