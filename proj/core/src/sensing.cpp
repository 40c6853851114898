#include "omitread/sensing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "omitread/readout.hpp"

namespace omitread {

namespace {

// steady phonons at zero shift: 4 Gamma C a^2 / (Gamma (1+C))^2
double n_ss_zero_shift(double c_om, double gamma_mech, double a_pr_norm) {
    const double flux = a_pr_norm * a_pr_norm * gamma_mech;
    const double gt = gamma_mech * (1.0 + c_om);
    return 4.0 * gamma_mech * c_om * flux / (gt * gt);
}

} // namespace

double detection_noise_quanta(double eta) {
    if (eta <= 0.0 || eta > 1.0)
        throw std::domain_error("detection_noise_quanta: eta must lie in (0, 1]");
    return (1.0 - eta) / (2.0 * eta);
}

SensingResult estimation_error(Scheme s, double tau, double c_om, double delta,
                               double n_th, double eta, double gamma_mech,
                               double a_pr_norm) {
    if (eta <= 0.0 || eta > 1.0)
        throw std::domain_error("estimation_error: eta must lie in (0, 1]");
    if (tau <= 0.0) throw std::domain_error("estimation_error: tau must be > 0");
    if (c_om <= 0.0) throw std::domain_error("estimation_error: c_om must be > 0");

    SensingResult r;
    r.scheme = s;
    r.tau = tau;
    r.c_om = c_om;
    r.delta = delta;
    r.n_th = n_th;
    r.eta = eta;
    r.gamma_mech = gamma_mech;
    r.a_pr_norm = a_pr_norm;
    r.n_ss = n_ss_zero_shift(c_om, gamma_mech, a_pr_norm);

    const double g = gamma_mech;
    const double flux = a_pr_norm * a_pr_norm * g;
    const double gt2 = g * g * (1.0 + c_om) * (1.0 + c_om);
    const double d2 = 4.0 * delta * delta;
    const double norm = g / (4.0 * r.n_ss * tau); // normal-form prefactor

    switch (s) {
        case Scheme::omit:
            r.error_sq = (gt2 + d2) * (gt2 + 8.0 * n_th * g * g * c_om + d2) /
                         (64.0 * g * g * c_om * c_om * tau * flux);
            break;
        case Scheme::omit_imperfect: {
            const double ideal = (gt2 + d2) * (gt2 + 8.0 * n_th * g * g * c_om + d2) /
                                 (64.0 * g * g * c_om * c_om * tau * flux);
            const double det = (1.0 - eta) / eta * (gt2 + d2) * (gt2 + d2) /
                               (64.0 * g * g * c_om * c_om * tau * flux);
            r.error_sq = ideal + det;
            break;
        }
        case Scheme::position:
            r.error_sq = norm * (2.0 + 2.0 * n_th);
            break;
        case Scheme::bae:
            r.error_sq = norm * (1.0 + 8.0 * c_om * (1.0 + 2.0 * n_th)) / (8.0 * c_om);
            break;
    }
    r.n_add_equiv = 0.5 * (r.error_sq / norm - 1.0 - 2.0 * n_th);
    return r;
}

double snr_error_consistency(double chi_small, double tau, double c_om, double n_th,
                             double gamma_mech, double a_pr_norm) {
    const auto direct =
        estimation_error(Scheme::omit, tau, c_om, 0.0, n_th, 1.0, gamma_mech, a_pr_norm);
    const auto s = snr_components(tau, chi_small, c_om, a_pr_norm, n_th, gamma_mech);
    const double from_snr = 2.0 * chi_small * chi_small / (s.snr * s.snr);
    return std::abs(direct.error_sq - from_snr) / from_snr;
}

SweepResult sensing_sweep(const std::vector<double>& eta_grid, double n_th) {
    (void)n_th; // n_add is temperature-independent; n_th is echoed in the meta file
    SweepResult res;
    res.columns = {"eta", "n_add_omit", "n_add_sql", "n_add_bae_inf", "warnings"};
    res.rows.reserve(eta_grid.size());
    for (const double eta : eta_grid) {
        SweepRow row;
        try {
            row.values = {eta, detection_noise_quanta(eta), 0.5, 0.0};
        } catch (const std::exception& e) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row.values = {eta, nan, 0.5, 0.0};
            row.warnings = e.what();
            res.any_errors = true;
        }
        res.rows.push_back(std::move(row));
    }
    return res;
}

} // namespace omitread
