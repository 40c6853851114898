#include "omitread/params.hpp"

#include <cmath>
#include <stdexcept>

namespace omitread {

namespace {
void require_finite_nonneg(double x, const char* name) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument(std::string(name) + " must be finite and non-negative");
}
void require_finite_pos(double x, const char* name) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::invalid_argument(std::string(name) + " must be finite and positive");
}
} // namespace

void SystemParams::check() const {
    require_finite_pos(kappa, "kappa");
    require_finite_pos(gamma_mech, "gamma_mech");
    require_finite_pos(omega_m, "omega_m");
    require_finite_nonneg(g0, "g0");
    require_finite_nonneg(n_th, "n_th");
}

void DriveConfig::check() const {
    require_finite_nonneg(c_om, "c_om");
    require_finite_nonneg(a_pr_in, "a_pr_in");
    if (!std::isfinite(delta)) throw std::invalid_argument("delta must be finite");
    if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0)
        throw std::invalid_argument("eta must lie in [0, 1]");
}

void SpinParams::check() const {
    require_finite_nonneg(g_sm, "g_sm");
    if (!std::isfinite(delta_sm) || delta_sm == 0.0)
        throw std::invalid_argument("delta_sm must be finite and nonzero");
    if (n_spins < 1) throw std::invalid_argument("n_spins must be >= 1");
    if (beta != 1 && beta != 2) throw std::invalid_argument("beta must be 1 or 2");
    require_finite_nonneg(gamma_rel, "gamma_rel");
}

DerivedSet derived_quantities(const SystemParams& sys, const DriveConfig& drive) {
    sys.check();
    drive.check();
    return {std::sqrt(drive.c_om * sys.kappa * sys.gamma_mech / 4.0),
            sys.gamma_mech * (1.0 + drive.c_om)};
}

std::vector<std::string> validate(const SystemParams& sys, const DriveConfig& drive,
                                  const SpinParams& spin) {
    sys.check();
    drive.check();
    spin.check();

    constexpr double margin = 10.0;
    std::vector<std::string> warnings;
    const auto d = derived_quantities(sys, drive);
    const double chi = spin.chi();

    if (!(sys.omega_m >= margin * sys.kappa))
        warnings.push_back("good-cavity limit omega_m >> kappa violated");
    if (!(sys.kappa >= margin * sys.gamma_mech))
        warnings.push_back("kappa >> gamma_mech violated");
    if (d.big_g > 0.0 && !(sys.kappa >= margin * d.big_g))
        warnings.push_back("weak-coupling limit G << kappa violated");
    if (std::abs(chi) > 0.0 && !(sys.kappa >= margin * std::abs(chi)))
        warnings.push_back("dispersive shift chi << kappa violated");
    if (spin.g_sm > 0.0 && std::abs(spin.g_sm / spin.delta_sm) > 0.1)
        warnings.push_back("dispersive validity |g_sm/delta_sm| <= 0.1 violated");
    return warnings;
}

NormalizedPoint normalize(const SystemParams& sys, const DriveConfig& drive,
                          const SpinParams& spin) {
    NormalizedPoint p;
    p.chi_over_gamma = spin.chi() / sys.gamma_mech;
    p.delta_over_gamma = drive.delta / sys.gamma_mech;
    p.c_om = drive.c_om;
    p.flux_norm = drive.a_pr_in * drive.a_pr_in / sys.gamma_mech;
    p.n_th = sys.n_th;
    p.eta = drive.eta;
    return p;
}

} // namespace omitread
