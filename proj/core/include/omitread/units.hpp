#pragma once

#include <numbers>

namespace omitread {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// All rates and frequencies inside the library are angular (rad/s).
// Config files and CSV columns named *_hz carry ordinary frequencies;
// the pair below is the only unit conversion in the codebase.
inline constexpr double rad_from_hz(double f_hz) { return two_pi * f_hz; }
inline constexpr double hz_from_rad(double w_rad) { return w_rad / two_pi; }

// Time-unit convention for reported lifetimes and measurement times.
//
// A decay rate gamma (rad/s) corresponds to a spectral linewidth
// f = gamma/2pi in Hz. Reported times quote the inverse linewidth,
//   t[s] = (tau * gamma) / (gamma / 2pi) = 2pi * (tau*gamma) / gamma,
// i.e. lifetimes follow T = 1/f = 2pi/gamma. The same rule gives
// T1 = 2pi/gamma_rel for the spin relaxation time.
inline constexpr double seconds_from_tau_gamma(double tau_gamma, double gamma_rad) {
    return two_pi * tau_gamma / gamma_rad;
}
inline constexpr double tau_gamma_from_seconds(double seconds, double gamma_rad) {
    return seconds * gamma_rad / two_pi;
}

} // namespace omitread
