#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mixvol {

/// Gamma at half-integer arguments by the recurrence from Gamma(1/2) = sqrt(pi)
/// and Gamma(1) = 1; exact to round-off, no tabulation.
inline double gamma_half_integer(int twice_x) {
    if (twice_x <= 0) throw std::invalid_argument("gamma_half_integer: argument must be positive");
    double g = (twice_x % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
    for (int t = twice_x % 2 == 0 ? 2 : 1; t < twice_x; t += 2) g *= 0.5 * t;
    return g;
}

/// Volume of the n-dimensional Euclidean unit ball, pi^{n/2} / Gamma(n/2 + 1).
inline double kappa_n(int n) {
    if (n < 0) throw std::invalid_argument("kappa_n: n must be nonnegative");
    return std::pow(std::numbers::pi, 0.5 * n) / gamma_half_integer(n + 2);
}

}  // namespace mixvol
