#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace fasttrig {

// Angle folded into [0, pi/2] together with the sign the target function
// carries over from the original quadrant.
struct ReducedAngle {
  double red;   // in [0, pi/2]
  double sign;  // exactly -1.0 or +1.0
};

namespace detail {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double half_pi = 0.5 * std::numbers::pi;

// Single-step modular fold of a >= 0 into [0, period). For |a| <= 1e6 the
// rounding error is about |a| * eps ~ 2e-10, well below the kernel error.
// The two selects absorb ulp spill when the quotient rounds across an
// integer at the wrap boundary.
inline double mod_positive(double a, double period) noexcept {
  double r = a - period * std::floor(a / period);
  r = r < 0.0 ? 0.0 : r;
  return r < period ? r : 0.0;
}

inline double clamp_red(double red) noexcept {
  red = red < 0.0 ? 0.0 : red;
  return red < half_pi ? red : half_pi;
}

// Quadrant fold of r in [0, 2pi) for the even/odd symmetric functions.
// Boundary ties route to the lower quadrant through floor semantics.
struct QuadrantFold {
  double red;
  double quadrant;  // 0, 1, 2 or 3
};

inline QuadrantFold fold_quadrant(double r) noexcept {
  double q = std::floor(r / half_pi);
  q = q > 3.0 ? 3.0 : q;
  const double red = q == 0.0 ? r
                   : q == 1.0 ? pi - r
                   : q == 2.0 ? r - pi
                              : two_pi - r;
  return {clamp_red(red), q};
}

}  // namespace detail

// sin(x) = sign * sin(red) to within 1e-8 for |x| <= 1e6. Reduction runs
// on |x| and restores odd symmetry through the sign, so results for -x
// are bitwise negations. NaN and infinity reduce to (NaN, +1).
inline ReducedAngle reduce_sin(double x) noexcept {
  if (!std::isfinite(x)) {
    return {std::numeric_limits<double>::quiet_NaN(), 1.0};
  }
  const double r = detail::mod_positive(std::fabs(x), detail::two_pi);
  const auto [red, q] = detail::fold_quadrant(r);
  double sign = q < 2.0 ? 1.0 : -1.0;
  sign = std::signbit(x) ? -sign : sign;
  return {red, sign};
}

// cos(x) = sign * cos(red); even symmetry, so the input sign is ignored.
inline ReducedAngle reduce_cos(double x) noexcept {
  if (!std::isfinite(x)) {
    return {std::numeric_limits<double>::quiet_NaN(), 1.0};
  }
  const double r = detail::mod_positive(std::fabs(x), detail::two_pi);
  const auto [red, q] = detail::fold_quadrant(r);
  const double sign = (q == 0.0 || q == 3.0) ? 1.0 : -1.0;
  return {red, sign};
}

// tan(x) = sign * tan(red); period pi, odd symmetry handled as in
// reduce_sin.
inline ReducedAngle reduce_tan(double x) noexcept {
  if (!std::isfinite(x)) {
    return {std::numeric_limits<double>::quiet_NaN(), 1.0};
  }
  const double r = detail::mod_positive(std::fabs(x), detail::pi);
  const bool upper = r > detail::half_pi;
  const double red = detail::clamp_red(upper ? detail::pi - r : r);
  double sign = upper ? -1.0 : 1.0;
  sign = std::signbit(x) ? -sign : sign;
  return {red, sign};
}

}  // namespace fasttrig
