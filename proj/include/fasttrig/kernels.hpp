#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "fasttrig/fisr.hpp"
#include "fasttrig/reduction.hpp"
#include "fasttrig/segments.hpp"

namespace fasttrig {

// Reduced angles closer than this to pi/2 make the tangent denominator
// vanish; proposed_tan returns a signed infinity inside the window.
inline constexpr double tan_pole_guard = 1e-3;

inline double eval_sin_segment(const SegmentCoeffs& s, double red, SqrtMode mode = {}) noexcept {
  const double poly = s.a * red + s.b;
  const double radicand = (s.X * red + s.Y) * red + s.Z;
  return poly * fast_inverse_sqrt(radicand, mode);
}

inline double eval_cos_segment(const SegmentCoeffs& s, double red, SqrtMode mode = {}) noexcept {
  const double poly = s.c * red + s.d;
  const double radicand = (s.X * red + s.Y) * red + s.Z;
  return poly * fast_inverse_sqrt(radicand, mode);
}

// (a x + b) / (c x + d). The fisr path forms the reciprocal as
// rsqrt(den)^2, so no division is issued; exact mode divides.
inline double eval_tan_segment(const SegmentCoeffs& s, double red, SqrtMode mode = {}) noexcept {
  const double poly = s.a * red + s.b;
  const double den = s.c * red + s.d;
  if (mode.method == SqrtMode::Method::exact) {
    return poly / den;
  }
  const double r = fast_inverse_sqrt(den, mode);
  return poly * (r * r);
}

// Piecewise rational sine. Accuracy contract holds for |x| <= 1e6:
// absolute error stays under 1.6e-3 in exact mode, 4e-3 with fisr.
// NaN and infinite inputs propagate NaN.
inline double proposed_sin(double x, SqrtMode mode = {}) noexcept {
  const ReducedAngle ra = reduce_sin(x);
  const SegmentCoeffs& s = segment_table.segments[static_cast<std::size_t>(segment_index(ra.red))];
  return ra.sign * eval_sin_segment(s, ra.red, mode);
}

inline double proposed_cos(double x, SqrtMode mode = {}) noexcept {
  const ReducedAngle ra = reduce_cos(x);
  const SegmentCoeffs& s = segment_table.segments[static_cast<std::size_t>(segment_index(ra.red))];
  return ra.sign * eval_cos_segment(s, ra.red, mode);
}

// Piecewise rational tangent; returns sign * infinity inside the pole
// guard window so the denominator zero at pi/2 is never evaluated.
inline double proposed_tan(double x, SqrtMode mode = {}) noexcept {
  const ReducedAngle ra = reduce_tan(x);
  if (std::fabs(ra.red - detail::half_pi) < tan_pole_guard) {
    return ra.sign * std::numeric_limits<double>::infinity();
  }
  const SegmentCoeffs& s = segment_table.segments[static_cast<std::size_t>(segment_index(ra.red))];
  return ra.sign * eval_tan_segment(s, ra.red, mode);
}

namespace detail {

template <class F>
std::vector<double> map_batch(std::span<const double> xs, F f) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = f(xs[i]);
  }
  return out;
}

}  // namespace detail

// Batch forms evaluate the scalar kernel per element; element i is
// bitwise identical to the scalar call in the same mode.
inline std::vector<double> proposed_sin_batch(std::span<const double> xs, SqrtMode mode = {}) {
  return detail::map_batch(xs, [mode](double x) { return proposed_sin(x, mode); });
}

inline std::vector<double> proposed_cos_batch(std::span<const double> xs, SqrtMode mode = {}) {
  return detail::map_batch(xs, [mode](double x) { return proposed_cos(x, mode); });
}

inline std::vector<double> proposed_tan_batch(std::span<const double> xs, SqrtMode mode = {}) {
  return detail::map_batch(xs, [mode](double x) { return proposed_tan(x, mode); });
}

}  // namespace fasttrig
