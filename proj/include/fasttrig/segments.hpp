#pragma once

#include <array>
#include <numbers>

namespace fasttrig {

// One pi/12 segment of the shared coefficient table. The tangent is the
// rational (a x + b) / (c x + d); sine and cosine reuse the same linear
// forms over the radicand X x^2 + Y x + Z = (a x + b)^2 + (c x + d)^2:
//
//   sin x ~ (a x + b) / sqrt(X x^2 + Y x + Z)
//   cos x ~ (c x + d) / sqrt(X x^2 + Y x + Z)
struct SegmentCoeffs {
  double a, b, c, d;  // rational coefficients, radian argument
  double X, Y, Z;     // radicand coefficients derived from a, b, c, d
};

struct SegmentTable {
  std::array<SegmentCoeffs, 6> segments;
  std::array<double, 7> knots;  // k * pi/12 for k = 0..6
};

namespace detail {

// Canonical degree-space coefficients. Segment slopes convert to radians
// by 180/pi; intercepts are unit-free. The values come from linear
// interpolation of sine at 15-degree knots (see derivation.hpp).
struct DegSegment {
  double a, b, c, d;
};

inline constexpr std::array<DegSegment, 6> degree_segments{{
    {11.0, 0.0, -1.0, 632.0},
    {10.0, 10.0, -4.0, 657.0},
    {6.0, 46.0, -5.0, 541.0},
    {10.0, 217.0, -13.0, 1252.0},
    {4.0, 297.0, -10.0, 910.0},
    {1.0, 542.0, -11.0, 990.0},
}};

inline constexpr double deg_per_rad = 180.0 / std::numbers::pi;

constexpr SegmentCoeffs to_radian_segment(const DegSegment& s) noexcept {
  const double a = s.a * deg_per_rad;
  const double b = s.b;
  const double c = s.c * deg_per_rad;
  const double d = s.d;
  return {a, b, c, d, a * a + c * c, 2.0 * (a * b + c * d), b * b + d * d};
}

constexpr SegmentTable make_segment_table() noexcept {
  constexpr double pi = std::numbers::pi;
  SegmentTable t{};
  for (int k = 0; k < 6; ++k) {
    t.segments[static_cast<std::size_t>(k)] = to_radian_segment(degree_segments[static_cast<std::size_t>(k)]);
  }
  // Reduced fractions keep each knot within one rounding of k*pi/12 and
  // make the natural boundary expressions (pi/4, pi/3, ...) land exactly.
  t.knots = {0.0, pi / 12.0, pi / 6.0, pi / 4.0, pi / 3.0, 5.0 * pi / 12.0, pi / 2.0};
  return t;
}

}  // namespace detail

inline constexpr SegmentTable segment_table = detail::make_segment_table();

// Segment holding a reduced angle in [0, pi/2]. Knots open the segment
// they are named after; pi/2 stays in segment 5.
inline constexpr int segment_index(double red) noexcept {
  const auto& k = segment_table.knots;
  return (red >= k[1]) + (red >= k[2]) + (red >= k[3]) + (red >= k[4]) + (red >= k[5]);
}

}  // namespace fasttrig
