#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace fasttrig {

// Square-root evaluation path used by the rational kernels. `exact`
// routes through the library sqrt and isolates the polynomial error;
// `fisr` is the bit-pattern inverse square root refined by Newton steps
// and is the default production path.
struct SqrtMode {
  enum class Method : std::uint8_t { exact, fisr };

  Method method = Method::fisr;
  int newton_steps = 1;

  static constexpr SqrtMode exact() noexcept { return {Method::exact, 0}; }
  static constexpr SqrtMode fisr(int steps = 1) noexcept {
    return {Method::fisr, steps < 1 ? 1 : steps};
  }
};

inline constexpr std::uint64_t fisr_magic = 0x5fe6eb50c7b537a9ull;

// Approximates v^(-1/2) for positive finite v. One Newton step keeps the
// relative error under 2e-3 across [1e-12, 1e12]. Non-positive, NaN or
// infinite inputs yield NaN in either mode.
inline double fast_inverse_sqrt(double v, SqrtMode mode = {}) noexcept {
  if (!(v > 0.0) || v == std::numeric_limits<double>::infinity()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (mode.method == SqrtMode::Method::exact) {
    return 1.0 / std::sqrt(v);
  }
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  bits = fisr_magic - (bits >> 1);
  double y = std::bit_cast<double>(bits);
  const double half_v = 0.5 * v;
  for (int i = 0; i < mode.newton_steps; ++i) {
    y = y * (1.5 - half_v * y * y);
  }
  return y;
}

}  // namespace fasttrig
