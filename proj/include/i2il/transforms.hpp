#pragma once

// Integer-to-integer lifting primitives and the 4-point i2i DCT used on
// 4x4 prediction residuals.
//
// Every lifting step adds a rounded, scaled copy of one element of a pair to
// the other. Rounding is round-half-up through a biased arithmetic shift:
//
//     rnd(z / 2^m) = floor((z + 2^(m-1)) / 2^m),  m >= 1
//     rnd(z / 2^0) = z
//
// The inverse step subtracts exactly the same rounded quantity, so every
// network built from these steps is exactly invertible on integers.

#include <array>
#include <cstdint>

#include "i2il/block.hpp"

namespace i2il {

/// Round-half-up division by 2^shift.
constexpr std::int64_t round_shift(std::int64_t z, unsigned shift) {
  if (shift == 0) return z;
  return (z + (std::int64_t{1} << (shift - 1))) >> shift;
}

/// Dyadic rational k / 2^m.
struct LiftingFactor {
  std::int32_t k = 0;
  unsigned m = 0;

  constexpr double value() const { return static_cast<double>(k) / static_cast<double>(std::int64_t{1} << m); }
  /// rnd(k * x / 2^m)
  constexpr std::int64_t apply(std::int64_t x) const { return round_shift(k * x, m); }

  /// Nearest k/2^max_shift to `x`, reduced to lowest terms.
  static LiftingFactor quantize(double x, unsigned max_shift = 8);

  friend constexpr bool operator==(const LiftingFactor&, const LiftingFactor&) = default;
};

struct IntPair {
  std::int32_t first = 0;
  std::int32_t second = 0;
  friend constexpr bool operator==(const IntPair&, const IntPair&) = default;
};

enum class LiftTarget : std::uint8_t { first, second };

IntPair lift_forward(IntPair pair, LiftingFactor f, LiftTarget target);
IntPair lift_inverse(IntPair pair, LiftingFactor f, LiftTarget target);

/// Plane rotation by `alpha` factored as three lifting steps:
///
///     [cos -sin]   [1 p] [1 0] [1 p]
///     [sin  cos] = [0 1] [u 1] [0 1],   p = (cos - 1) / sin,  u = sin
///
/// `p` and `u` keep the exact real values; `p_q` and `u_q` are their dyadic
/// approximations used by the integer rotation.
struct RotationParams {
  double alpha = 0.0;
  double p = 0.0;
  double u = 0.0;
  LiftingFactor p_q;
  LiftingFactor u_q;

  /// Throws std::invalid_argument when sin(alpha) == 0.
  static RotationParams from_angle(double alpha, unsigned max_shift = 8);
};

IntPair rotate3_forward(IntPair pair, const RotationParams& rp);
IntPair rotate3_inverse(IntPair pair, const RotationParams& rp);

/// Lifting butterfly. Returns (s, d) with d = a - b and s = b + rnd(d/2), the
/// rounded mean of a and b.
IntPair lb_forward(std::int32_t a, std::int32_t b);
/// Returns (a, b).
IntPair lb_inverse(std::int32_t s, std::int32_t d);

/// Scaled 4-point i2i DCT. Output order is (X0, X1, X2, X3) in frequency
/// order; X0 is the rounded average of the inputs, and the rotation of the
/// odd part uses the lifting factors 1/2 and 1/2.
IntVec4 i2i_dct4_forward(const IntVec4& x);
IntVec4 i2i_dct4_inverse(const IntVec4& X);

/// Rows first, then columns. The result carries Stage::coeff.
Block4x4 i2i_dct4_2d_forward(const Block4x4& residual);
/// Columns first, then rows. The result carries Stage::residual.
Block4x4 i2i_dct4_2d_inverse(const Block4x4& coeff);

/// Orthonormal 4-point DCT-II. Test and analysis oracle only.
std::array<double, 4> dct4_float_reference(const std::array<double, 4>& x);

}  // namespace i2il
