#include "i2il/transforms.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace i2il {

namespace {

constexpr bool in_domain(std::int64_t x) { return x >= -kIntDomain && x <= kIntDomain; }

constexpr LiftingFactor kHalf{1, 1};

}  // namespace

LiftingFactor LiftingFactor::quantize(double x, unsigned max_shift) {
  auto k = static_cast<std::int64_t>(std::llround(std::ldexp(x, static_cast<int>(max_shift))));
  unsigned m = max_shift;
  while (m > 0 && k % 2 == 0) {
    k /= 2;
    --m;
  }
  return {static_cast<std::int32_t>(k), m};
}

IntPair lift_forward(IntPair pair, LiftingFactor f, LiftTarget target) {
  assert(in_domain(pair.first) && in_domain(pair.second));
  if (target == LiftTarget::first)
    pair.first = static_cast<std::int32_t>(pair.first + f.apply(pair.second));
  else
    pair.second = static_cast<std::int32_t>(pair.second + f.apply(pair.first));
  return pair;
}

IntPair lift_inverse(IntPair pair, LiftingFactor f, LiftTarget target) {
  assert(in_domain(pair.first) && in_domain(pair.second));
  if (target == LiftTarget::first)
    pair.first = static_cast<std::int32_t>(pair.first - f.apply(pair.second));
  else
    pair.second = static_cast<std::int32_t>(pair.second - f.apply(pair.first));
  return pair;
}

RotationParams RotationParams::from_angle(double alpha, unsigned max_shift) {
  const double s = std::sin(alpha);
  if (s == 0.0 || std::abs(s) < 1e-15)
    throw std::invalid_argument("rotation angle has sin(alpha) == 0");
  RotationParams rp;
  rp.alpha = alpha;
  rp.p = (std::cos(alpha) - 1.0) / s;
  rp.u = s;
  rp.p_q = LiftingFactor::quantize(rp.p, max_shift);
  rp.u_q = LiftingFactor::quantize(rp.u, max_shift);
  return rp;
}

IntPair rotate3_forward(IntPair pair, const RotationParams& rp) {
  pair = lift_forward(pair, rp.p_q, LiftTarget::first);
  pair = lift_forward(pair, rp.u_q, LiftTarget::second);
  return lift_forward(pair, rp.p_q, LiftTarget::first);
}

IntPair rotate3_inverse(IntPair pair, const RotationParams& rp) {
  pair = lift_inverse(pair, rp.p_q, LiftTarget::first);
  pair = lift_inverse(pair, rp.u_q, LiftTarget::second);
  return lift_inverse(pair, rp.p_q, LiftTarget::first);
}

IntPair lb_forward(std::int32_t a, std::int32_t b) {
  // (b, a) -> (b, a - b) -> (b + rnd((a - b)/2), a - b)
  IntPair p{b, a - b};
  p = lift_forward(p, kHalf, LiftTarget::first);
  return p;
}

IntPair lb_inverse(std::int32_t s, std::int32_t d) {
  const IntPair p = lift_inverse({s, d}, kHalf, LiftTarget::first);
  return {p.second + p.first, p.first};
}

IntVec4 i2i_dct4_forward(const IntVec4& x) {
  const auto [s0, d0] = lb_forward(x[0], x[3]);
  const auto [s1, d1] = lb_forward(x[1], x[2]);
  const auto [X0, X2] = lb_forward(s0, s1);

  // Odd part: scaled rotation by two lifting steps, p = u = 1/2.
  IntPair odd{d0, d1};
  odd = lift_forward(odd, kHalf, LiftTarget::first);
  odd = lift_inverse(odd, kHalf, LiftTarget::second);
  return {X0, odd.first, X2, odd.second};
}

IntVec4 i2i_dct4_inverse(const IntVec4& X) {
  IntPair odd{X[1], X[3]};
  odd = lift_forward(odd, kHalf, LiftTarget::second);
  odd = lift_inverse(odd, kHalf, LiftTarget::first);
  const auto [d0, d1] = odd;

  const auto [s0, s1] = lb_inverse(X[0], X[2]);
  const auto [x0, x3] = lb_inverse(s0, d0);
  const auto [x1, x2] = lb_inverse(s1, d1);
  return {x0, x1, x2, x3};
}

Block4x4 i2i_dct4_2d_forward(const Block4x4& residual) {
  Block4x4 out = residual;
  for (int r = 0; r < kBlockSize; ++r) out.set_row(r, i2i_dct4_forward(out.row(r)));
  for (int c = 0; c < kBlockSize; ++c) out.set_col(c, i2i_dct4_forward(out.col(c)));
  out.stage = Stage::coeff;
  return out;
}

Block4x4 i2i_dct4_2d_inverse(const Block4x4& coeff) {
  Block4x4 out = coeff;
  for (int c = 0; c < kBlockSize; ++c) out.set_col(c, i2i_dct4_inverse(out.col(c)));
  for (int r = 0; r < kBlockSize; ++r) out.set_row(r, i2i_dct4_inverse(out.row(r)));
  out.stage = Stage::residual;
  return out;
}

std::array<double, 4> dct4_float_reference(const std::array<double, 4>& x) {
  std::array<double, 4> X{};
  for (int k = 0; k < 4; ++k) {
    const double scale = k == 0 ? 0.5 : std::numbers::sqrt2 / 2.0;
    double acc = 0.0;
    for (int n = 0; n < 4; ++n) acc += x[n] * std::cos(std::numbers::pi * (2 * n + 1) * k / 8.0);
    X[k] = scale * acc;
  }
  return X;
}

}  // namespace i2il
