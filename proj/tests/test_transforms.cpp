#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "i2il/transforms.hpp"
#include "oracles.hpp"

using namespace i2il;

namespace {

const LiftingFactor kHalf{1, 1};

IntVec4 to_int(const std::array<std::int64_t, 4>& x) {
  return {static_cast<std::int32_t>(x[0]), static_cast<std::int32_t>(x[1]), static_cast<std::int32_t>(x[2]),
          static_cast<std::int32_t>(x[3])};
}

}  // namespace

TEST_CASE("round_shift matches floor division") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<std::int64_t> val(-(1 << 22), 1 << 22);
  for (unsigned m = 0; m <= 8; ++m)
    for (int i = 0; i < 2000; ++i) {
      const auto z = val(gen);
      REQUIRE(round_shift(z, m) == oracle::rnd(z, m));
    }
  CHECK(round_shift(5, 1) == 3);
  CHECK(round_shift(-5, 1) == -2);
  CHECK(round_shift(-30, 1) == -15);
}

TEST_CASE("LiftingFactor quantization") {
  CHECK(LiftingFactor::quantize(0.5) == LiftingFactor{1, 1});
  CHECK(LiftingFactor::quantize(-1.0) == LiftingFactor{-1, 0});
  CHECK(LiftingFactor::quantize(0.375) == LiftingFactor{3, 3});
  const auto f = LiftingFactor::quantize(std::sin(3 * std::numbers::pi / 8));
  CHECK(f.m <= 8);
  CHECK(f.value() == doctest::Approx(std::sin(3 * std::numbers::pi / 8)).epsilon(1.0 / 256));
}

TEST_CASE("lift_forward examples") {
  CHECK(lift_forward({3, 5}, kHalf, LiftTarget::first) == IntPair{6, 5});
  CHECK(lift_forward({-7, -5}, kHalf, LiftTarget::first) == IntPair{-9, -5});
  CHECK(lift_forward({42, 0}, LiftingFactor{-171, 8}, LiftTarget::first) == IntPair{42, 0});
  CHECK(lift_forward({5, 3}, kHalf, LiftTarget::second) == IntPair{5, 6});
  CHECK(lift_inverse({6, 5}, kHalf, LiftTarget::first) == IntPair{3, 5});
  CHECK(lift_inverse({42, 0}, LiftingFactor{3, 3}, LiftTarget::first) == IntPair{42, 0});
}

TEST_CASE("lifting steps invert for random pairs and factors") {
  std::mt19937 gen(1);
  std::uniform_int_distribution<std::int32_t> val(-(1 << 16), 1 << 16);
  std::uniform_int_distribution<unsigned> shift(0, 8);
  for (int i = 0; i < 100000; ++i) {
    const IntPair p{val(gen), val(gen)};
    // |k / 2^m| <= 4 keeps every output inside the integer domain
    const unsigned m = shift(gen);
    const std::int32_t span = 4 << m;
    const LiftingFactor f{std::uniform_int_distribution<std::int32_t>(-span, span)(gen), m};
    const auto t = (i & 1) ? LiftTarget::first : LiftTarget::second;
    REQUIRE(lift_inverse(lift_forward(p, f, t), f, t) == p);
  }
}

TEST_CASE("three-lift factorization equals the rotation matrix") {
  for (double alpha : {0.1, 0.7, std::numbers::pi / 4, 3 * std::numbers::pi / 8, 2.5, -1.2}) {
    const auto rp = RotationParams::from_angle(alpha);
    const double p = rp.p;
    const double u = rp.u;
    // [1 p; 0 1] [1 0; u 1] [1 p; 0 1]
    const double m00 = 1 + p * u;
    const double m01 = p + p * (1 + p * u);
    const double m10 = u;
    const double m11 = u * p + 1;
    CHECK(std::abs(m00 - std::cos(alpha)) < 1e-12);
    CHECK(std::abs(m01 + std::sin(alpha)) < 1e-12);
    CHECK(std::abs(m10 - std::sin(alpha)) < 1e-12);
    CHECK(std::abs(m11 - std::cos(alpha)) < 1e-12);
  }
}

TEST_CASE("rotate3") {
  SUBCASE("zero input") {
    for (double alpha : {0.3, 1.0, 2.0}) CHECK(rotate3_forward({0, 0}, RotationParams::from_angle(alpha)) == IntPair{});
  }
  SUBCASE("quarter turn is exact") {
    const auto rp = RotationParams::from_angle(std::numbers::pi / 2);
    CHECK(rp.p_q == LiftingFactor{-1, 0});
    CHECK(rp.u_q == LiftingFactor{1, 0});
    CHECK(rotate3_forward({3, 4}, rp) == IntPair{-4, 3});
    CHECK(rotate3_inverse({-4, 3}, rp) == IntPair{3, 4});
    std::mt19937 gen(5);
    std::uniform_int_distribution<std::int32_t> val(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
      const IntPair p{val(gen), val(gen)};
      REQUIRE(rotate3_forward(p, rp) == IntPair{-p.second, p.first});
    }
  }
  SUBCASE("3pi/8 stays close to the float rotation") {
    const double alpha = 3 * std::numbers::pi / 8;
    const auto out = rotate3_forward({100, 0}, RotationParams::from_angle(alpha));
    CHECK(std::abs(out.first - 38) <= 2);
    CHECK(std::abs(out.second - 92) <= 2);

    std::mt19937 gen(8);
    std::uniform_int_distribution<std::int32_t> val(-4096, 4096);
    const auto rp = RotationParams::from_angle(alpha);
    for (int i = 0; i < 1000; ++i) {
      const IntPair p{val(gen), val(gen)};
      const auto q = rotate3_forward(p, rp);
      const double fx = std::cos(alpha) * p.first - std::sin(alpha) * p.second;
      const double fy = std::sin(alpha) * p.first + std::cos(alpha) * p.second;
      // factor quantization error (<= 2^-9 each) scaled by the input, plus rounding
      const double tol = 3 + 8.0 * 4096 / 512;
      REQUIRE(std::abs(q.first - fx) < tol);
      REQUIRE(std::abs(q.second - fy) < tol);
    }
  }
  SUBCASE("round trip") {
    std::mt19937 gen(2);
    std::uniform_int_distribution<std::int32_t> val(-(1 << 16), 1 << 16);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    auto rp = RotationParams::from_angle(0.9);
    for (int i = 0; i < 100000; ++i) {
      if (i % 1000 == 0) rp = RotationParams::from_angle(angle(gen));
      const IntPair p{val(gen), val(gen)};
      REQUIRE(rotate3_inverse(rotate3_forward(p, rp), rp) == p);
    }
  }
  SUBCASE("degenerate angle rejected") {
    CHECK_THROWS_AS(RotationParams::from_angle(0.0), std::invalid_argument);
  }
}

TEST_CASE("lifting butterfly") {
  CHECK(lb_forward(5, 3) == IntPair{4, 2});
  CHECK(lb_forward(0, 0) == IntPair{0, 0});
  CHECK(lb_forward(7, 4) == IntPair{6, 3});
  CHECK(lb_inverse(6, 3) == IntPair{7, 4});
  for (int a = -300; a <= 300; a += 7)
    for (int b = -300; b <= 300; b += 3) {
      const auto [s, d] = lb_forward(a, b);
      REQUIRE(d == a - b);
      REQUIRE(s == oracle::rnd(a + b, 1));
      REQUIRE(lb_inverse(s, d) == IntPair{a, b});
    }
}

TEST_CASE("i2i_dct4 examples") {
  CHECK(i2i_dct4_forward({0, 0, 0, 0}) == IntVec4{0, 0, 0, 0});
  for (int c : {-255, -7, 1, 100, 255}) {
    CHECK(i2i_dct4_forward({c, c, c, c}) == IntVec4{c, 0, 0, 0});
    CHECK(i2i_dct4_inverse({c, 0, 0, 0}) == IntVec4{c, c, c, c});
  }
  // d0=-30, d1=-10, s0=s1=25; y0=-30+rnd(-10/2)=-35, y1=-10-rnd(-35/2)=7
  CHECK(to_int(oracle::i2i_dct4({10, 20, 30, 40})) == IntVec4{25, -35, 0, 7});
  CHECK(i2i_dct4_forward({10, 20, 30, 40}) == IntVec4{25, -35, 0, 7});
  CHECK(i2i_dct4_inverse({25, -35, 0, 7}) == IntVec4{10, 20, 30, 40});
}

TEST_CASE("i2i_dct4 agrees with the step-by-step oracle") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<std::int32_t> val(-(1 << 15), 1 << 15);
  for (int i = 0; i < 100000; ++i) {
    const IntVec4 x{val(gen), val(gen), val(gen), val(gen)};
    REQUIRE(i2i_dct4_forward(x) == to_int(oracle::i2i_dct4({x[0], x[1], x[2], x[3]})));
  }
}

TEST_CASE("i2i_dct4 exhaustive corner grid round trip") {
  const std::array<std::int32_t, 7> grid{-255, -128, -1, 0, 1, 127, 255};
  int count = 0;
  for (auto a : grid)
    for (auto b : grid)
      for (auto c : grid)
        for (auto d : grid) {
          const IntVec4 x{a, b, c, d};
          REQUIRE(i2i_dct4_inverse(i2i_dct4_forward(x)) == x);
          ++count;
        }
  CHECK(count == 2401);
}

TEST_CASE("i2i_dct4 1D dynamic range for 8-bit residuals") {
  const oracle::Interval r{-255, 255};
  const auto bounds = oracle::i2i_dct4_bounds({r, r, r, r});
  CHECK(oracle::magnitude(bounds[0]) <= 256);
  CHECK(oracle::magnitude(bounds[2]) <= 511);
  CHECK(oracle::magnitude(bounds[1]) <= 1024);
  CHECK(oracle::magnitude(bounds[3]) <= 1024);
}

TEST_CASE("i2i_dct4_2d") {
  Block4x4 zero;
  CHECK(same_values(i2i_dct4_2d_forward(zero), zero));
  CHECK(i2i_dct4_2d_forward(zero).stage == Stage::coeff);

  for (int c : {-255, -3, 9, 255}) {
    const auto coeff = i2i_dct4_2d_forward(Block4x4::filled(c));
    CHECK(coeff.v[0] == c);
    for (int i = 1; i < kBlockArea; ++i) CHECK(coeff.v[i] == 0);
  }

  SUBCASE("rows then columns") {
    Block4x4 b;
    for (int i = 0; i < kBlockArea; ++i) b.v[i] = (i * 37) % 255 - 127;
    Block4x4 expect = b;
    for (int r = 0; r < 4; ++r) expect.set_row(r, i2i_dct4_forward(expect.row(r)));
    for (int c = 0; c < 4; ++c) expect.set_col(c, i2i_dct4_forward(expect.col(c)));
    CHECK(same_values(i2i_dct4_2d_forward(b), expect));
  }

  SUBCASE("random residual blocks round trip within range") {
    std::mt19937 gen(4);
    std::uniform_int_distribution<std::int32_t> val(-255, 255);
    std::int32_t max_mag = 0;
    for (int i = 0; i < 10000; ++i) {
      Block4x4 b;
      for (auto& v : b.v) v = val(gen);
      const auto coeff = i2i_dct4_2d_forward(b);
      for (auto v : coeff.v) max_mag = std::max(max_mag, std::abs(v));
      REQUIRE(same_values(i2i_dct4_2d_inverse(coeff), b));
    }
    MESSAGE("max |coeff| over 10^4 random blocks: " << max_mag);
    CHECK(max_mag <= 8191);
  }

  SUBCASE("interval bound on 2D output") {
    const oracle::Interval r{-255, 255};
    const auto rows = oracle::i2i_dct4_bounds({r, r, r, r});
    std::int64_t worst = 0;
    for (const auto& col_in : rows) {
      const auto cols = oracle::i2i_dct4_bounds({col_in, col_in, col_in, col_in});
      for (const auto& iv : cols) worst = std::max(worst, oracle::magnitude(iv));
    }
    MESSAGE("interval bound on |coeff|: " << worst);
    CHECK(worst <= 8191);
  }
}

TEST_CASE("float DCT oracle") {
  const auto dc = dct4_float_reference({1, 1, 1, 1});
  CHECK(dc[0] == doctest::Approx(2.0));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(dc[k]) < 1e-12);

  // not a basis vector for N = 4: energy splits between X1 and X3
  const auto alt = dct4_float_reference({1, -1, 1, -1});
  CHECK(std::abs(alt[0]) < 1e-12);
  CHECK(std::abs(alt[2]) < 1e-12);
  CHECK(std::abs(alt[3]) > std::abs(alt[1]));
  CHECK(alt[1] * alt[1] + alt[3] * alt[3] == doctest::Approx(4.0));

  std::mt19937 gen(6);
  std::normal_distribution<double> n(0.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const std::array<double, 4> x{n(gen), n(gen), n(gen), n(gen)};
    const auto X = dct4_float_reference(x);
    double ex = 0, eX = 0;
    for (int k = 0; k < 4; ++k) {
      ex += x[k] * x[k];
      eX += X[k] * X[k];
    }
    REQUIRE(std::abs(std::sqrt(ex) - std::sqrt(eX)) < 1e-9);
  }
}

TEST_CASE("i2i outputs track the float DCT on correlated data") {
  std::mt19937_64 gen(2024);
  std::array<std::vector<double>, 4> i2i_out, float_out;
  std::array<double, 4> mean_abs{};
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto v = oracle::ar1_vector(gen, 0.95, 30.0);
    const IntVec4 x{static_cast<std::int32_t>(std::lround(v[0])), static_cast<std::int32_t>(std::lround(v[1])),
                    static_cast<std::int32_t>(std::lround(v[2])), static_cast<std::int32_t>(std::lround(v[3]))};
    const auto X = i2i_dct4_forward(x);
    const auto F = dct4_float_reference({double(x[0]), double(x[1]), double(x[2]), double(x[3])});
    for (int k = 0; k < 4; ++k) {
      i2i_out[k].push_back(X[k]);
      float_out[k].push_back(F[k]);
      mean_abs[k] += std::abs(X[k]) / n;
    }
  }
  for (int k = 0; k < 4; ++k) {
    const double r = std::abs(oracle::correlation(i2i_out[k], float_out[k]));
    MESSAGE("coordinate " << k << " correlation " << r);
    CHECK(r > 0.9);
  }
  CHECK(mean_abs[0] >= mean_abs[2]);
  CHECK(mean_abs[0] >= mean_abs[1]);
  CHECK(mean_abs[1] >= mean_abs[3]);
}
