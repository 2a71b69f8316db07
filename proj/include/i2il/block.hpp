#pragma once

#include <array>
#include <cstdint>

namespace i2il {

inline constexpr int kBlockSize = 4;
inline constexpr int kBlockArea = kBlockSize * kBlockSize;

/// Internal integer domain of every transform stage is [-kIntDomain, kIntDomain].
inline constexpr std::int32_t kIntDomain = 1 << 20;

using IntVec4 = std::array<std::int32_t, 4>;

/// What the 16 values of a block currently hold.
enum class Stage : std::uint8_t { pixels, residual, rdpcm, coeff };

/// 4x4 grid of integers in row-major order.
struct Block4x4 {
  std::array<std::int32_t, kBlockArea> v{};
  Stage stage = Stage::residual;

  constexpr std::int32_t& at(int r, int c) { return v[r * kBlockSize + c]; }
  constexpr std::int32_t at(int r, int c) const { return v[r * kBlockSize + c]; }

  constexpr IntVec4 row(int r) const { return {at(r, 0), at(r, 1), at(r, 2), at(r, 3)}; }
  constexpr IntVec4 col(int c) const { return {at(0, c), at(1, c), at(2, c), at(3, c)}; }
  constexpr void set_row(int r, const IntVec4& x) {
    for (int c = 0; c < kBlockSize; ++c) at(r, c) = x[c];
  }
  constexpr void set_col(int c, const IntVec4& x) {
    for (int r = 0; r < kBlockSize; ++r) at(r, c) = x[r];
  }

  constexpr Block4x4 transposed() const {
    Block4x4 t;
    t.stage = stage;
    for (int r = 0; r < kBlockSize; ++r)
      for (int c = 0; c < kBlockSize; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  static constexpr Block4x4 filled(std::int32_t value, Stage stage = Stage::residual) {
    Block4x4 b;
    b.v.fill(value);
    b.stage = stage;
    return b;
  }

  friend constexpr bool operator==(const Block4x4&, const Block4x4&) = default;
};

/// Values-only comparison, ignoring the stage tag.
constexpr bool same_values(const Block4x4& a, const Block4x4& b) { return a.v == b.v; }

}  // namespace i2il
