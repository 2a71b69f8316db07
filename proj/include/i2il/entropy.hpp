#pragma once

#include <cstdint>
#include <span>

#include "i2il/bit_io.hpp"
#include "i2il/block.hpp"

namespace i2il {

/// Rice parameter k in [0, 7]; 3 bits in the stream.
struct RiceParam {
  unsigned k = 0;
  friend constexpr bool operator==(const RiceParam&, const RiceParam&) = default;
};

inline constexpr unsigned kMaxRiceParam = 7;
inline constexpr unsigned kRiceParamBits = 3;
/// Quotients at or above this are escaped.
inline constexpr std::uint32_t kRiceEscapeQuotient = 16;
inline constexpr unsigned kRiceEscapeRawBits = 16;

/// 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
constexpr std::uint32_t signed_to_unsigned(std::int32_t v) {
  return v >= 0 ? static_cast<std::uint32_t>(v) * 2u : static_cast<std::uint32_t>(-(static_cast<std::int64_t>(v) * 2) - 1);
}

constexpr std::int32_t unsigned_to_signed(std::uint32_t u) {
  return (u & 1u) ? -static_cast<std::int32_t>((u + 1) / 2) : static_cast<std::int32_t>(u / 2);
}

/// Codeword length in bits of `u` under parameter `k`.
constexpr unsigned rice_length(std::uint32_t u, RiceParam k) {
  const std::uint32_t q = u >> k.k;
  return q < kRiceEscapeQuotient ? q + 1 + k.k : kRiceEscapeQuotient + kRiceEscapeRawBits;
}

/// q ones, a zero, then the k low bits of u; or, for q >= 16, sixteen ones
/// followed by u as a raw 16-bit field. Requires u < 2^16.
void rice_encode(std::uint32_t u, RiceParam k, BitWriter& w);
std::uint32_t rice_decode(BitReader& r, RiceParam k);

/// Total codeword bits for the signed values under `k`.
unsigned block_cost(std::span<const std::int32_t> values, RiceParam k);

/// The k with the fewest total bits over the 16 values; smallest k on ties.
RiceParam choose_k(std::span<const std::int32_t, kBlockArea> values);

}  // namespace i2il
