#include "i2il/entropy.hpp"

#include <cassert>

namespace i2il {

void rice_encode(std::uint32_t u, RiceParam k, BitWriter& w) {
  assert(u < (1u << kRiceEscapeRawBits) && k.k <= kMaxRiceParam);
  const std::uint32_t q = u >> k.k;
  if (q >= kRiceEscapeQuotient) {
    w.put_bits((1u << kRiceEscapeQuotient) - 1u, kRiceEscapeQuotient);
    w.put_bits(u, kRiceEscapeRawBits);
    return;
  }
  w.put_bits((1u << (q + 1)) - 2u, q + 1);
  w.put_bits(u & ((1u << k.k) - 1u), k.k);
}

std::uint32_t rice_decode(BitReader& r, RiceParam k) {
  std::uint32_t q = 0;
  while (q < kRiceEscapeQuotient && r.get_bit() == 1u) ++q;
  if (q == kRiceEscapeQuotient) return r.get_bits(kRiceEscapeRawBits);
  return (q << k.k) | r.get_bits(k.k);
}

unsigned block_cost(std::span<const std::int32_t> values, RiceParam k) {
  unsigned bits = 0;
  for (const auto v : values) bits += rice_length(signed_to_unsigned(v), k);
  return bits;
}

RiceParam choose_k(std::span<const std::int32_t, kBlockArea> values) {
  RiceParam best{0};
  unsigned best_bits = block_cost(values, best);
  for (unsigned k = 1; k <= kMaxRiceParam; ++k) {
    const unsigned bits = block_cost(values, RiceParam{k});
    if (bits < best_bits) {
      best_bits = bits;
      best = RiceParam{k};
    }
  }
  return best;
}

}  // namespace i2il
