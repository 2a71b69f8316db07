#include "i2il/bit_io.hpp"

#include <cassert>

#include "i2il/errors.hpp"

namespace i2il {

void BitWriter::put_bit(unsigned bit) {
  if (bits_ % 8 == 0) buf_.push_back(0);
  if (bit & 1u) buf_.back() |= static_cast<std::uint8_t>(0x80u >> (bits_ % 8));
  ++bits_;
}

void BitWriter::put_bits(std::uint32_t value, unsigned count) {
  assert(count <= 32);
  for (unsigned i = count; i-- > 0;) put_bit((value >> i) & 1u);
}

void BitWriter::put_bytes(std::span<const std::uint8_t> bytes) {
  assert(byte_aligned());
  buf_.insert(buf_.end(), bytes.begin(), bytes.end());
  bits_ += bytes.size() * 8;
}

std::vector<std::uint8_t> BitWriter::finish() && { return std::move(buf_); }

unsigned BitReader::get_bit() {
  if (pos_ >= data_.size() * 8) throw DecodeError("truncated stream");
  const unsigned bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
  ++pos_;
  return bit;
}

std::uint32_t BitReader::get_bits(unsigned count) {
  assert(count <= 32);
  if (count > bits_left()) throw DecodeError("truncated stream");
  std::uint32_t v = 0;
  for (unsigned i = 0; i < count; ++i) v = (v << 1) | get_bit();
  return v;
}

bool BitReader::only_padding_left() const {
  const std::size_t left = bits_left();
  if (left >= 8) return false;
  if (left == 0) return true;
  const unsigned mask = (1u << left) - 1u;
  return (data_.back() & mask) == 0;
}

}  // namespace i2il
