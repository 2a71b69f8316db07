#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace i2il {

/// MSB-first bit packer. Bits are appended to the current byte starting at
/// its most significant bit; finish() zero-pads the last byte.
class BitWriter {
public:
  void put_bit(unsigned bit);
  /// Writes the low `count` bits of `value`, most significant first. count <= 32.
  void put_bits(std::uint32_t value, unsigned count);
  /// Appends whole bytes; the writer must be byte aligned.
  void put_bytes(std::span<const std::uint8_t> bytes);

  std::size_t bit_count() const { return bits_; }
  bool byte_aligned() const { return bits_ % 8 == 0; }

  /// Returns the buffer, zero-padded to a byte boundary.
  std::vector<std::uint8_t> finish() &&;
  const std::vector<std::uint8_t>& bytes() const { return buf_; }

private:
  std::vector<std::uint8_t> buf_;
  std::size_t bits_ = 0;
};

/// MSB-first bit reader over a borrowed buffer. Reading past the end throws
/// DecodeError.
class BitReader {
public:
  explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

  unsigned get_bit();
  std::uint32_t get_bits(unsigned count);

  std::size_t position() const { return pos_; }
  std::size_t bits_left() const { return data_.size() * 8 - pos_; }

  /// True when every bit from the current position up to the end is zero
  /// and fewer than 8 of them remain.
  bool only_padding_left() const;

private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace i2il
