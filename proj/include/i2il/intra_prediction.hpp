#pragma once

#include <array>
#include <cstdint>

#include "i2il/block.hpp"
#include "i2il/image.hpp"

namespace i2il {

/// Reduced intra mode set. The numeric value is the 3-bit code in the stream.
enum class IntraMode : std::uint8_t {
  DC = 0,
  Vertical = 1,
  Horizontal = 2,
  Planar = 3,
  DiagDownLeft = 4,
  DiagDownRight = 5,
};

inline constexpr int kNumIntraModes = 6;

inline constexpr std::array<IntraMode, kNumIntraModes> kAllIntraModes{
    IntraMode::DC,     IntraMode::Vertical,     IntraMode::Horizontal,
    IntraMode::Planar, IntraMode::DiagDownLeft, IntraMode::DiagDownRight};

const char* to_string(IntraMode mode);

/// Neighbouring samples of a 4x4 block: top row T[0..7] (T[4..7] lie above
/// and to the right), left column L[0..3] and the top-left corner C.
struct ReferenceSamples {
  std::array<std::int32_t, 8> top{};
  std::array<std::int32_t, 4> left{};
  std::int32_t corner = 0;

  bool top_available = false;
  bool top_right_available = false;
  bool left_available = false;
  bool corner_available = false;

  friend bool operator==(const ReferenceSamples&, const ReferenceSamples&) = default;
};

/// Gathers the references of the block whose top-left sample is (x0, y0)
/// from an already reconstructed plane whose dimensions are multiples of 4,
/// assuming raster block order. Missing samples are substituted:
///   - T[4..7] from T[3] when only the above-right part is missing;
///   - a missing top row from L[0], else 128;
///   - a missing left column from T[0], else 128;
///   - a missing corner from T[0], then L[0], then 128.
ReferenceSamples prepare_references(const ImagePlane& recon, int x0, int y0);

/// Throws DecodeError for a mode value outside the table.
Block4x4 predict(const ReferenceSamples& refs, IntraMode mode);

/// Maps a raw 3-bit code to a mode, throwing DecodeError for 6 and 7.
IntraMode intra_mode_from_code(unsigned code);

Block4x4 residual(const Block4x4& pixels, const Block4x4& pred);
Block4x4 reconstruct(const Block4x4& pred, const Block4x4& residual);

/// Loads / stores the 4x4 block at (x0, y0).
Block4x4 load_block(const ImagePlane& plane, int x0, int y0);
void store_block(ImagePlane& plane, int x0, int y0, const Block4x4& pixels);

}  // namespace i2il
