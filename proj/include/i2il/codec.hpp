#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "i2il/bit_io.hpp"
#include "i2il/block.hpp"
#include "i2il/entropy.hpp"
#include "i2il/image.hpp"
#include "i2il/intra_prediction.hpp"

namespace i2il {

/// Residual processing applied before entropy coding.
///
///   system      hor/ver intra   other intra
///   NONE        -               -
///   RDPCM       h/v rdpcm       -
///   I2I         i2i             i2i
///   I2I_RDPCM   h/v rdpcm       i2i
///
/// The RDPCM direction follows the intra mode and is never signalled.
enum class SystemId : std::uint8_t { NONE = 0, RDPCM = 1, I2I = 2, I2I_RDPCM = 3 };

inline constexpr std::array<SystemId, 4> kAllSystems{SystemId::NONE, SystemId::RDPCM, SystemId::I2I,
                                                     SystemId::I2I_RDPCM};

/// CLI spelling: none, rdpcm, i2i, i2i-rdpcm.
std::string_view to_string(SystemId sys);
std::optional<SystemId> parse_system(std::string_view name);

/// Stream layout: "I2IL", version, system, width (u16 BE), height (u16 BE),
/// bitdepth; then per 4x4 block in raster order over the padded grid:
/// mode (3 bits), k (3 bits), 16 Rice codewords in raster order; then zero
/// padding to a byte boundary.
struct StreamHeader {
  static constexpr std::array<std::uint8_t, 4> kMagic{'I', '2', 'I', 'L'};
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::uint8_t kBitDepth = 8;
  static constexpr std::size_t kSize = 11;

  SystemId system = SystemId::NONE;
  std::uint16_t width = 0;
  std::uint16_t height = 0;

  void write(BitWriter& w) const;
  /// Validates magic, version, system, bitdepth and non-zero dimensions.
  static StreamHeader read(std::span<const std::uint8_t> bytes);
};

inline constexpr unsigned kModeBits = 3;

Block4x4 route_residual(const Block4x4& res, IntraMode mode, SystemId sys);
Block4x4 unroute_residual(const Block4x4& routed, IntraMode mode, SystemId sys);

struct BlockDecision {
  IntraMode mode = IntraMode::DC;
  RiceParam k;
  Block4x4 routed;
  /// mode + k + codewords.
  unsigned cost_bits = 0;
};

/// Bits for one block coded with a given mode and parameter.
unsigned block_bits(const Block4x4& routed, RiceParam k);

/// Evaluates every mode, picks the cheapest (lowest mode index on ties).
BlockDecision decide_block(const Block4x4& pixels, const ReferenceSamples& refs, SystemId sys);

void write_block(const BlockDecision& decision, BitWriter& w);

struct DecodedBlock {
  IntraMode mode = IntraMode::DC;
  RiceParam k;
  Block4x4 routed;
};

DecodedBlock read_block(BitReader& r);

/// Throws InputError for empty planes or dimensions above 65535.
std::vector<std::uint8_t> encode_image(const ImagePlane& plane, SystemId sys);
/// Throws DecodeError on any malformed input.
ImagePlane decode_image(std::span<const std::uint8_t> bytes);

struct SystemSize {
  SystemId system = SystemId::NONE;
  std::size_t bits = 0;
  double bits_per_pixel = 0.0;
  /// 100 * (1 - bits / bits_NONE)
  double reduction_pct = 0.0;
};

double reduction_percent(std::size_t bits, std::size_t baseline_bits);

/// Encodes under all four systems. Sizes include the header.
std::array<SystemSize, 4> bitrate_report(const ImagePlane& plane);

}  // namespace i2il
