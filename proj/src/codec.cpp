#include "i2il/codec.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "i2il/errors.hpp"
#include "i2il/rdpcm.hpp"
#include "i2il/transforms.hpp"

namespace i2il {

namespace {

std::optional<RdpcmDirection> inferred_direction(IntraMode mode) {
  if (mode == IntraMode::Horizontal) return RdpcmDirection::Horizontal;
  if (mode == IntraMode::Vertical) return RdpcmDirection::Vertical;
  return std::nullopt;
}

enum class Route { raw, rdpcm, i2i };

Route route_for(IntraMode mode, SystemId sys) {
  const bool hv = inferred_direction(mode).has_value();
  switch (sys) {
    case SystemId::NONE: return Route::raw;
    case SystemId::RDPCM: return hv ? Route::rdpcm : Route::raw;
    case SystemId::I2I: return Route::i2i;
    case SystemId::I2I_RDPCM: return hv ? Route::rdpcm : Route::i2i;
  }
  return Route::raw;
}

}  // namespace

std::string_view to_string(SystemId sys) {
  switch (sys) {
    case SystemId::NONE: return "none";
    case SystemId::RDPCM: return "rdpcm";
    case SystemId::I2I: return "i2i";
    case SystemId::I2I_RDPCM: return "i2i-rdpcm";
  }
  return "?";
}

std::optional<SystemId> parse_system(std::string_view name) {
  for (const auto sys : kAllSystems)
    if (to_string(sys) == name) return sys;
  return std::nullopt;
}

void StreamHeader::write(BitWriter& w) const {
  w.put_bytes(kMagic);
  w.put_bits(kVersion, 8);
  w.put_bits(static_cast<std::uint32_t>(system), 8);
  w.put_bits(width, 16);
  w.put_bits(height, 16);
  w.put_bits(kBitDepth, 8);
}

StreamHeader StreamHeader::read(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSize) throw DecodeError("truncated header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw DecodeError("bad magic");
  if (bytes[4] != kVersion) throw DecodeError("unsupported version " + std::to_string(bytes[4]));
  if (bytes[5] > static_cast<std::uint8_t>(SystemId::I2I_RDPCM))
    throw DecodeError("unknown system " + std::to_string(bytes[5]));
  if (bytes[10] != kBitDepth) throw DecodeError("unsupported bit depth " + std::to_string(bytes[10]));
  StreamHeader h;
  h.system = static_cast<SystemId>(bytes[5]);
  h.width = static_cast<std::uint16_t>((bytes[6] << 8) | bytes[7]);
  h.height = static_cast<std::uint16_t>((bytes[8] << 8) | bytes[9]);
  if (h.width == 0 || h.height == 0) throw DecodeError("zero image dimension");
  return h;
}

Block4x4 route_residual(const Block4x4& res, IntraMode mode, SystemId sys) {
  switch (route_for(mode, sys)) {
    case Route::raw: return res;
    case Route::rdpcm: return rdpcm_forward(res, *inferred_direction(mode));
    case Route::i2i: return i2i_dct4_2d_forward(res);
  }
  return res;
}

Block4x4 unroute_residual(const Block4x4& routed, IntraMode mode, SystemId sys) {
  switch (route_for(mode, sys)) {
    case Route::raw: {
      Block4x4 out = routed;
      out.stage = Stage::residual;
      return out;
    }
    case Route::rdpcm: return rdpcm_inverse(routed, *inferred_direction(mode));
    case Route::i2i: return i2i_dct4_2d_inverse(routed);
  }
  return routed;
}

unsigned block_bits(const Block4x4& routed, RiceParam k) {
  return kModeBits + kRiceParamBits + block_cost(routed.v, k);
}

BlockDecision decide_block(const Block4x4& pixels, const ReferenceSamples& refs, SystemId sys) {
  BlockDecision best;
  best.cost_bits = std::numeric_limits<unsigned>::max();
  for (const auto mode : kAllIntraModes) {
    const Block4x4 routed = route_residual(residual(pixels, predict(refs, mode)), mode, sys);
    const RiceParam k = choose_k(routed.v);
    const unsigned bits = block_bits(routed, k);
    if (bits < best.cost_bits) best = BlockDecision{mode, k, routed, bits};
  }
  return best;
}

void write_block(const BlockDecision& decision, BitWriter& w) {
  w.put_bits(static_cast<std::uint32_t>(decision.mode), kModeBits);
  w.put_bits(decision.k.k, kRiceParamBits);
  for (const auto v : decision.routed.v) rice_encode(signed_to_unsigned(v), decision.k, w);
}

DecodedBlock read_block(BitReader& r) {
  DecodedBlock b;
  b.mode = intra_mode_from_code(r.get_bits(kModeBits));
  b.k = RiceParam{r.get_bits(kRiceParamBits)};
  for (auto& v : b.routed.v) v = unsigned_to_signed(rice_decode(r, b.k));
  return b;
}

std::vector<std::uint8_t> encode_image(const ImagePlane& plane, SystemId sys) {
  if (plane.width < 1 || plane.height < 1) throw InputError("cannot encode an empty image");
  if (plane.width > 0xFFFF || plane.height > 0xFFFF) throw InputError("image dimensions exceed 65535");

  const ImagePlane padded = pad_to_block_grid(plane);
  ImagePlane recon(padded.width, padded.height);

  BitWriter w;
  StreamHeader{sys, static_cast<std::uint16_t>(plane.width), static_cast<std::uint16_t>(plane.height)}.write(w);

  for (int y0 = 0; y0 < padded.height; y0 += kBlockSize) {
    for (int x0 = 0; x0 < padded.width; x0 += kBlockSize) {
      const ReferenceSamples refs = prepare_references(recon, x0, y0);
      const BlockDecision d = decide_block(load_block(padded, x0, y0), refs, sys);
      write_block(d, w);
      store_block(recon, x0, y0, reconstruct(predict(refs, d.mode), unroute_residual(d.routed, d.mode, sys)));
    }
  }
  return std::move(w).finish();
}

ImagePlane decode_image(std::span<const std::uint8_t> bytes) {
  const StreamHeader h = StreamHeader::read(bytes);
  const ImagePlane geometry = pad_to_block_grid(ImagePlane(h.width, h.height));
  ImagePlane recon(geometry.width, geometry.height);

  BitReader r(bytes.subspan(StreamHeader::kSize));
  for (int y0 = 0; y0 < recon.height; y0 += kBlockSize) {
    for (int x0 = 0; x0 < recon.width; x0 += kBlockSize) {
      const ReferenceSamples refs = prepare_references(recon, x0, y0);
      const DecodedBlock b = read_block(r);
      const Block4x4 pixels = reconstruct(predict(refs, b.mode), unroute_residual(b.routed, b.mode, h.system));
      for (const auto v : pixels.v)
        if (v < 0 || v > 255) throw DecodeError("reconstructed sample out of range");
      store_block(recon, x0, y0, pixels);
    }
  }
  if (!r.only_padding_left()) throw DecodeError("trailing data after last block");
  return crop(recon, h.width, h.height);
}

double reduction_percent(std::size_t bits, std::size_t baseline_bits) {
  if (baseline_bits == 0) return 0.0;
  return 100.0 * (1.0 - static_cast<double>(bits) / static_cast<double>(baseline_bits));
}

std::array<SystemSize, 4> bitrate_report(const ImagePlane& plane) {
  std::array<SystemSize, 4> out{};
  const double pixels = static_cast<double>(plane.width) * plane.height;
  for (std::size_t i = 0; i < kAllSystems.size(); ++i) {
    out[i].system = kAllSystems[i];
    out[i].bits = encode_image(plane, kAllSystems[i]).size() * 8;
    out[i].bits_per_pixel = static_cast<double>(out[i].bits) / pixels;
  }
  for (auto& s : out) s.reduction_pct = reduction_percent(s.bits, out[0].bits);
  return out;
}

}  // namespace i2il
