#include "i2il/intra_prediction.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "i2il/errors.hpp"

namespace i2il {

namespace {

constexpr std::int32_t kMidGrey = 128;

}  // namespace

const char* to_string(IntraMode mode) {
  switch (mode) {
    case IntraMode::DC: return "dc";
    case IntraMode::Vertical: return "vertical";
    case IntraMode::Horizontal: return "horizontal";
    case IntraMode::Planar: return "planar";
    case IntraMode::DiagDownLeft: return "diag-down-left";
    case IntraMode::DiagDownRight: return "diag-down-right";
  }
  return "?";
}

IntraMode intra_mode_from_code(unsigned code) {
  if (code >= kNumIntraModes) throw DecodeError("invalid intra mode " + std::to_string(code));
  return static_cast<IntraMode>(code);
}

ReferenceSamples prepare_references(const ImagePlane& recon, int x0, int y0) {
  ReferenceSamples refs;
  refs.top_available = y0 > 0;
  refs.left_available = x0 > 0;
  refs.corner_available = refs.top_available && refs.left_available;
  refs.top_right_available = refs.top_available && x0 + kBlockSize < recon.width;

  if (refs.left_available)
    for (int i = 0; i < kBlockSize; ++i) refs.left[i] = recon.at(x0 - 1, y0 + i);

  if (refs.top_available) {
    for (int j = 0; j < kBlockSize; ++j) refs.top[j] = recon.at(x0 + j, y0 - 1);
    for (int j = kBlockSize; j < 2 * kBlockSize; ++j)
      refs.top[j] = refs.top_right_available ? recon.at(x0 + j, y0 - 1) : refs.top[kBlockSize - 1];
  } else {
    refs.top.fill(refs.left_available ? refs.left[0] : kMidGrey);
  }

  if (!refs.left_available) refs.left.fill(refs.top_available ? refs.top[0] : kMidGrey);

  if (refs.corner_available)
    refs.corner = recon.at(x0 - 1, y0 - 1);
  else if (refs.top_available)
    refs.corner = refs.top[0];
  else if (refs.left_available)
    refs.corner = refs.left[0];
  else
    refs.corner = kMidGrey;
  return refs;
}

Block4x4 predict(const ReferenceSamples& refs, IntraMode mode) {
  const auto& T = refs.top;
  const auto& L = refs.left;
  Block4x4 pred;
  pred.stage = Stage::pixels;

  switch (mode) {
    case IntraMode::DC: {
      std::int32_t sum_top = 0;
      std::int32_t sum_left = 0;
      for (int i = 0; i < kBlockSize; ++i) {
        sum_top += T[i];
        sum_left += L[i];
      }
      std::int32_t dc = kMidGrey;
      if (refs.top_available && refs.left_available)
        dc = (sum_top + sum_left + 4) >> 3;
      else if (refs.top_available)
        dc = (sum_top + 2) >> 2;
      else if (refs.left_available)
        dc = (sum_left + 2) >> 2;
      pred.v.fill(dc);
      break;
    }
    case IntraMode::Vertical:
      for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c) pred.at(r, c) = T[c];
      break;
    case IntraMode::Horizontal:
      for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c) pred.at(r, c) = L[r];
      break;
    case IntraMode::Planar:
      for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c)
          pred.at(r, c) = ((3 - c) * L[r] + (c + 1) * T[4] + (3 - r) * T[c] + (r + 1) * L[3] + 4) >> 3;
      break;
    case IntraMode::DiagDownLeft:
      for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c)
          pred.at(r, c) =
              (T[std::min(r + c, 6)] + 2 * T[std::min(r + c + 1, 7)] + T[std::min(r + c + 2, 7)] + 2) >> 2;
      break;
    case IntraMode::DiagDownRight: {
      // E[-4..4]: L[2], L[1], L[0], C, T[0..4]
      std::array<std::int32_t, 9> ext{L[2], L[1], L[0], refs.corner, T[0], T[1], T[2], T[3], T[4]};
      const auto E = [&ext](int i) { return ext[i + 4]; };
      for (int r = 0; r < kBlockSize; ++r)
        for (int c = 0; c < kBlockSize; ++c)
          pred.at(r, c) = (E(c - r - 1) + 2 * E(c - r) + E(c - r + 1) + 2) >> 2;
      break;
    }
    default:
      throw DecodeError("invalid intra mode " + std::to_string(static_cast<int>(mode)));
  }
  return pred;
}

Block4x4 residual(const Block4x4& pixels, const Block4x4& pred) {
  Block4x4 out;
  out.stage = Stage::residual;
  for (int i = 0; i < kBlockArea; ++i) out.v[i] = pixels.v[i] - pred.v[i];
  return out;
}

Block4x4 reconstruct(const Block4x4& pred, const Block4x4& residual) {
  Block4x4 out;
  out.stage = Stage::pixels;
  for (int i = 0; i < kBlockArea; ++i) out.v[i] = pred.v[i] + residual.v[i];
  return out;
}

Block4x4 load_block(const ImagePlane& plane, int x0, int y0) {
  Block4x4 b;
  b.stage = Stage::pixels;
  for (int r = 0; r < kBlockSize; ++r)
    for (int c = 0; c < kBlockSize; ++c) b.at(r, c) = plane.at(x0 + c, y0 + r);
  return b;
}

void store_block(ImagePlane& plane, int x0, int y0, const Block4x4& pixels) {
  for (int r = 0; r < kBlockSize; ++r)
    for (int c = 0; c < kBlockSize; ++c) {
      assert(pixels.at(r, c) >= 0 && pixels.at(r, c) <= 255);
      plane.at(x0 + c, y0 + r) = static_cast<std::uint8_t>(pixels.at(r, c));
    }
}

}  // namespace i2il
