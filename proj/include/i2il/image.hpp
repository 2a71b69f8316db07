#pragma once

#include <cstdint>
#include <vector>

namespace i2il {

/// Single 8-bit plane, row-major.
struct ImagePlane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  ImagePlane() = default;
  ImagePlane(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), samples(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  std::uint8_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }

  bool empty() const { return samples.empty(); }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;
};

/// Copy of `plane` extended to multiples of 4 in both dimensions by
/// replicating the last column and row.
ImagePlane pad_to_block_grid(const ImagePlane& plane);

/// Top-left `width` x `height` window of `plane`.
ImagePlane crop(const ImagePlane& plane, int width, int height);

}  // namespace i2il
