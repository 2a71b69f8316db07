#include "i2il/image.hpp"

#include <algorithm>

#include "i2il/block.hpp"

namespace i2il {

ImagePlane pad_to_block_grid(const ImagePlane& plane) {
  const auto round_up = [](int n) { return (n + kBlockSize - 1) / kBlockSize * kBlockSize; };
  ImagePlane out(round_up(plane.width), round_up(plane.height));
  for (int y = 0; y < out.height; ++y) {
    const int sy = std::min(y, plane.height - 1);
    for (int x = 0; x < out.width; ++x) out.at(x, y) = plane.at(std::min(x, plane.width - 1), sy);
  }
  return out;
}

ImagePlane crop(const ImagePlane& plane, int width, int height) {
  ImagePlane out(width, height);
  for (int y = 0; y < height; ++y)
    std::copy_n(plane.samples.begin() + static_cast<std::ptrdiff_t>(y) * plane.width, width,
                out.samples.begin() + static_cast<std::ptrdiff_t>(y) * width);
  return out;
}

}  // namespace i2il
