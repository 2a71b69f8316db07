#pragma once

#include <cstdint>

#include "i2il/image.hpp"

namespace i2il {

/// Separable first-order autoregressive field.
struct Ar1Spec {
  int width = 256;
  int height = 256;
  double rho = 0.95;
  double sigma = 3.0;
  std::uint64_t seed = 1;
};

/// x[r][c] = rho x[r][c-1] + rho x[r-1][c] - rho^2 x[r-1][c-1] + sigma n,
/// n ~ N(0, 1) from std::mt19937_64 seeded with `seed`. The first row and
/// column are started from the stationary distribution. Samples are offset
/// by 128, rounded and clipped to [0, 255].
///
/// Throws InputError unless 0 <= rho < 1, sigma >= 0 and dimensions >= 1.
ImagePlane gen_ar1(const Ar1Spec& spec);

/// Mean of the horizontal and vertical lag-1 sample autocorrelations.
double lag1_autocorrelation(const ImagePlane& plane);

}  // namespace i2il
