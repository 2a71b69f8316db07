#include "i2il/ar1.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "i2il/errors.hpp"

namespace i2il {

ImagePlane gen_ar1(const Ar1Spec& spec) {
  if (!(spec.rho >= 0.0 && spec.rho < 1.0)) throw InputError("AR(1): rho must lie in [0, 1)");
  if (!(spec.sigma >= 0.0)) throw InputError("AR(1): sigma must be non-negative");
  if (spec.width < 1 || spec.height < 1) throw InputError("AR(1): dimensions must be positive");

  const int w = spec.width;
  const int h = spec.height;
  const double rho = spec.rho;
  // innovation scale that makes a 1D AR(1) boundary line match the 2D field
  const double edge = spec.sigma / std::sqrt(1.0 - rho * rho);

  std::mt19937_64 gen(spec.seed);
  std::normal_distribution<double> normal;
  std::vector<double> x(static_cast<std::size_t>(w) * h);
  const auto X = [&](int r, int c) -> double& { return x[static_cast<std::size_t>(r) * w + c]; };

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double n = normal(gen);
      if (r == 0 && c == 0)
        X(r, c) = edge / std::sqrt(1.0 - rho * rho) * n;
      else if (r == 0)
        X(r, c) = rho * X(r, c - 1) + edge * n;
      else if (c == 0)
        X(r, c) = rho * X(r - 1, c) + edge * n;
      else
        X(r, c) = rho * X(r, c - 1) + rho * X(r - 1, c) - rho * rho * X(r - 1, c - 1) + spec.sigma * n;
    }
  }

  ImagePlane plane(w, h);
  std::transform(x.begin(), x.end(), plane.samples.begin(), [](double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v + 128.0), 0L, 255L));
  });
  return plane;
}

double lag1_autocorrelation(const ImagePlane& plane) {
  const auto n = static_cast<double>(plane.samples.size());
  double mean = 0.0;
  for (const auto s : plane.samples) mean += s;
  mean /= n;
  double var = 0.0;
  for (const auto s : plane.samples) var += (s - mean) * (s - mean);
  if (var == 0.0) return 0.0;

  double horiz = 0.0;
  double vert = 0.0;
  for (int y = 0; y < plane.height; ++y)
    for (int x = 0; x < plane.width; ++x) {
      const double d = plane.at(x, y) - mean;
      if (x + 1 < plane.width) horiz += d * (plane.at(x + 1, y) - mean);
      if (y + 1 < plane.height) vert += d * (plane.at(x, y + 1) - mean);
    }
  return 0.5 * (horiz + vert) / var;
}

}  // namespace i2il
