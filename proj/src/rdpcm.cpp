#include "i2il/rdpcm.hpp"

namespace i2il {

Block4x4 rdpcm_forward(const Block4x4& residual, RdpcmDirection dir) {
  Block4x4 out = residual;
  for (int i = 0; i < kBlockSize; ++i) {
    for (int j = kBlockSize - 1; j > 0; --j) {
      if (dir == RdpcmDirection::Horizontal)
        out.at(i, j) = residual.at(i, j) - residual.at(i, j - 1);
      else
        out.at(j, i) = residual.at(j, i) - residual.at(j - 1, i);
    }
  }
  out.stage = Stage::rdpcm;
  return out;
}

Block4x4 rdpcm_inverse(const Block4x4& block, RdpcmDirection dir) {
  Block4x4 out = block;
  for (int i = 0; i < kBlockSize; ++i) {
    for (int j = 1; j < kBlockSize; ++j) {
      if (dir == RdpcmDirection::Horizontal)
        out.at(i, j) += out.at(i, j - 1);
      else
        out.at(j, i) += out.at(j - 1, i);
    }
  }
  out.stage = Stage::residual;
  return out;
}

}  // namespace i2il
