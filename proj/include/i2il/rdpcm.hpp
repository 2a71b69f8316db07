#pragma once

#include <cstdint>

#include "i2il/block.hpp"

namespace i2il {

enum class RdpcmDirection : std::uint8_t { Horizontal, Vertical };

/// Replaces every sample but the first of each row (Horizontal) or column
/// (Vertical) by its difference to the preceding neighbour. Stage::rdpcm.
Block4x4 rdpcm_forward(const Block4x4& residual, RdpcmDirection dir);

/// Running sum along the same direction. Stage::residual.
Block4x4 rdpcm_inverse(const Block4x4& block, RdpcmDirection dir);

}  // namespace i2il
