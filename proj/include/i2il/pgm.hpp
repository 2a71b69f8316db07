#pragma once

#include <filesystem>
#include <iosfwd>

#include "i2il/image.hpp"

namespace i2il {

/// Binary PGM (P5) with maxval 255. Header comments are accepted.
/// Throws InputError on anything else.
ImagePlane read_pgm(const std::filesystem::path& path);
ImagePlane read_pgm(std::istream& in);

void write_pgm(const ImagePlane& plane, const std::filesystem::path& path);
void write_pgm(const ImagePlane& plane, std::ostream& out);

}  // namespace i2il
