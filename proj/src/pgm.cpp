#include "i2il/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "i2il/errors.hpp"

namespace i2il {

namespace {

void skip_whitespace_and_comments(std::istream& in) {
  for (;;) {
    const int ch = in.peek();
    if (ch == '#') {
      std::string ignored;
      std::getline(in, ignored);
    } else if (ch != EOF && std::isspace(ch)) {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const char* what) {
  skip_whitespace_and_comments(in);
  int value = -1;
  if (!(in >> value) || value < 0) throw InputError(std::string("PGM: bad ") + what);
  return value;
}

}  // namespace

ImagePlane read_pgm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P') throw InputError("PGM: not a PNM file");
  if (magic[1] != '5') throw InputError(std::string("PGM: unsupported format P") + magic[1] + " (only P5)");

  const int width = read_header_int(in, "width");
  const int height = read_header_int(in, "height");
  const int maxval = read_header_int(in, "maxval");
  if (width < 1 || height < 1) throw InputError("PGM: zero dimension");
  if (maxval != 255) throw InputError("PGM: maxval " + std::to_string(maxval) + " unsupported (only 255)");
  // exactly one whitespace byte separates the header from the raster
  if (!std::isspace(in.get())) throw InputError("PGM: malformed header");

  ImagePlane plane(width, height);
  in.read(reinterpret_cast<char*>(plane.samples.data()), static_cast<std::streamsize>(plane.samples.size()));
  if (in.gcount() != static_cast<std::streamsize>(plane.samples.size())) throw InputError("PGM: truncated payload");
  return plane;
}

ImagePlane read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return read_pgm(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_pgm(const ImagePlane& plane, std::ostream& out) {
  out << "P5\n" << plane.width << ' ' << plane.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(plane.samples.data()), static_cast<std::streamsize>(plane.samples.size()));
}

void write_pgm(const ImagePlane& plane, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_pgm(plane, out);
  if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace i2il
