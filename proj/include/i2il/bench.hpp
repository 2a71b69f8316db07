#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "i2il/codec.hpp"
#include "i2il/image.hpp"

namespace i2il {

struct NamedPlane {
  std::string name;
  ImagePlane plane;
};

/// One row of the benchmark table. Only emitted after a verified lossless
/// round trip.
struct BenchRecord {
  std::string input;
  SystemId system = SystemId::NONE;
  int width = 0;
  int height = 0;
  std::size_t bits = 0;
  double bits_per_pixel = 0.0;
  double reduction_pct = 0.0;
  double encode_ms = 0.0;
  double decode_ms = 0.0;
  bool lossless = false;
};

/// Column header of the CSV written by write_csv.
inline constexpr const char* kBenchCsvHeader =
    "input,system,width,height,bits,bpp,reduction_pct,encode_ms,decode_ms";

/// Encodes and decodes every input under each requested system. The NONE
/// baseline is always measured for the reduction column. Throws
/// std::runtime_error naming the input and system if a round trip is not
/// bit-exact.
std::vector<BenchRecord> run_bench(std::span<const NamedPlane> inputs, std::span<const SystemId> systems);

/// Header line, then one line per record. bpp has 4 decimals, the reduction
/// 2 and the timings 3.
void write_csv(std::span<const BenchRecord> records, std::ostream& out);

/// Expands directories to their *.pgm files (sorted) and loads everything.
std::vector<NamedPlane> load_inputs(std::span<const std::filesystem::path> paths);

/// Parses "all" or a comma separated list of system names.
std::vector<SystemId> parse_system_list(const std::string& spec);

}  // namespace i2il
