#include "i2il/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fmt/format.h>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "i2il/errors.hpp"
#include "i2il/pgm.hpp"

namespace i2il {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BenchRecord measure(const NamedPlane& input, SystemId sys) {
  BenchRecord rec;
  rec.input = input.name;
  rec.system = sys;
  rec.width = input.plane.width;
  rec.height = input.plane.height;

  auto start = Clock::now();
  const auto stream = encode_image(input.plane, sys);
  rec.encode_ms = elapsed_ms(start);

  start = Clock::now();
  ImagePlane decoded;
  try {
    decoded = decode_image(stream);
  } catch (const DecodeError& e) {
    throw std::runtime_error("lossless verification failed for " + input.name + " under " +
                             std::string(to_string(sys)) + ": " + e.what());
  }
  rec.decode_ms = elapsed_ms(start);

  rec.lossless = decoded == input.plane;
  if (!rec.lossless)
    throw std::runtime_error("lossless verification failed for " + input.name + " under " +
                             std::string(to_string(sys)));
  rec.bits = stream.size() * 8;
  rec.bits_per_pixel = static_cast<double>(rec.bits) / (static_cast<double>(rec.width) * rec.height);
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(std::span<const NamedPlane> inputs, std::span<const SystemId> systems) {
  std::vector<BenchRecord> out;
  for (const auto& input : inputs) {
    const BenchRecord baseline = measure(input, SystemId::NONE);
    for (const auto sys : systems) {
      BenchRecord rec = sys == SystemId::NONE ? baseline : measure(input, sys);
      rec.reduction_pct = reduction_percent(rec.bits, baseline.bits);
      out.push_back(std::move(rec));
    }
  }
  return out;
}

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{},{:.4f},{:.2f},{:.3f},{:.3f}\n", r.input, to_string(r.system), r.width,
                       r.height, r.bits, r.bits_per_pixel, r.reduction_pct, r.encode_ms, r.decode_ms);
  }
}

std::vector<NamedPlane> load_inputs(std::span<const std::filesystem::path> paths) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm") found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  if (files.empty()) throw InputError("no input images found");

  std::vector<NamedPlane> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back({f.filename().string(), read_pgm(f)});
  return out;
}

std::vector<SystemId> parse_system_list(const std::string& spec) {
  if (spec == "all") return {kAllSystems.begin(), kAllSystems.end()};
  std::vector<SystemId> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto sys = parse_system(item);
    if (!sys) throw InputError("unknown system '" + item + "'");
    out.push_back(*sys);
  }
  if (out.empty()) throw InputError("empty system list");
  return out;
}

}  // namespace i2il
