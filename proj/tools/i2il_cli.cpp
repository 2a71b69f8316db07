// Command line front end: encode / decode / bench / gen-ar1.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "i2il/ar1.hpp"
#include "i2il/bench.hpp"
#include "i2il/codec.hpp"
#include "i2il/errors.hpp"
#include "i2il/pgm.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw i2il::InputError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw i2il::InputError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw i2il::InputError("write failed: " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lossless 4x4 intra codec with i2i DCT / RDPCM residual processing"};
  app.require_subcommand(1);

  std::string system_name = "i2i-rdpcm";
  fs::path enc_in, enc_out;
  auto* encode = app.add_subcommand("encode", "Encode a P5 PGM image");
  encode->add_option("--system", system_name, "Residual processing")
      ->check(CLI::IsMember({"none", "rdpcm", "i2i", "i2i-rdpcm"}));
  encode->add_option("--in", enc_in, "Input PGM")->required();
  encode->add_option("--out", enc_out, "Output stream")->required();

  fs::path dec_in, dec_out;
  auto* decode = app.add_subcommand("decode", "Decode a stream to PGM");
  decode->add_option("--in", dec_in, "Input stream")->required();
  decode->add_option("--out", dec_out, "Output PGM")->required();

  std::vector<fs::path> bench_inputs;
  std::string bench_systems = "all";
  fs::path bench_csv;
  auto* bench = app.add_subcommand("bench", "Compare systems over a set of images");
  bench->add_option("--inputs", bench_inputs, "PGM files and/or directories")->required();
  bench->add_option("--systems", bench_systems, "'all' or comma separated list");
  bench->add_option("--csv", bench_csv, "CSV output (stdout if omitted)");

  i2il::Ar1Spec ar1;
  fs::path ar1_out;
  auto* gen = app.add_subcommand("gen-ar1", "Generate a synthetic AR(1) PGM");
  gen->add_option("--width", ar1.width)->check(CLI::PositiveNumber);
  gen->add_option("--height", ar1.height)->check(CLI::PositiveNumber);
  gen->add_option("--rho", ar1.rho);
  gen->add_option("--sigma", ar1.sigma);
  gen->add_option("--seed", ar1.seed);
  gen->add_option("--out", ar1_out, "Output PGM")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode) {
      const auto plane = i2il::read_pgm(enc_in);
      write_file(enc_out, i2il::encode_image(plane, *i2il::parse_system(system_name)));
    } else if (*decode) {
      const auto bytes = read_file(dec_in);
      i2il::write_pgm(i2il::decode_image(bytes), dec_out);
    } else if (*bench) {
      const auto inputs = i2il::load_inputs(bench_inputs);
      const auto systems = i2il::parse_system_list(bench_systems);
      const auto records = i2il::run_bench(inputs, systems);
      if (bench_csv.empty()) {
        i2il::write_csv(records, std::cout);
      } else {
        std::ofstream out(bench_csv);
        if (!out) throw i2il::InputError("cannot open " + bench_csv.string() + " for writing");
        i2il::write_csv(records, out);
      }
    } else if (*gen) {
      i2il::write_pgm(i2il::gen_ar1(ar1), ar1_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
