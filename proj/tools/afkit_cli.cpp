#include "afkit/errors.hpp"
#include "afkit/harness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw afkit::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for mixed-volume and mixed-discriminant inequalities"};
  afkit::RunConfig cfg;
  std::string mode = "discriminant";
  std::string out_path;
  std::string in_path;
  bool serial = false;

  app.add_option("--mode", mode, "discriminant | volume | shephard | torus | bm | all")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "base seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "instances per mode")->capture_default_str();
  app.add_option("--n", cfg.n, "matrix size / body dimension")->capture_default_str();
  app.add_option("--r", cfg.r, "Gram table rank parameter")->capture_default_str();
  app.add_option("--m", cfg.m, "fold parameter for m-fold and concavity checks")->capture_default_str();
  app.add_option("--grid", cfg.grid, "concavity grid size")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "tolerance for the floating concavity checks")
      ->capture_default_str();
  app.add_option("--entry-bound", cfg.entry_bound, "magnitude bound of generated integers")
      ->capture_default_str();
  app.add_option("--out", out_path, "write JSONL here instead of stdout");
  app.add_flag("--exact-only", cfg.exact_only, "skip tolerance-based checks");
  app.add_option("--in", in_path, "verify fixtures from a JSON file instead of generating");
  app.add_flag("--serial", serial, "use the serial reference kernels");

  CLI11_PARSE(app, argc, argv);

  const auto parsed = afkit::mode_from(mode);
  if (!parsed) {
    std::cerr << "afkit: unknown mode '" << mode << "'\n";
    return kExitUsage;
  }
  cfg.mode = *parsed;
  cfg.exec = serial ? afkit::Exec::serial : afkit::Exec::parallel;
  afkit::configure_threads();

  const auto t0 = std::chrono::steady_clock::now();
  afkit::RunRecord rec;
  try {
    if (in_path.empty()) {
      rec = afkit::run_suite(cfg);
    } else {
      rec = afkit::run_fixtures(afkit::io::fixtures_from(afkit::io::parse_document(slurp(in_path))), cfg);
    }
  } catch (const afkit::Error& e) {
    std::cerr << "afkit: " << e.what() << '\n';
    return kExitUsage;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = rec.jsonl();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "afkit: cannot write " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::cerr << "afkit: " << rec.instances.size() << " instances, " << rec.failures.size()
            << " failed, " << rec.flagged << " flagged, " << secs << " s\n";
  for (const auto& f : rec.failures) {
    std::cerr << "  FAIL " << f.mode << " #" << f.index << ": " << f.message << '\n';
  }
  return rec.ok() ? 0 : kExitFailures;
}
