#pragma once

#include "afkit/json_io.hpp"
#include "afkit/parallel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace afkit {

enum class Mode { discriminant, volume, shephard, torus, bm, all };

std::optional<Mode> mode_from(const std::string& name);
std::string mode_name(Mode m);

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 20;
  std::size_t n = 3;
  std::size_t r = 2;
  std::size_t m = 2;
  Mode mode = Mode::discriminant;
  double tolerance = 1e-9;
  std::int64_t entry_bound = 3;
  std::size_t grid = 11;
  bool exact_only = false;
  Exec exec = Exec::parallel;
};

/// Throws DomainError / DimensionError describing the first bad field.
void validate(const RunConfig& cfg);

struct Failure {
  std::string mode;
  std::size_t index = 0;
  std::string message;
};

struct RunRecord {
  io::Json config;
  std::vector<io::Json> instances; // one JSONL line each, in index order
  std::size_t passed = 0;
  std::size_t flagged = 0;
  std::size_t equalities = 0;
  std::optional<Rat> min_gap;
  std::vector<Failure> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
  [[nodiscard]] io::Json summary() const;
  /// Instance lines followed by the summary line.
  [[nodiscard]] std::string jsonl() const;
};

io::Json config_json(const RunConfig& cfg);

/// Generates and verifies cfg.trials instances per selected mode. Instances
/// run concurrently; records are collected in index order.
RunRecord run_suite(const RunConfig& cfg);

/// Verifies documents read from a fixture file instead of generated ones.
RunRecord run_fixtures(const std::vector<io::Fixture>& fixtures, const RunConfig& cfg);

} // namespace afkit
