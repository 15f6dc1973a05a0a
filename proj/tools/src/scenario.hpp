#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbos/density.hpp"

namespace qbos::cli {

// Command-line problems: bad flags, malformed specs, missing requirements.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when --help is requested; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

// Report destinations that cannot be written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Pure, Mixed, Verify, BestResponse, Classical, Mw, Table };

std::string to_string(Mode m);

enum class OutputFormat { Text, Json, Csv };

// Parsed `--a`/`--b` strategy spec:
//   point:<theta>,<phi>,<psi> | haar-uniform | euler-uniform
struct DensitySpec {
  enum class Kind { Point, HaarUniform, EulerUniform };

  Kind kind{Kind::HaarUniform};
  StrategyAngles angles;  // Point only
  std::string raw;
};

DensitySpec parse_density_spec(const std::string& token);
StrategyDensity make_density(const DensitySpec& spec);

struct ScenarioConfig {
  Mode mode{Mode::Pure};

  double alpha{3.0};
  double beta{2.0};
  double gamma{1.0};
  bool payoffs_defaulted{true};

  std::optional<DensitySpec> a;
  std::optional<DensitySpec> b;

  std::optional<double> p;  // mw tactic probabilities
  std::optional<double> q;

  std::optional<std::size_t> mc_samples;
  std::optional<int> quad_resolution;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;  // verify

  OutputFormat format{OutputFormat::Text};
  std::string out_path;  // empty -> stdout
};

// Strict parse of the argument vector (program name excluded). Throws
// UsageError for malformed input and std::domain_error for constraint
// violations such as a payoff ordering breach.
ScenarioConfig parse_args(const std::vector<std::string>& argv);

}  // namespace qbos::cli
