#pragma once

#include "report.hpp"
#include "scenario.hpp"

namespace qbos::cli {

// Exit codes (also documented in the README):
//   0 success; in verify mode, an equilibrium verdict
//   2 usage or domain error
//   3 verify: not-equilibrium
//   4 verify: inconclusive
//   5 report I/O failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotEquilibrium = 3;
inline constexpr int kExitInconclusive = 4;
inline constexpr int kExitIo = 5;

struct RunOutcome {
  ReportRecord record;
  int exit_code{kExitOk};
};

// Execute the configured computation and assemble its report.
RunOutcome run_scenario(const ScenarioConfig& cfg);

// Full pipeline: parse, run, emit; maps errors to the exit codes above.
int run_main(int argc, const char* const* argv);

}  // namespace qbos::cli
