#include "app.hpp"

#include <array>
#include <cstdio>
#include <iostream>

#include "qbos/comparators.hpp"
#include "qbos/equilibrium.hpp"
#include "qbos/mixed.hpp"
#include "qbos/version.hpp"

namespace qbos::cli {

namespace {

constexpr int kDefaultQuadResolution = 48;

IntegrationMethod method_from_config(const ScenarioConfig& cfg) {
  if (cfg.mc_samples) {
    return IntegrationMethod::monte_carlo(*cfg.mc_samples, cfg.seed.value_or(0));
  }
  return IntegrationMethod::quadrature(
      cfg.quad_resolution.value_or(kDefaultQuadResolution));
}

MethodSpec method_spec(const IntegrationMethod& m) {
  MethodSpec spec;
  if (m.kind == IntegrationMethod::Kind::MonteCarlo) {
    spec.kind = "monte-carlo";
    spec.samples = m.samples;
    spec.seed = m.seed;
  } else {
    spec.kind = "quadrature";
    spec.resolution = m.resolution;
  }
  return spec;
}

ReportRecord base_record(const ScenarioConfig& cfg) {
  ReportRecord rec;
  rec.tool = std::string(kToolName);
  rec.version = std::string(kVersion);
  rec.timestamp = current_utc_timestamp();
  rec.mode = to_string(cfg.mode);
  rec.alpha = cfg.alpha;
  rec.beta = cfg.beta;
  rec.gamma = cfg.gamma;
  rec.payoffs_defaulted = cfg.payoffs_defaulted;
  rec.method.kind = "exact";
  if (cfg.a) {
    rec.player_a = cfg.a->raw;
  }
  if (cfg.b) {
    rec.player_b = cfg.b->raw;
  }
  return rec;
}

ResultRow certificate_row(const std::string& a_label,
                          const std::string& b_label,
                          const EquilibriumCertificate& cert) {
  ResultRow row;
  row.player_a = a_label;
  row.player_b = b_label;
  row.lambda_a = cert.lambda_a;
  row.lambda_b = cert.lambda_b;
  if (cert.se_a > 0.0 || cert.se_b > 0.0) {
    row.se_a = cert.se_a;
    row.se_b = cert.se_b;
  }
  row.gap_a = cert.best_deviation_gap_a;
  row.gap_b = cert.best_deviation_gap_b;
  row.residual_a = cert.constancy_residual_a;
  row.residual_b = cert.constancy_residual_b;
  row.verdict = to_string(cert.verdict);
  return row;
}

std::string move_label(ClassicalMove m) {
  return m == ClassicalMove::Opera ? "O" : "T";
}

RunOutcome run_pure(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);
  const PayoffPair payoff = pure_payoff(pm, cfg.a->angles, cfg.b->angles);
  ResultRow row;
  row.player_a = cfg.a->raw;
  row.player_b = cfg.b->raw;
  row.payoff_a = payoff.a;
  row.payoff_b = payoff.b;
  outcome.record.results.push_back(row);
  return outcome;
}

RunOutcome run_mixed(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);
  const IntegrationMethod method = method_from_config(cfg);
  outcome.record.method = method_spec(method);
  const MixedPayoff payoff =
      mixed_payoff(pm, make_density(*cfg.a), make_density(*cfg.b), method);
  ResultRow row;
  row.player_a = cfg.a->raw;
  row.player_b = cfg.b->raw;
  row.payoff_a = payoff.value.a;
  row.payoff_b = payoff.value.b;
  if (payoff.se_a > 0.0 || payoff.se_b > 0.0) {
    row.se_a = payoff.se_a;
    row.se_b = payoff.se_b;
  }
  outcome.record.results.push_back(row);
  return outcome;
}

RunOutcome run_verify(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);
  const IntegrationMethod method = method_from_config(cfg);
  outcome.record.method = method_spec(method);
  const EquilibriumCertificate cert =
      verify_equilibrium(pm, make_density(*cfg.a), make_density(*cfg.b),
                         cfg.tolerance.value_or(0.0), method);
  outcome.record.tolerance = cert.tolerance;
  outcome.record.results.push_back(
      certificate_row(cfg.a->raw, cfg.b->raw, cert));
  switch (cert.verdict) {
    case Verdict::Equilibrium:
      outcome.exit_code = kExitOk;
      break;
    case Verdict::NotEquilibrium:
      outcome.exit_code = kExitNotEquilibrium;
      break;
    case Verdict::Inconclusive:
      outcome.exit_code = kExitInconclusive;
      break;
  }
  return outcome;
}

RunOutcome run_best_response(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);
  const int resolution = cfg.quad_resolution.value_or(kDefaultQuadResolution);
  outcome.record.method.kind = "quadrature";
  outcome.record.method.resolution = resolution;
  const BestResponse br =
      best_response(pm, make_density(*cfg.b), 48, resolution);
  ResultRow row;
  row.player_b = cfg.b->raw;
  row.theta = br.angles.theta;
  row.psi = br.angles.psi;
  row.value = br.value;
  outcome.record.results.push_back(row);
  return outcome;
}

RunOutcome run_classical(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);
  const auto equilibria = classical_equilibria(pm);
  constexpr std::array<ClassicalMove, 2> moves = {ClassicalMove::Opera,
                                                  ClassicalMove::Tv};
  for (ClassicalMove a : moves) {
    for (ClassicalMove b : moves) {
      const PayoffPair payoff = classical_payoff(pm, a, b);
      ResultRow row;
      row.player_a = move_label(a);
      row.player_b = move_label(b);
      row.payoff_a = payoff.a;
      row.payoff_b = payoff.b;
      for (const auto& eq : equilibria) {
        if (eq.a == a && eq.b == b) {
          row.verdict = "equilibrium";
        }
      }
      outcome.record.results.push_back(row);
    }
  }
  return outcome;
}

RunOutcome run_mw(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);

  if (cfg.p) {
    const TacticProfile t(*cfg.p, *cfg.q);
    const PayoffPair payoff = mw_payoff(pm, t);
    ResultRow row;
    row.p = t.p;
    row.q = t.q;
    row.payoff_a = payoff.a;
    row.payoff_b = payoff.b;
    outcome.record.results.push_back(row);
    return outcome;
  }

  const auto equilibria = mw_equilibria(pm);
  constexpr std::array<std::pair<double, double>, 4> corners = {
      {{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}};
  for (const auto& [p, q] : corners) {
    const PayoffPair payoff = mw_payoff(pm, TacticProfile(p, q));
    ResultRow row;
    row.p = p;
    row.q = q;
    row.payoff_a = payoff.a;
    row.payoff_b = payoff.b;
    for (const auto& eq : equilibria) {
      if (eq.profile.p == p && eq.profile.q == q) {
        row.verdict = "equilibrium";
      }
    }
    outcome.record.results.push_back(row);
  }
  for (const auto& eq : equilibria) {
    if (!eq.interior) {
      continue;
    }
    const PayoffPair payoff = mw_payoff(pm, eq.profile);
    ResultRow row;
    row.p = eq.profile.p;
    row.q = eq.profile.q;
    row.payoff_a = payoff.a;
    row.payoff_b = payoff.b;
    row.verdict = "equilibrium (interior)";
    outcome.record.results.push_back(row);
  }
  return outcome;
}

RunOutcome run_table(const ScenarioConfig& cfg) {
  RunOutcome outcome;
  outcome.record = base_record(cfg);
  const PayoffMatrix pm(cfg.alpha, cfg.beta, cfg.gamma);
  const IntegrationMethod method = method_from_config(cfg);
  outcome.record.method = method_spec(method);

  const std::array<std::pair<std::string, StrategyDensity>, 2> families = {
      {{"haar-uniform", StrategyDensity::haar_uniform()},
       {"euler-uniform", StrategyDensity::euler_uniform()}}};
  for (const auto& [a_label, fa] : families) {
    for (const auto& [b_label, fb] : families) {
      const EquilibriumCertificate cert =
          verify_equilibrium(pm, fa, fb, 0.0, method);
      outcome.record.results.push_back(certificate_row(a_label, b_label, cert));
    }
  }
  return outcome;
}

}  // namespace

RunOutcome run_scenario(const ScenarioConfig& cfg) {
  switch (cfg.mode) {
    case Mode::Pure:
      return run_pure(cfg);
    case Mode::Mixed:
      return run_mixed(cfg);
    case Mode::Verify:
      return run_verify(cfg);
    case Mode::BestResponse:
      return run_best_response(cfg);
    case Mode::Classical:
      return run_classical(cfg);
    case Mode::Mw:
      return run_mw(cfg);
    case Mode::Table:
      return run_table(cfg);
  }
  throw std::logic_error("unreachable mode");
}

int run_main(int argc, const char* const* argv) {
  try {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    const ScenarioConfig cfg = parse_args(args);
    const RunOutcome outcome = run_scenario(cfg);
    emit_report(outcome.record, cfg.format, cfg.out_path);
    return outcome.exit_code;
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qbos::cli
