#include "scenario.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

#include "qbos/game.hpp"

namespace qbos::cli {

namespace {

double parse_double_token(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(value)) {
      throw std::invalid_argument(text);
    }
    return value;
  } catch (const std::exception&) {
    throw UsageError("unrecognized number '" + text + "' in " + context);
  }
}

}  // namespace

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Pure:
      return "pure";
    case Mode::Mixed:
      return "mixed";
    case Mode::Verify:
      return "verify";
    case Mode::BestResponse:
      return "best-response";
    case Mode::Classical:
      return "classical";
    case Mode::Mw:
      return "mw";
    case Mode::Table:
      return "table";
  }
  return "unknown";
}

DensitySpec parse_density_spec(const std::string& token) {
  DensitySpec spec;
  spec.raw = token;
  if (token == "haar-uniform") {
    spec.kind = DensitySpec::Kind::HaarUniform;
    return spec;
  }
  if (token == "euler-uniform") {
    spec.kind = DensitySpec::Kind::EulerUniform;
    return spec;
  }
  const std::string prefix = "point:";
  if (token.rfind(prefix, 0) == 0) {
    const std::string body = token.substr(prefix.size());
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(body);
    while (std::getline(in, piece, ',')) {
      parts.push_back(piece);
    }
    if (parts.size() != 3 || body.empty() || body.back() == ',') {
      throw UsageError("malformed strategy spec '" + token +
                       "': expected point:<theta>,<phi>,<psi>");
    }
    const double theta = parse_double_token(parts[0], "strategy spec '" + token + "'");
    const double phi = parse_double_token(parts[1], "strategy spec '" + token + "'");
    const double psi = parse_double_token(parts[2], "strategy spec '" + token + "'");
    spec.kind = DensitySpec::Kind::Point;
    spec.angles = StrategyAngles(theta, phi, psi);
    return spec;
  }
  throw UsageError("unrecognized strategy spec '" + token +
                   "': expected point:<theta>,<phi>,<psi> | haar-uniform | "
                   "euler-uniform");
}

StrategyDensity make_density(const DensitySpec& spec) {
  switch (spec.kind) {
    case DensitySpec::Kind::Point:
      return StrategyDensity::point_mass(spec.angles);
    case DensitySpec::Kind::HaarUniform:
      return StrategyDensity::haar_uniform();
    case DensitySpec::Kind::EulerUniform:
      return StrategyDensity::euler_uniform();
  }
  throw std::logic_error("unreachable density spec kind");
}

ScenarioConfig parse_args(const std::vector<std::string>& argv) {
  ScenarioConfig cfg;

  CLI::App app{"quantum battle-of-the-sexes engine"};
  app.require_subcommand(1);

  std::string a_token;
  std::string b_token;
  std::string format_token = "text";

  struct SubPlan {
    Mode mode;
    CLI::App* sub;
    bool strategies;
    bool methods;
  };
  std::vector<SubPlan> plans;

  auto add_sub = [&](Mode mode, const char* name, const char* help,
                     bool strategies, bool methods) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--alpha", cfg.alpha, "coordination payoff (largest)");
    sub->add_option("--beta", cfg.beta, "coordination payoff (second)");
    sub->add_option("--gamma", cfg.gamma, "mismatch payoff (smallest)");
    sub->add_option("--format", format_token, "text | json | csv");
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    if (strategies) {
      sub->add_option("--a", a_token, "Alice's strategy spec");
      sub->add_option("--b", b_token, "Bob's strategy spec");
    }
    if (methods) {
      sub->add_option("--mc", "Monte Carlo sample count")
          ->check(CLI::PositiveNumber);
      sub->add_option("--quad", "quadrature resolution per axis")
          ->check(CLI::PositiveNumber);
      sub->add_option("--seed", "sample stream seed");
    }
    plans.push_back(SubPlan{mode, sub, strategies, methods});
    return sub;
  };

  add_sub(Mode::Pure, "pure", "payoffs of a pure strategy pair", true, false);
  add_sub(Mode::Mixed, "mixed", "expected payoffs of a density pair", true, true);
  CLI::App* verify = add_sub(Mode::Verify, "verify",
                             "verify a density pair as a Nash equilibrium",
                             true, true);
  verify->add_option("--tol", "deviation-gap tolerance")
      ->check(CLI::PositiveNumber);
  add_sub(Mode::BestResponse, "best-response",
          "best pure response against --b", true, true);
  add_sub(Mode::Classical, "classical",
          "classical payoff table and equilibria", false, false);
  CLI::App* mw = add_sub(Mode::Mw, "mw",
                         "identity/sigma_x tactic scheme", false, false);
  mw->add_option("--p", "Alice's flip probability");
  mw->add_option("--q", "Bob's flip probability");
  add_sub(Mode::Table, "table",
          "verify the named equilibrium family table", false, true);

  std::vector<const char*> raw;
  raw.reserve(argv.size() + 1);
  raw.push_back("qbos");
  for (const auto& s : argv) {
    raw.push_back(s.c_str());
  }

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (const auto& candidate : plans) {
      if (candidate.sub->parsed()) {
        text = candidate.sub->help();
      }
    }
    throw HelpRequested{text};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const SubPlan* plan = nullptr;
  for (const auto& candidate : plans) {
    if (candidate.sub->parsed()) {
      plan = &candidate;
      break;
    }
  }
  if (plan == nullptr) {
    throw UsageError("a subcommand is required");
  }
  cfg.mode = plan->mode;

  CLI::App* sub = plan->sub;
  cfg.payoffs_defaulted = sub->count("--alpha") == 0 &&
                          sub->count("--beta") == 0 &&
                          sub->count("--gamma") == 0;

  // Validate the ordering constraint up front (PayoffMatrix throws the
  // domain error that names it).
  PayoffMatrix checked(cfg.alpha, cfg.beta, cfg.gamma);
  (void)checked;

  if (format_token == "text") {
    cfg.format = OutputFormat::Text;
  } else if (format_token == "json") {
    cfg.format = OutputFormat::Json;
  } else if (format_token == "csv") {
    cfg.format = OutputFormat::Csv;
  } else {
    throw UsageError("unrecognized format '" + format_token +
                     "': expected text | json | csv");
  }

  if (plan->strategies) {
    const bool need_a = cfg.mode != Mode::BestResponse;
    if (need_a) {
      if (a_token.empty()) {
        throw UsageError("--a is required for " + to_string(cfg.mode) + " mode");
      }
      cfg.a = parse_density_spec(a_token);
    } else if (!a_token.empty()) {
      cfg.a = parse_density_spec(a_token);
    }
    if (b_token.empty()) {
      throw UsageError("--b is required for " + to_string(cfg.mode) + " mode");
    }
    cfg.b = parse_density_spec(b_token);
  }

  if (cfg.mode == Mode::Pure) {
    if (cfg.a->kind != DensitySpec::Kind::Point ||
        cfg.b->kind != DensitySpec::Kind::Point) {
      throw UsageError("pure mode requires point:<theta>,<phi>,<psi> strategies");
    }
  }

  if (plan->methods) {
    if (sub->count("--mc") > 0) {
      cfg.mc_samples = sub->get_option("--mc")->as<std::size_t>();
    }
    if (sub->count("--quad") > 0) {
      cfg.quad_resolution = sub->get_option("--quad")->as<int>();
    }
    if (sub->count("--seed") > 0) {
      cfg.seed = sub->get_option("--seed")->as<std::uint64_t>();
    }
    if (cfg.mc_samples && cfg.quad_resolution) {
      throw UsageError("--mc and --quad are mutually exclusive");
    }
    if (cfg.mc_samples && !cfg.seed) {
      throw UsageError("--seed is required with --mc (reproducible runs)");
    }
    if (cfg.quad_resolution && *cfg.quad_resolution < 8) {
      throw UsageError("--quad must be at least 8");
    }
  }

  if (cfg.mode == Mode::Verify && verify->count("--tol") > 0) {
    cfg.tolerance = verify->get_option("--tol")->as<double>();
  }

  if (cfg.mode == Mode::Mw) {
    const bool has_p = mw->count("--p") > 0;
    const bool has_q = mw->count("--q") > 0;
    if (has_p != has_q) {
      throw UsageError("--p and --q must be given together");
    }
    if (has_p) {
      cfg.p = mw->get_option("--p")->as<double>();
      cfg.q = mw->get_option("--q")->as<double>();
      if (!(*cfg.p >= 0.0 && *cfg.p <= 1.0 && *cfg.q >= 0.0 && *cfg.q <= 1.0)) {
        std::ostringstream msg;
        msg << "tactic probabilities must lie in [0, 1], got p=" << *cfg.p
            << ", q=" << *cfg.q;
        throw std::domain_error(msg.str());
      }
    }
  }

  return cfg;
}

}  // namespace qbos::cli
