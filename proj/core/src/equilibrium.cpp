#include "qbos/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbos/detail/trig_nodes.hpp"
#include "qbos/tolerances.hpp"

namespace qbos {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefineAngleResolution = 1e-6;

double eval_against_nodes(const PayoffMatrix& pm,
                          const std::vector<detail::TrigNode>& nodes,
                          double theta, double psi) {
  const double base = 0.25 * (pm.alpha + pm.beta + 2.0 * pm.gamma);
  const double swing = 0.25 * (pm.alpha + pm.beta - 2.0 * pm.gamma);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double cp = std::cos(psi);
  const double sp = std::sin(psi);

  double acc = 0.0;
  for (const auto& n : nodes) {
    const double interference =
        ct * n.cos_theta - (cp * n.cos_psi - sp * n.sin_psi) * st * n.sin_theta;
    acc += n.weight * (base + swing * interference);
  }
  return acc;
}

std::vector<double> inclusive_grid(int resolution) {
  std::vector<double> points(resolution + 1);
  for (int i = 0; i <= resolution; ++i) {
    points[i] = -kPi + 2.0 * kPi * i / resolution;
  }
  return points;
}

double clamp_angle(double x) { return std::clamp(x, -kPi, kPi); }

}  // namespace

double response_value(const PayoffMatrix& pm, const StrategyDensity& opponent,
                      const StrategyAngles& my_strategy,
                      const IntegrationMethod& method) {
  if (method.kind == IntegrationMethod::Kind::MonteCarlo) {
    if (method.samples == 0) {
      throw std::invalid_argument(
          "response_value: sample count must be positive");
    }
    const auto draws =
        opponent.sample(SampleStream{method.seed, 1}, method.samples);
    double sum = 0.0;
    for (const auto& v : draws) {
      sum += pure_payoff(pm, my_strategy, v).a;
    }
    return sum / static_cast<double>(method.samples);
  }

  const auto nodes = detail::trig_nodes(opponent, method.resolution);
  return eval_against_nodes(pm, nodes, my_strategy.theta, my_strategy.psi);
}

ResponseSurface response_surface(const PayoffMatrix& pm,
                                 const StrategyDensity& opponent,
                                 int grid_resolution, int quad_resolution) {
  if (grid_resolution < 8) {
    throw std::invalid_argument(
        "response_surface: grid resolution must be at least 8");
  }
  const auto nodes = detail::trig_nodes(opponent, quad_resolution);

  ResponseSurface surface;
  surface.thetas = inclusive_grid(grid_resolution);
  surface.psis = inclusive_grid(grid_resolution);
  surface.values.assign(surface.thetas.size(),
                        std::vector<double>(surface.psis.size(), 0.0));

  bool first = true;
  for (std::size_t i = 0; i < surface.thetas.size(); ++i) {
    for (std::size_t j = 0; j < surface.psis.size(); ++j) {
      const double v =
          eval_against_nodes(pm, nodes, surface.thetas[i], surface.psis[j]);
      surface.values[i][j] = v;
      if (first || v > surface.max_value) {
        surface.max_value = v;
        surface.argmax = StrategyAngles(surface.thetas[i], 0.0, surface.psis[j]);
      }
      if (first || v < surface.min_value) {
        surface.min_value = v;
      }
      first = false;
    }
  }
  return surface;
}

double constancy_residual(const PayoffMatrix& pm,
                          const StrategyDensity& opponent, int grid_resolution,
                          int quad_resolution) {
  const auto surface =
      response_surface(pm, opponent, grid_resolution, quad_resolution);
  return surface.max_value - surface.min_value;
}

BestResponse best_response(const PayoffMatrix& pm,
                           const StrategyDensity& opponent,
                           int grid_resolution, int quad_resolution) {
  if (grid_resolution < 32) {
    throw std::invalid_argument(
        "best_response: grid resolution must be at least 32 per axis");
  }
  const auto nodes = detail::trig_nodes(opponent, quad_resolution);
  const auto surface =
      response_surface(pm, opponent, grid_resolution, quad_resolution);

  double best_theta = surface.argmax.theta;
  double best_psi = surface.argmax.psi;
  double best_value = surface.max_value;

  // Pattern search: exhaust moves at the current step, then halve it.
  double step = 2.0 * kPi / grid_resolution;
  while (step > 0.25 * kRefineAngleResolution) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int dt = -1; dt <= 1; ++dt) {
        for (int dp = -1; dp <= 1; ++dp) {
          if (dt == 0 && dp == 0) {
            continue;
          }
          const double theta = clamp_angle(best_theta + dt * step);
          const double psi = clamp_angle(best_psi + dp * step);
          const double v = eval_against_nodes(pm, nodes, theta, psi);
          if (v > best_value) {
            best_value = v;
            best_theta = theta;
            best_psi = psi;
            moved = true;
          }
        }
      }
    }
    step *= 0.5;
  }

  return BestResponse{StrategyAngles(best_theta, 0.0, best_psi), best_value};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equilibrium:
      return "equilibrium";
    case Verdict::NotEquilibrium:
      return "not-equilibrium";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

EquilibriumCertificate verify_equilibrium(const PayoffMatrix& pm,
                                          const StrategyDensity& fa,
                                          const StrategyDensity& fb,
                                          double tol,
                                          const IntegrationMethod& method) {
  const MixedPayoff payoff = mixed_payoff(pm, fa, fb, method);

  const int quad_resolution = method.kind == IntegrationMethod::Kind::Quadrature
                                  ? method.resolution
                                  : 48;
  const int grid_resolution = 48;

  EquilibriumCertificate cert;
  cert.lambda_a = payoff.value.a;
  cert.lambda_b = payoff.value.b;
  cert.se_a = payoff.se_a;
  cert.se_b = payoff.se_b;

  // Alice deviates against f_B; Bob against f_A. The pure payoff is the
  // same symmetric function of both strategies, so one routine serves both.
  cert.best_response_a = best_response(pm, fb, grid_resolution, quad_resolution);
  cert.best_response_b = best_response(pm, fa, grid_resolution, quad_resolution);
  cert.constancy_residual_a =
      constancy_residual(pm, fb, grid_resolution, quad_resolution);
  cert.constancy_residual_b =
      constancy_residual(pm, fa, grid_resolution, quad_resolution);

  cert.best_deviation_gap_a =
      std::max(0.0, cert.best_response_a.value - cert.lambda_a);
  cert.best_deviation_gap_b =
      std::max(0.0, cert.best_response_b.value - cert.lambda_b);

  cert.noise_band = 4.0 * std::max(cert.se_a, cert.se_b);
  cert.tolerance = tol > 0.0 ? tol : std::max(kEquilibriumTol, cert.noise_band);

  const double worst_gap =
      std::max(cert.best_deviation_gap_a, cert.best_deviation_gap_b);
  if (worst_gap <= cert.tolerance) {
    cert.verdict = cert.tolerance >= cert.noise_band ? Verdict::Equilibrium
                                                     : Verdict::Inconclusive;
  } else if (worst_gap <= cert.tolerance + cert.noise_band) {
    cert.verdict = Verdict::Inconclusive;
  } else {
    cert.verdict = Verdict::NotEquilibrium;
  }
  return cert;
}

}  // namespace qbos
