#pragma once

#include <string>
#include <vector>

#include "qbos/mixed.hpp"

namespace qbos {

// One player's expected payoff surface against a fixed opponent density,
// tabulated over an inclusive (theta, psi) grid. phi is omitted: the pure
// payoff does not depend on it (asserted by tests, not assumed silently).
struct ResponseSurface {
  std::vector<double> thetas;
  std::vector<double> psis;
  std::vector<std::vector<double>> values;  // values[i][j] at (thetas[i], psis[j])
  double min_value{0.0};
  double max_value{0.0};
  StrategyAngles argmax;
};

// g(U) = integral of f_opp(V) $ (U, V) dV under the given method.
double response_value(const PayoffMatrix& pm, const StrategyDensity& opponent,
                      const StrategyAngles& my_strategy,
                      const IntegrationMethod& method);

// Tabulate g over an inclusive (grid_resolution + 1)^2 grid of (theta, psi),
// integrating against the opponent with quadrature at quad_resolution.
ResponseSurface response_surface(const PayoffMatrix& pm,
                                 const StrategyDensity& opponent,
                                 int grid_resolution, int quad_resolution = 48);

// max - min of the response surface: a small residual certifies that the
// response integral is constant in the responder's strategy.
double constancy_residual(const PayoffMatrix& pm,
                          const StrategyDensity& opponent, int grid_resolution,
                          int quad_resolution = 48);

struct BestResponse {
  StrategyAngles angles;
  double value{0.0};
};

// Maximize g over pure strategies: coarse inclusive grid (>= 32 per axis)
// then a shrinking-neighborhood pattern search down to 1e-6 angle
// resolution. Pure deviations suffice: the payoff functional is linear in
// the deviating density, so its supremum over densities is attained at a
// point mass.
BestResponse best_response(const PayoffMatrix& pm,
                           const StrategyDensity& opponent,
                           int grid_resolution = 48, int quad_resolution = 48);

enum class Verdict { Equilibrium, NotEquilibrium, Inconclusive };

std::string to_string(Verdict v);

struct EquilibriumCertificate {
  double lambda_a{0.0};
  double lambda_b{0.0};
  double se_a{0.0};  // standard error of lambda_a (0 for quadrature)
  double se_b{0.0};
  double constancy_residual_a{0.0};  // max-min of Alice's response vs f_B
  double constancy_residual_b{0.0};
  double best_deviation_gap_a{0.0};
  double best_deviation_gap_b{0.0};
  BestResponse best_response_a;
  BestResponse best_response_b;
  double tolerance{0.0};   // gap threshold actually applied
  double noise_band{0.0};  // 4x the larger lambda standard error
  Verdict verdict{Verdict::Inconclusive};
};

// Verify the Nash property of a density pair. lambda values come from
// mixed_payoff under `method`; deviation search always runs on
// deterministic quadrature so verdicts are reproducible, with the Monte
// Carlo noise of lambda entering through the noise band. tol <= 0 selects
// the default max(1e-3, noise_band). Gaps within the noise band above the
// tolerance yield Inconclusive, never a silent Equilibrium.
EquilibriumCertificate verify_equilibrium(const PayoffMatrix& pm,
                                          const StrategyDensity& fa,
                                          const StrategyDensity& fb,
                                          double tol,
                                          const IntegrationMethod& method);

}  // namespace qbos
