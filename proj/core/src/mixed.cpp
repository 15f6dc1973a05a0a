#include "qbos/mixed.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qbos/detail/trig_nodes.hpp"

namespace qbos {

IntegrationMethod IntegrationMethod::monte_carlo(std::size_t samples,
                                                 std::uint64_t seed) {
  if (samples == 0) {
    throw std::invalid_argument("monte_carlo: sample count must be positive");
  }
  IntegrationMethod m;
  m.kind = Kind::MonteCarlo;
  m.samples = samples;
  m.seed = seed;
  return m;
}

IntegrationMethod IntegrationMethod::quadrature(int resolution) {
  if (resolution < 8) {
    throw std::invalid_argument(
        "quadrature: resolution must be at least 8 per axis");
  }
  IntegrationMethod m;
  m.kind = Kind::Quadrature;
  m.resolution = resolution;
  return m;
}

MixedPayoff mixed_payoff(const PayoffMatrix& pm, const StrategyDensity& fa,
                         const StrategyDensity& fb,
                         const IntegrationMethod& method) {
  if (method.kind == IntegrationMethod::Kind::MonteCarlo) {
    if (method.samples == 0) {
      throw std::invalid_argument("mixed_payoff: sample count must be positive");
    }
    const auto ua = fa.sample(SampleStream{method.seed, 0}, method.samples);
    const auto ub = fb.sample(SampleStream{method.seed, 1}, method.samples);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < method.samples; ++i) {
      const double payoff = pure_payoff(pm, ua[i], ub[i]).a;
      sum += payoff;
      sum_sq += payoff * payoff;
    }
    const double n = static_cast<double>(method.samples);
    const double mean = sum / n;
    double se = 0.0;
    if (method.samples > 1) {
      const double var =
          std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
      se = std::sqrt(var / n);
    }
    // The two pure payoffs coincide pointwise, so one pass serves both
    // players; the estimates and errors are shared.
    return MixedPayoff{PayoffPair{mean, mean}, se, se};
  }

  const auto nodes_a = detail::trig_nodes(fa, method.resolution);
  const auto nodes_b = detail::trig_nodes(fb, method.resolution);
  const double base = 0.25 * (pm.alpha + pm.beta + 2.0 * pm.gamma);
  const double swing = 0.25 * (pm.alpha + pm.beta - 2.0 * pm.gamma);

  double total = 0.0;
  for (const auto& na : nodes_a) {
    double inner = 0.0;
    for (const auto& nb : nodes_b) {
      const double interference =
          na.cos_theta * nb.cos_theta -
          (na.cos_psi * nb.cos_psi - na.sin_psi * nb.sin_psi) * na.sin_theta *
              nb.sin_theta;
      inner += nb.weight * (base + swing * interference);
    }
    total += na.weight * inner;
  }
  return MixedPayoff{PayoffPair{total, total}, 0.0, 0.0};
}

}  // namespace qbos
