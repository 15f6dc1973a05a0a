#include "qbos/game.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbos {

PayoffMatrix::PayoffMatrix(double alpha_in, double beta_in, double gamma_in)
    : alpha(alpha_in), beta(beta_in), gamma(gamma_in) {
  if (!(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(gamma))) {
    throw std::domain_error("payoff constants must be finite");
  }
  if (!(alpha > beta && beta > gamma)) {
    std::ostringstream msg;
    msg << "invalid payoffs: the condition alpha > beta > gamma must hold "
        << "(got alpha=" << alpha << ", beta=" << beta << ", gamma=" << gamma
        << ")";
    throw std::domain_error(msg.str());
  }
}

std::pair<Density4, Density4> payoff_operators(const PayoffMatrix& pm) {
  Density4 alice = Density4::Zero();
  alice(0, 0) = pm.alpha;
  alice(1, 1) = pm.gamma;
  alice(2, 2) = pm.gamma;
  alice(3, 3) = pm.beta;

  Density4 bob = Density4::Zero();
  bob(0, 0) = pm.beta;
  bob(1, 1) = pm.gamma;
  bob(2, 2) = pm.gamma;
  bob(3, 3) = pm.alpha;

  return {alice, bob};
}

JointProbabilities joint_probabilities(const StrategyAngles& sa,
                                       const StrategyAngles& sb) {
  const double interference = std::cos(sa.theta) * std::cos(sb.theta) -
                              std::cos(sa.psi + sb.psi) * std::sin(sa.theta) *
                                  std::sin(sb.theta);
  const double matched = 0.25 * (1.0 + interference);
  const double mismatched = 0.5 - matched;
  return JointProbabilities{matched, mismatched, mismatched, matched};
}

JointProbabilities joint_probabilities_oracle(const Unitary2& ua,
                                              const Unitary2& ub) {
  const State4 final_state = apply_pair(ua, ub, initial_state());
  return JointProbabilities{std::norm(final_state(0)), std::norm(final_state(1)),
                            std::norm(final_state(2)), std::norm(final_state(3))};
}

PayoffPair pure_payoff(const PayoffMatrix& pm, const StrategyAngles& sa,
                       const StrategyAngles& sb) {
  const double interference = std::cos(sa.theta) * std::cos(sb.theta) -
                              std::cos(sa.psi + sb.psi) * std::sin(sa.theta) *
                                  std::sin(sb.theta);
  const double value = 0.25 * (pm.alpha + pm.beta + 2.0 * pm.gamma) +
                       0.25 * (pm.alpha + pm.beta - 2.0 * pm.gamma) * interference;
  return PayoffPair{value, value};
}

PayoffPair pure_payoff_oracle(const PayoffMatrix& pm, const Unitary2& ua,
                              const Unitary2& ub) {
  const Density4 rho =
      density_from_state(apply_pair(ua, ub, initial_state()));
  const auto [alice_op, bob_op] = payoff_operators(pm);
  return PayoffPair{(rho * alice_op).trace().real(),
                    (rho * bob_op).trace().real()};
}

}  // namespace qbos
