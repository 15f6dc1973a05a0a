#include "qbos/comparators.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qbos {

PayoffPair classical_payoff(const PayoffMatrix& pm, ClassicalMove a,
                            ClassicalMove b) {
  if (a != b) {
    return PayoffPair{pm.gamma, pm.gamma};
  }
  if (a == ClassicalMove::Opera) {
    return PayoffPair{pm.alpha, pm.beta};
  }
  return PayoffPair{pm.beta, pm.alpha};
}

std::vector<ClassicalProfile> classical_equilibria(const PayoffMatrix& pm) {
  constexpr std::array<ClassicalMove, 2> moves = {ClassicalMove::Opera,
                                                  ClassicalMove::Tv};
  std::vector<ClassicalProfile> out;
  for (ClassicalMove a : moves) {
    for (ClassicalMove b : moves) {
      bool stable = true;
      for (ClassicalMove alt : moves) {
        if (classical_payoff(pm, alt, b).a > classical_payoff(pm, a, b).a) {
          stable = false;
        }
        if (classical_payoff(pm, a, alt).b > classical_payoff(pm, a, b).b) {
          stable = false;
        }
      }
      if (stable) {
        out.push_back(ClassicalProfile{a, b});
      }
    }
  }
  return out;
}

TacticProfile::TacticProfile(double p_in, double q_in) : p(p_in), q(q_in) {
  if (!(std::isfinite(p) && std::isfinite(q) && p >= 0.0 && p <= 1.0 &&
        q >= 0.0 && q <= 1.0)) {
    std::ostringstream msg;
    msg << "tactic probabilities must lie in [0, 1], got p=" << p_in
        << ", q=" << q_in;
    throw std::domain_error(msg.str());
  }
}

PayoffPair mw_payoff(const PayoffMatrix& pm, const TacticProfile& t) {
  const Density4 rho0 = density_from_state(initial_state());

  const Unitary2 eye = Unitary2::Identity();
  Unitary2 flip;
  flip << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0),
      Complex(0.0, 0.0);

  const std::array<const Unitary2*, 2> ops = {&eye, &flip};
  const std::array<double, 2> alice_probs = {1.0 - t.p, t.p};
  const std::array<double, 2> bob_probs = {1.0 - t.q, t.q};

  Density4 rho = Density4::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Eigen::Matrix4cd m = kron(*ops[a], *ops[b]);
      rho += (alice_probs[a] * bob_probs[b]) * (m * rho0 * m.adjoint());
    }
  }

  const auto [alice_op, bob_op] = payoff_operators(pm);
  return PayoffPair{(rho * alice_op).trace().real(),
                    (rho * bob_op).trace().real()};
}

std::vector<TacticEquilibrium> mw_equilibria(const PayoffMatrix& pm) {
  constexpr int kSteps = 100;   // grid step 1e-2
  constexpr double kGain = 1e-9;

  std::vector<TacticEquilibrium> out;
  for (int i = 0; i <= kSteps; ++i) {
    const double p = static_cast<double>(i) / kSteps;
    for (int j = 0; j <= kSteps; ++j) {
      const double q = static_cast<double>(j) / kSteps;
      const double here = mw_payoff(pm, TacticProfile(p, q)).a;
      // Bilinear payoff: endpoint tactics bound all unilateral deviations.
      const double best_a = std::max(mw_payoff(pm, TacticProfile(0.0, q)).a,
                                     mw_payoff(pm, TacticProfile(1.0, q)).a);
      const double best_b = std::max(mw_payoff(pm, TacticProfile(p, 0.0)).b,
                                     mw_payoff(pm, TacticProfile(p, 1.0)).b);
      if (best_a - here <= kGain && best_b - here <= kGain) {
        const bool corner =
            (p == 0.0 || p == 1.0) && (q == 0.0 || q == 1.0);
        out.push_back(TacticEquilibrium{TacticProfile(p, q), !corner});
      }
    }
  }
  return out;
}

}  // namespace qbos
