#pragma once

#include <utility>

#include "qbos/quantum.hpp"

namespace qbos {

// Battle-of-the-sexes payoff constants; requires alpha > beta > gamma.
struct PayoffMatrix {
  double alpha;
  double beta;
  double gamma;

  PayoffMatrix(double alpha_in, double beta_in, double gamma_in);

  // Attainable pure-payoff range: mismatched play floors at gamma,
  // coordinated play peaks at (alpha + beta)/2.
  double min_payoff() const { return gamma; }
  double max_payoff() const { return 0.5 * (alpha + beta); }
};

// Collapse probabilities onto the four basis outcomes.
struct JointProbabilities {
  double p_oo{0.0};
  double p_ot{0.0};
  double p_to{0.0};
  double p_tt{0.0};

  double sum() const { return p_oo + p_ot + p_to + p_tt; }
};

struct PayoffPair {
  double a{0.0};
  double b{0.0};
};

// Diagonal observables in the fixed basis order:
//   Alice: diag(alpha, gamma, gamma, beta); Bob: diag(beta, gamma, gamma, alpha).
std::pair<Density4, Density4> payoff_operators(const PayoffMatrix& pm);

// Closed form:
//   P_OO = P_TT = (1 + cos tA cos tB - cos(sA + sB) sin tA sin tB) / 4,
//   P_OT = P_TO = 1/2 - P_OO.
JointProbabilities joint_probabilities(const StrategyAngles& sa,
                                       const StrategyAngles& sb);

// Projection route: |<basis|(U_A ⊗ U_B)|psi_i>|^2 per outcome. Independent
// check for the closed form above.
JointProbabilities joint_probabilities_oracle(const Unitary2& ua,
                                              const Unitary2& ub);

// Both players receive
//   (alpha+beta+2 gamma)/4
//     + ((alpha+beta-2 gamma)/4) (cos tA cos tB - cos(sA+sB) sin tA sin tB).
PayoffPair pure_payoff(const PayoffMatrix& pm, const StrategyAngles& sa,
                       const StrategyAngles& sb);

// Density-matrix route: trace the evolved density against both payoff
// operators. Independent check for pure_payoff.
PayoffPair pure_payoff_oracle(const PayoffMatrix& pm, const Unitary2& ua,
                              const Unitary2& ub);

}  // namespace qbos
