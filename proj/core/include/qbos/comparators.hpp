#pragma once

#include <vector>

#include "qbos/game.hpp"

namespace qbos {

// Classical battle-of-the-sexes moves.
enum class ClassicalMove { Opera, Tv };

struct ClassicalProfile {
  ClassicalMove a;
  ClassicalMove b;
};

// Table lookup: (O,O) -> (alpha, beta); (T,T) -> (beta, alpha);
// mismatches -> (gamma, gamma).
PayoffPair classical_payoff(const PayoffMatrix& pm, ClassicalMove a,
                            ClassicalMove b);

// Exhaustive check of the four pure profiles against the unilateral
// deviation inequalities; yields {(O,O), (T,T)} for alpha > beta > gamma.
std::vector<ClassicalProfile> classical_equilibria(const PayoffMatrix& pm);

// Tactic probabilities of the identity/sigma_x scheme: p is Alice's flip
// probability, q is Bob's. Both must lie in [0, 1].
struct TacticProfile {
  double p;
  double q;

  TacticProfile(double p_in, double q_in);
};

// Defined by the density-matrix route: mix {I, sigma_x} per player over the
// shared entangled state and trace against the payoff operators. Matched
// flips leave the state fixed (payoff (alpha+beta)/2 each); mismatched
// flips land on the gamma outcomes.
PayoffPair mw_payoff(const PayoffMatrix& pm, const TacticProfile& t);

struct TacticEquilibrium {
  TacticProfile profile;
  bool interior;  // true when not one of the corner profiles
};

// Grid search over (p, q) in [0,1]^2 (step 1e-2) for profiles where neither
// player gains by unilateral deviation. The payoff is bilinear, so endpoint
// alternatives bound every deviation.
std::vector<TacticEquilibrium> mw_equilibria(const PayoffMatrix& pm);

}  // namespace qbos
