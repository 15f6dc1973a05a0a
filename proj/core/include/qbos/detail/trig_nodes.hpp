#pragma once

#include <vector>

#include "qbos/density.hpp"

namespace qbos::detail {

// Quadrature node with the trig values of the pure-payoff formula
// precomputed, so the inner integration loops are pure arithmetic.
struct TrigNode {
  double weight;
  double cos_theta;
  double sin_theta;
  double cos_psi;
  double sin_psi;
};

std::vector<TrigNode> trig_nodes(const StrategyDensity& d, int resolution);

}  // namespace qbos::detail
