#include "qbos/detail/trig_nodes.hpp"

#include <cmath>

namespace qbos::detail {

std::vector<TrigNode> trig_nodes(const StrategyDensity& d, int resolution) {
  const auto raw = quadrature_nodes(d, resolution);
  std::vector<TrigNode> nodes;
  nodes.reserve(raw.size());
  for (const auto& n : raw) {
    nodes.push_back(TrigNode{n.weight, std::cos(n.angles.theta),
                             std::sin(n.angles.theta), std::cos(n.angles.psi),
                             std::sin(n.angles.psi)});
  }
  return nodes;
}

}  // namespace qbos::detail
