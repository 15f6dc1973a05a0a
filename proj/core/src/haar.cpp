#include "qbos/haar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qbos {

namespace {
constexpr double kPi = std::numbers::pi;
}

double HaarMeasure::weight(const StrategyAngles& a) {
  return std::abs(std::sin(a.theta)) / (16.0 * kPi * kPi);
}

double HaarMeasure::theta_cell_mass(double lo, double hi) {
  if (hi <= 0.0) {
    return 0.25 * (std::cos(hi) - std::cos(lo));
  }
  if (lo >= 0.0) {
    return 0.25 * (std::cos(lo) - std::cos(hi));
  }
  // Cell straddles the kink at 0.
  return 0.25 * (2.0 - std::cos(lo) - std::cos(hi));
}

std::vector<StrategyAngles> haar_sample(const SampleStream& stream,
                                        std::size_t count) {
  std::vector<StrategyAngles> out;
  out.reserve(count);
  UniformStream u(stream);
  for (std::size_t i = 0; i < count; ++i) {
    const double s = 2.0 * u.next_unit() - 1.0;
    const double theta = std::copysign(std::acos(1.0 - 2.0 * std::abs(s)), s);
    const double phi = -kPi + 2.0 * kPi * u.next_unit();
    const double psi = -kPi + 2.0 * kPi * u.next_unit();
    out.emplace_back(theta, phi, psi);
  }
  return out;
}

ThetaCells theta_cells(int resolution) {
  const double h = 2.0 * kPi / resolution;
  ThetaCells cells;
  cells.midpoints.reserve(resolution);
  cells.masses.reserve(resolution);
  for (int i = 0; i < resolution; ++i) {
    const double lo = -kPi + i * h;
    const double hi = -kPi + (i + 1) * h;
    cells.midpoints.push_back(0.5 * (lo + hi));
    cells.masses.push_back(HaarMeasure::theta_cell_mass(lo, hi));
  }
  return cells;
}

double haar_quadrature(const std::function<double(const StrategyAngles&)>& g,
                       int resolution) {
  if (resolution < 8) {
    throw std::invalid_argument(
        "haar_quadrature: resolution must be at least 8 per axis");
  }
  const auto cells = theta_cells(resolution);
  const double h = 2.0 * kPi / resolution;
  const double axis_weight = 1.0 / resolution;  // exact uniform cell mass

  std::vector<double> flat_mids(resolution);
  for (int i = 0; i < resolution; ++i) {
    flat_mids[i] = -kPi + (i + 0.5) * h;
  }

  double total = 0.0;
  StrategyAngles node;
  for (int i = 0; i < resolution; ++i) {
    node.theta = cells.midpoints[i];
    double slab = 0.0;
    for (int j = 0; j < resolution; ++j) {
      node.phi = flat_mids[j];
      double line = 0.0;
      for (int k = 0; k < resolution; ++k) {
        node.psi = flat_mids[k];
        const double value = g(node);
        if (!std::isfinite(value)) {
          std::ostringstream msg;
          msg << "haar_quadrature: non-finite integrand value at theta="
              << node.theta << ", phi=" << node.phi << ", psi=" << node.psi;
          throw std::runtime_error(msg.str());
        }
        line += value;
      }
      slab += line * axis_weight;
    }
    total += slab * axis_weight * cells.masses[i];
  }
  return total;
}

}  // namespace qbos
