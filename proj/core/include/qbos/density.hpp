#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qbos/haar.hpp"
#include "qbos/su2.hpp"

namespace qbos {

enum class DensityFamily { PointMass, HaarUniform, EulerUniform, ThetaMarginal, Custom };

// A mixed strategy: a probability density f over SU(2) relative to the
// normalized Haar measure (f = 1 is Haar itself). Sampling for the
// unbounded euler-uniform family works in Lebesgue angle coordinates, where
// that density is constant, so the |sin theta| = 0 lines are never touched.
class StrategyDensity {
 public:
  static StrategyDensity point_mass(const StrategyAngles& angles);
  static StrategyDensity haar_uniform();
  // f = 2 / (pi |sin theta|): uniform over the Euler-angle cube.
  static StrategyDensity euler_uniform();
  // f(U) = h(theta); h(theta)|sin theta|/4 must integrate to 1 over
  // [-pi, pi] and h(theta)|sin theta| must be bounded.
  static StrategyDensity theta_marginal(std::function<double(double)> h);
  // General density relative to Haar. `envelope` must bound
  // f(U) * |sin theta| over the whole cube; rejection sampling proposes
  // uniformly on the cube and accepts with probability
  // f|sin theta| / envelope.
  static StrategyDensity custom(std::function<double(const StrategyAngles&)> f,
                                double envelope);

  DensityFamily family() const { return family_; }
  bool is_point_mass() const { return family_ == DensityFamily::PointMass; }
  const StrategyAngles& point() const;

  // f(U) relative to Haar; not defined for point masses (throws).
  double haar_relative(const StrategyAngles& a) const;

  // True when the density does not depend on phi (all named families).
  bool phi_free() const { return family_ != DensityFamily::Custom; }

  std::string label() const;

  std::vector<StrategyAngles> sample(const SampleStream& stream,
                                     std::size_t count) const;

 private:
  StrategyDensity() = default;

  DensityFamily family_{DensityFamily::HaarUniform};
  StrategyAngles point_{};
  std::function<double(double)> theta_density_;
  std::function<double(const StrategyAngles&)> custom_density_;
  double envelope_{0.0};
};

// Free-function spelling of StrategyDensity::sample.
std::vector<StrategyAngles> density_sample(const StrategyDensity& d,
                                           const SampleStream& stream,
                                           std::size_t count);

struct WeightedAngles {
  StrategyAngles angles;
  double weight;
};

// Quadrature node list approximating integrals of f(U) g(U) dU as
// sum_i w_i g(angles_i). Phi-free densities get a (theta, psi) midpoint
// grid with the phi integral folded into the weights; custom densities get
// the full 3-d grid. Point masses reduce to a single unit-weight node.
std::vector<WeightedAngles> quadrature_nodes(const StrategyDensity& d,
                                             int resolution);

}  // namespace qbos
