#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qbos/rng.hpp"
#include "qbos/su2.hpp"

namespace qbos {

// Normalized Haar measure on SU(2) in Euler angles:
//   dU = |sin(theta)| / (16 pi^2) dtheta dphi dpsi  over [-pi, pi]^3.
struct HaarMeasure {
  static double weight(const StrategyAngles& a);

  // Exact mass of [lo, hi] under the theta marginal |sin t| / 4 dt.
  // Valid for any -pi <= lo <= hi <= pi, including cells straddling 0.
  static double theta_cell_mass(double lo, double hi);
};

// Haar-distributed angle triples. theta uses the inverse CDF of the
// |sin t|/4 marginal: draw u on [0,1), set s = 2u - 1, then
// theta = sign(s) * acos(1 - 2|s|). phi and psi are uniform on [-pi, pi).
std::vector<StrategyAngles> haar_sample(const SampleStream& stream,
                                        std::size_t count);

// Deterministic product-rule estimate of the Haar integral of g. Nodes sit
// at cell midpoints on each axis (never on the |sin theta| kink at 0); each
// theta cell is weighted by its exact Haar mass, so constants integrate
// exactly. Requires resolution >= 8 per axis; throws std::runtime_error
// naming the grid point if g returns a non-finite value.
double haar_quadrature(const std::function<double(const StrategyAngles&)>& g,
                       int resolution);

// Midpoints and exact theta-cell masses for a uniform partition of
// [-pi, pi] into `resolution` cells; shared by the quadrature routines.
struct ThetaCells {
  std::vector<double> midpoints;
  std::vector<double> masses;  // sums to 1
};
ThetaCells theta_cells(int resolution);

}  // namespace qbos
