#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qbos/tolerances.hpp"

namespace qbos {

using Complex = std::complex<double>;
using Unitary2 = Eigen::Matrix2cd;

// Euler-angle coordinates of a single-qubit strategy. Construction wraps
// each angle into [-pi, pi] (the matrix below is 2*pi-periodic in every
// argument up to a global sign) and rejects non-finite input.
struct StrategyAngles {
  double theta{0.0};
  double phi{0.0};
  double psi{0.0};

  StrategyAngles() = default;
  StrategyAngles(double theta_in, double phi_in, double psi_in);
};

// Wrap a finite angle into [-pi, pi]; throws std::domain_error otherwise.
double wrap_angle(double x);

// U(theta, phi, psi) =
//   [  e^{ i(phi+psi)/2} cos(theta/2)   i e^{ i(phi-psi)/2} sin(theta/2) ]
//   [ i e^{-i(phi-psi)/2} sin(theta/2)    e^{-i(phi+psi)/2} cos(theta/2) ]
// Special unitary for every angle triple.
Unitary2 su2_from_angles(const StrategyAngles& a);

// Max-abs entry of U†U - I.
double unitarity_defect(const Unitary2& u);

// |det U - 1|.
double determinant_defect(const Unitary2& u);

bool is_special_unitary(const Unitary2& u, double tol = kUnitaryTol);

}  // namespace qbos
