#include "qbos/su2.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qbos {

double wrap_angle(double x) {
  if (!std::isfinite(x)) {
    std::ostringstream msg;
    msg << "strategy angle must be finite, got " << x;
    throw std::domain_error(msg.str());
  }
  // remainder(x, 2pi) lands in [-pi, pi] with both endpoints representable.
  return std::remainder(x, 2.0 * std::numbers::pi);
}

StrategyAngles::StrategyAngles(double theta_in, double phi_in, double psi_in)
    : theta(wrap_angle(theta_in)), phi(wrap_angle(phi_in)), psi(wrap_angle(psi_in)) {}

Unitary2 su2_from_angles(const StrategyAngles& a) {
  const double c = std::cos(0.5 * a.theta);
  const double s = std::sin(0.5 * a.theta);
  const Complex diag = std::polar(1.0, 0.5 * (a.phi + a.psi));
  const Complex off = std::polar(1.0, 0.5 * (a.phi - a.psi));
  const Complex i(0.0, 1.0);

  Unitary2 u;
  u(0, 0) = diag * c;
  u(0, 1) = i * off * s;
  u(1, 0) = i * std::conj(off) * s;
  u(1, 1) = std::conj(diag) * c;
  return u;
}

double unitarity_defect(const Unitary2& u) {
  const Unitary2 residue = u.adjoint() * u - Unitary2::Identity();
  return residue.cwiseAbs().maxCoeff();
}

double determinant_defect(const Unitary2& u) {
  return std::abs(u.determinant() - Complex(1.0, 0.0));
}

bool is_special_unitary(const Unitary2& u, double tol) {
  return unitarity_defect(u) <= tol && determinant_defect(u) <= tol;
}

}  // namespace qbos
