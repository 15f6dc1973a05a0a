#include "qbos/quantum.hpp"

#include <cmath>

namespace qbos {

Eigen::Matrix4cd kron(const Unitary2& a, const Unitary2& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Matrix4cd entangling_gate() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd hadamard;
  hadamard << r, r, r, -r;

  Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;

  return cnot * kron(hadamard, Unitary2::Identity());
}

State4 initial_state() {
  const double r = 1.0 / std::sqrt(2.0);
  State4 s;
  s << Complex(r, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(r, 0.0);
  return s;
}

State4 apply_pair(const Unitary2& ua, const Unitary2& ub, const State4& state) {
  return kron(ua, ub) * state;
}

Density4 density_from_state(const State4& state) {
  return state * state.adjoint();
}

double norm_defect(const State4& state) {
  return std::abs(state.squaredNorm() - 1.0);
}

double hermiticity_defect(const Density4& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double trace_defect(const Density4& rho) {
  return std::abs(rho.trace() - Complex(1.0, 0.0));
}

double min_eigenvalue(const Density4& rho) {
  Eigen::SelfAdjointEigenSolver<Density4> solver(0.5 * (rho + rho.adjoint()));
  return solver.eigenvalues().minCoeff();
}

}  // namespace qbos
