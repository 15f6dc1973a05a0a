#pragma once

#include "qbos/su2.hpp"

namespace qbos {

// Two-qubit kets and densities in the fixed basis order
// (|OO>, |OT>, |TO>, |TT>); the first tensor factor is Alice's qubit.
using State4 = Eigen::Vector4cd;
using Density4 = Eigen::Matrix4cd;

Eigen::Matrix4cd kron(const Unitary2& a, const Unitary2& b);

// Entangling preparation: C-NOT (control on the first qubit) after a
// Hadamard on the first qubit.
Eigen::Matrix4cd entangling_gate();

// (|OO> + |TT>)/sqrt(2). Equals entangling_gate() * |OO>; the constructive
// path is exposed through entangling_gate() for cross-checks.
State4 initial_state();

// (U_A ⊗ U_B)|state>; preserves the 2-norm.
State4 apply_pair(const Unitary2& ua, const Unitary2& ub, const State4& state);

// |psi><psi| for a normalized state.
Density4 density_from_state(const State4& state);

// Invariant probes.
double norm_defect(const State4& state);       // | <s|s> - 1 |
double hermiticity_defect(const Density4& rho);
double trace_defect(const Density4& rho);
double min_eigenvalue(const Density4& rho);

}  // namespace qbos
