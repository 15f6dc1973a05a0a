#pragma once

namespace qbos {

// Numeric tolerances shared across the library. Exact-arithmetic identities
// (unitarity, normalization, hermiticity) are held to 1e-12; statistical and
// quadrature-based quantities carry their own looser bounds.
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kMinEigenvalueFloor = -1e-10;

inline constexpr double kQuadratureNormTol = 1e-6;
inline constexpr double kDensityNormTol = 1e-3;
inline constexpr double kEquilibriumTol = 1e-3;

}  // namespace qbos
