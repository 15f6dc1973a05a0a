#pragma once

#include <cstdint>

#include "qbos/density.hpp"
#include "qbos/game.hpp"

namespace qbos {

// How an SU(2) integral is evaluated. Monte Carlo draws reproducible
// (seed, stream) samples; quadrature uses the midpoint node grids from
// quadrature_nodes.
struct IntegrationMethod {
  enum class Kind { MonteCarlo, Quadrature };

  Kind kind{Kind::Quadrature};
  std::size_t samples{100000};
  std::uint64_t seed{0};
  int resolution{48};

  static IntegrationMethod monte_carlo(std::size_t samples, std::uint64_t seed);
  static IntegrationMethod quadrature(int resolution);
};

struct MixedPayoff {
  PayoffPair value;
  // Standard error of the estimate per player; 0 for quadrature.
  double se_a{0.0};
  double se_b{0.0};
};

// Expected payoffs under a density pair: the double Haar integral of
// f_A f_B $ (U_A, U_B). Monte Carlo uses stream 0 for Alice and stream 1
// for Bob and evaluates both players on the same sample set.
MixedPayoff mixed_payoff(const PayoffMatrix& pm, const StrategyDensity& fa,
                         const StrategyDensity& fb,
                         const IntegrationMethod& method);

}  // namespace qbos
