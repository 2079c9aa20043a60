#pragma once

#include <cstddef>
#include <functional>

#include "persuasion/equilibrium.hpp"
#include "persuasion/game.hpp"
#include "persuasion/signal.hpp"

namespace persuasion {

inline constexpr std::size_t kDefaultEnumerationBound = 1000000;

// Enumeration lattice: row distributions whose entries are multiples of
// 1/resolution (the simplex lattice with denominators dividing K).
struct GridSpec {
  int resolution = 1;
  std::size_t bound = kDefaultEnumerationBound;
};

// Number of grid signals for this sender; throws SizeError beyond grid.bound.
std::size_t count_grid_signals(const GameSpec& game, int sender, const GridSpec& grid);

// Every deterministic signal exactly once, canonical order (row distributions
// cycle fastest in the last state pair).
void enumerate_deterministic_signals(const GameSpec& game, int sender, std::size_t bound,
                                     const std::function<void(const Signal&)>& yield);

// Every signal on the resolution-K lattice; K = 1 gives the deterministic set.
void grid_signals(const GameSpec& game, int sender, const GridSpec& grid,
                  const std::function<void(const Signal&)>& yield);

struct OracleOptimum {
  Signal signal;  // first maximizer in canonical order
  Rational value;
};

// Best sender value over all incentive-compatible grid signals. Never exceeds
// the obedience LP optimum; matches it whenever the LP solution lies on the grid.
OracleOptimum brute_force_optimal_signal(const GameSpec& game, int sender, const GridSpec& grid);

struct OracleDeviation {
  Signal signal;
  Rational payoff;
};

// Best expected payoff for `sender` over all grid deviations against a fixed
// pure profile, under the uniform decision rule.
OracleDeviation brute_force_best_deviation(const GameSpec& game, const PureProfile& profile,
                                           int sender, const GridSpec& grid);

}  // namespace persuasion
