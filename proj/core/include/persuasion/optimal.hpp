#pragma once

#include "persuasion/analysis.hpp"
#include "persuasion/game.hpp"
#include "persuasion/lp.hpp"
#include "persuasion/signal.hpp"

namespace persuasion {

struct LPOutline {
  int variable_count = 0;
  int equality_count = 0;
  int inequality_count = 0;
};

struct OptimalSignalResult {
  Signal signal;
  Rational value;  // the sender's optimum over all incentive-compatible signals
  LPOutline outline;
};

// The single-sender benchmark: maximize sender i's expected utility over all
// incentive-compatible signals via the obedience linear program. Variables
// are joint masses x(state pair, recommended action); each pair's masses sum
// to its marginal prior, and every recommended action must weakly beat every
// alternative on its conditional receiver-state mass.
OptimalSignalResult optimal_signal(const GameSpec& game, int sender);

// The obedience LP itself, exposed for inspection and reporting.
LPProblem obedience_lp(const GameSpec& game, int sender);

}  // namespace persuasion
