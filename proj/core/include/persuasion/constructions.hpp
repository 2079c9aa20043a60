#pragma once

#include <optional>
#include <vector>

#include "persuasion/analysis.hpp"
#include "persuasion/game.hpp"
#include "persuasion/signal.hpp"

namespace persuasion {

// Sender i's replication of another sender's signal: the output induces
// exactly the same message probabilities and the same posterior marginals
// over (omega_i, omega_R) as the input.
Signal simulate(const GameSpec& game, int sender, const Signal& other);

// A state omega_i with positive joint posterior probability
// P(omega_i, omega_R | pi = action) > 0 whose unique optimal action equals
// the receiver's unique optimum at omega_R. Among multiple witnesses the one
// with maximal joint posterior mass wins, ties to the lower state index.
// Throws DomainError when no witness exists on a reachable event.
int alignment_witness(const GameSpec& game, int sender, const Signal& pi, int action,
                      int receiver_state);

// Audit record of one strict-improvement construction.
struct RerouteEntry {
  int receiver_state;          // omega_R being rerouted
  int witness_state;           // sender state whose optimum matches the target
  int target_action;           // the receiver's unique optimum at omega_R
  Rational reroute_probability;  // conditional probability moved off the base action
};

struct ImprovementTrace {
  int base_action = 0;  // the non-fully-informative recommendation being split
  Rational epsilon;     // overall reroute intensity
  std::vector<RerouteEntry> targets;
};

struct Improvement {
  Signal signal;
  ImprovementTrace trace;
};

// Builds a signal for `sender` that both the receiver and `sender` strictly
// prefer to `other` (a different sender's non-fully-informative signal):
// simulate, then reroute mass from the lowest-index non-fully-informative
// recommendation toward receiver-optimal actions on alignment-witness states.
// When epsilon is omitted, half the largest feasible value is used (the cap
// keeps every per-state reroute probability at most 1).
Improvement improve(const GameSpec& game, int sender, const Signal& other,
                    std::optional<Rational> epsilon = std::nullopt);

// Row-wise convex combination (1-eps) * pi + eps * full_info_signal.
// Requires eps in (0,1).
Signal mix_with_full_info(const GameSpec& game, const Signal& pi, const Rational& eps);

}  // namespace persuasion
