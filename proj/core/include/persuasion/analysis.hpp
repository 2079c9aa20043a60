#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "persuasion/game.hpp"
#include "persuasion/signal.hpp"

namespace persuasion {

// P(signal recommends `action`) under the prior.
Rational message_probability(const GameSpec& game, const Signal& sig, int action);

// Bayes update of the full prior on the event {signal == action}.
// Throws DomainError on a zero-probability message.
Belief posterior(const GameSpec& game, const Signal& sig, int action);

// Action maximizing expected receiver utility under a belief over receiver
// states; ties break to the lowest action index. The argmax is invariant
// under positive scaling, so any nonnegative weight vector is accepted.
int receiver_best_action(const GameSpec& game, const std::vector<Rational>& receiver_weights);

struct IncentiveReport {
  bool ok = false;
  std::vector<int> violations;  // recommendations that are not receiver-optimal
};

// A signal is incentive compatible when every positively-probable
// recommendation is (weakly) optimal for the receiver under its posterior.
IncentiveReport is_incentive_compatible(const GameSpec& game, const Signal& sig);

// Expected receiver utility when the receiver best-responds to every
// realization. Defined for non-IC signals too.
Rational receiver_value(const GameSpec& game, const Signal& sig);

// Expected utility of sender k under the receiver's best responses to `sig`
// (which may belong to any sender).
Rational sender_value(const GameSpec& game, int k, const Signal& sig);

struct InformativenessReport {
  bool ok = false;
  // First (action, receiver state) where the recommendation is not the
  // receiver's unique optimum, in (action, state) order.
  std::optional<std::pair<int, int>> counterexample;
};

InformativenessReport is_fully_informative(const GameSpec& game, const Signal& sig);

// The deterministic signal recommending the receiver's unique optimum of
// omega_R in every row. Throws DomainError if some reachable receiver state
// has a tied optimum.
Signal full_info_signal(const GameSpec& game, int sender);

// Receiver value of full revelation: E[max_a u_R(a, omega_R)].
Rational full_info_value(const GameSpec& game);

// Per-action joint masses P(action, omega_R); the workhorse behind values,
// IC checks, and informativeness.
std::vector<std::vector<Rational>> action_receiver_mass(const GameSpec& game, const Signal& sig);

// Per-action joint masses P(action, omega_k) for any player k's states.
std::vector<std::vector<Rational>> action_player_mass(const GameSpec& game, const Signal& sig, int k);

}  // namespace persuasion
