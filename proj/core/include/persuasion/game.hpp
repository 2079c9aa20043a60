#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion {

// Full state tuple (omega_1, ..., omega_n, omega_R) as indices into the
// game's label tables.
using StateTuple = std::vector<int>;

// Key for a sender's payoff-relevant slice: (own state, receiver state).
using StatePair = std::pair<int, int>;

// A finite persuasion game: per-sender state spaces, a receiver state space,
// one action set, a joint prior, and per-player utility tables. Utilities
// depend only on the player's own state coordinate.
struct GameSpec {
  std::vector<std::vector<std::string>> sender_states;  // labels, per sender
  std::vector<std::string> receiver_states;
  std::vector<std::string> actions;

  // Sparse joint prior; only positive entries are stored.
  std::map<StateTuple, Rational> prior;

  // sender_utility[i][a][own_state], receiver_utility[a][receiver_state].
  std::vector<std::vector<std::vector<Rational>>> sender_utility;
  std::vector<std::vector<Rational>> receiver_utility;

  std::string name;  // optional, used by builtins and reports

  int sender_count() const { return static_cast<int>(sender_states.size()); }
  int action_count() const { return static_cast<int>(actions.size()); }
  int receiver_state_count() const { return static_cast<int>(receiver_states.size()); }
  int sender_state_count(int i) const { return static_cast<int>(sender_states[i].size()); }

  const Rational& sender_u(int i, int action, int own_state) const {
    return sender_utility[i][action][own_state];
  }
  const Rational& receiver_u(int action, int receiver_state) const {
    return receiver_utility[action][receiver_state];
  }

  // Throws ParseError if shapes, indices, or the prior are malformed
  // (negative mass, sum != 1, out-of-range indices, partial utility tables).
  void check_structure() const;

  Rational prior_sum() const;

  // The unique argmax of player's utility in `state`, or nullopt on a tie.
  // player in [0, n) is a sender; player == n is the receiver.
  std::optional<int> unique_best_action(int player, int state) const;

  // All maximizers of player's utility in `state`, ascending.
  std::vector<int> best_actions(int player, int state) const;
};

// Outcome of checking the two model assumptions plus prior sanity.
struct ValidationReport {
  bool prior_ok = false;
  Rational prior_sum;

  // Assumption: every player has a unique optimal action in each own-state.
  bool assumption1_ok = false;
  std::vector<std::pair<int, int>> assumption1_violations;  // (player, state); player == n is the receiver

  // Assumption: conditional on any positive-probability (omega_j, omega_R),
  // every other sender i has a positive-probability state whose unique
  // optimum coincides with the receiver's unique optimum at omega_R.
  struct AlignmentViolation {
    int sender_i;
    int sender_j;
    int omega_j;
    int omega_r;
  };
  bool assumption2_ok = false;
  std::vector<AlignmentViolation> assumption2_violations;

  bool ok() const { return prior_ok && assumption1_ok && assumption2_ok; }
};

ValidationReport validate_game(const GameSpec& game);

// Marginal of the prior onto sender i's payoff-relevant pair (omega_i, omega_R).
// Only positive entries are returned; they sum to exactly 1.
std::map<StatePair, Rational> marginal_prior(const GameSpec& game, int sender);

// Marginal of the prior onto a single receiver state / sender state.
std::vector<Rational> receiver_prior(const GameSpec& game);

}  // namespace persuasion
