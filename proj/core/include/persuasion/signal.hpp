#pragma once

#include <map>
#include <vector>

#include "persuasion/game.hpp"

namespace persuasion {

// One sender's stochastic recommendation rule. Rows exist exactly for the
// (own state, receiver state) pairs with positive marginal prior mass; each
// row is a distribution over the game's actions (messages are identified
// with actions).
struct Signal {
  int sender = 0;  // 0-based
  std::map<StatePair, std::vector<Rational>> rows;

  const std::vector<Rational>& row(const StatePair& pair) const;

  friend bool operator==(const Signal& a, const Signal& b) {
    return a.sender == b.sender && a.rows == b.rows;
  }
};

// Throws DomainError unless `sig` is a valid signal for `game`: rows exactly
// on positive-marginal pairs, entries in [0,1], each row summing to 1.
void validate_signal(const GameSpec& game, const Signal& sig);

// Posterior over the full state space given one realized recommendation.
struct Belief {
  int sender = 0;  // conditioning signal's sender
  int action = 0;  // realized recommendation
  std::map<StateTuple, Rational> distribution;  // positive entries only

  Rational total() const;
  std::vector<Rational> receiver_marginal(const GameSpec& game) const;
  std::vector<Rational> sender_marginal(const GameSpec& game, int k) const;
  std::map<StatePair, Rational> pair_marginal(const GameSpec& game, int k) const;
};

}  // namespace persuasion
