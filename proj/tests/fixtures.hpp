#pragma once

#include "persuasion/analysis.hpp"
#include "persuasion/game.hpp"
#include "persuasion/signal.hpp"

// Hand-built signals for the builtin games, used across the suites.
namespace fixtures {

using persuasion::GameSpec;
using persuasion::Rational;
using persuasion::Signal;

inline Signal constant_signal(const GameSpec& g, int sender, int action) {
  Signal sig;
  sig.sender = sender;
  for (const auto& [pair, mass] : marginal_prior(g, sender)) {
    std::vector<Rational> dist(g.action_count());
    dist[action] = 1;
    sig.rows[pair] = dist;
  }
  return sig;
}

// The single-expert optimum of the policy game: a biased expert always
// recommends implementation, an unbiased one reveals the truth.
// State order: biased-beneficial, biased-harmful, unbiased-beneficial,
// unbiased-harmful; actions: implement, status-quo.
inline Signal policy_truth_or_push(const GameSpec& policy, int sender) {
  Signal sig;
  sig.sender = sender;
  for (const auto& [pair, mass] : marginal_prior(policy, sender)) {
    std::vector<Rational> dist(2);
    const bool unbiased_harmful = pair.first == 3;
    dist[unbiased_harmful ? 1 : 0] = 1;
    sig.rows[pair] = dist;
  }
  return sig;
}

// Expert 1 recommending restrictions exactly when e-cigs are unhealthy;
// pushes the expert's own preference, ignoring the regulator's state.
inline Signal ecig_push_own_preference(const GameSpec& ecig) {
  Signal sig;
  sig.sender = 0;
  for (const auto& [pair, mass] : marginal_prior(ecig, 0)) {
    std::vector<Rational> dist(2);
    dist[pair.first == 1 ? 0 : 1] = 1;  // U -> impose, H -> status-quo
    sig.rows[pair] = dist;
  }
  return sig;
}

}  // namespace fixtures
