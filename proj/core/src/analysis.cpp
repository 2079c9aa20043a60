#include "persuasion/analysis.hpp"

#include "persuasion/errors.hpp"

namespace persuasion {

std::vector<std::vector<Rational>> action_receiver_mass(const GameSpec& game, const Signal& sig) {
  std::vector<std::vector<Rational>> mass(
      game.action_count(), std::vector<Rational>(game.receiver_state_count()));
  auto marginal = marginal_prior(game, sig.sender);
  for (const auto& [pair, m] : marginal) {
    const auto& dist = sig.row(pair);
    for (int a = 0; a < game.action_count(); ++a) {
      if (dist[a].is_zero()) continue;
      mass[a][pair.second] += m * dist[a];
    }
  }
  return mass;
}

std::vector<std::vector<Rational>> action_player_mass(const GameSpec& game, const Signal& sig, int k) {
  std::vector<std::vector<Rational>> mass(
      game.action_count(), std::vector<Rational>(game.sender_state_count(k)));
  const int n = game.sender_count();
  if (k == sig.sender) {
    for (const auto& [pair, m] : marginal_prior(game, sig.sender)) {
      const auto& dist = sig.row(pair);
      for (int a = 0; a < game.action_count(); ++a) {
        if (dist[a].is_zero()) continue;
        mass[a][pair.first] += m * dist[a];
      }
    }
    return mass;
  }
  for (const auto& [tuple, p] : game.prior) {
    if (p.is_zero()) continue;
    const auto& dist = sig.row({tuple[sig.sender], tuple[n]});
    for (int a = 0; a < game.action_count(); ++a) {
      if (dist[a].is_zero()) continue;
      mass[a][tuple[k]] += p * dist[a];
    }
  }
  return mass;
}

Rational message_probability(const GameSpec& game, const Signal& sig, int action) {
  Rational out;
  for (const auto& [pair, m] : marginal_prior(game, sig.sender)) {
    const auto& dist = sig.row(pair);
    out += m * dist[action];
  }
  return out;
}

Belief posterior(const GameSpec& game, const Signal& sig, int action) {
  Rational norm = message_probability(game, sig, action);
  if (norm.is_zero()) {
    throw DomainError("unreachable message: action '" + game.actions[action] +
                      "' has probability 0 under this signal");
  }
  Belief belief;
  belief.sender = sig.sender;
  belief.action = action;
  const int n = game.sender_count();
  for (const auto& [tuple, p] : game.prior) {
    if (p.is_zero()) continue;
    const auto& dist = sig.row({tuple[sig.sender], tuple[n]});
    if (dist[action].is_zero()) continue;
    belief.distribution[tuple] = p * dist[action] / norm;
  }
  return belief;
}

int receiver_best_action(const GameSpec& game, const std::vector<Rational>& receiver_weights) {
  if (static_cast<int>(receiver_weights.size()) != game.receiver_state_count()) {
    throw DomainError("belief arity != receiver state count");
  }
  int best = 0;
  Rational best_value;
  for (int a = 0; a < game.action_count(); ++a) {
    Rational v;
    for (int r = 0; r < game.receiver_state_count(); ++r) {
      if (receiver_weights[r].is_zero()) continue;
      v += receiver_weights[r] * game.receiver_u(a, r);
    }
    if (a == 0 || best_value < v) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

namespace {

Rational expected_receiver_mass_value(const GameSpec& game, const std::vector<Rational>& weights, int action) {
  Rational v;
  for (int r = 0; r < game.receiver_state_count(); ++r) {
    if (weights[r].is_zero()) continue;
    v += weights[r] * game.receiver_u(action, r);
  }
  return v;
}

}  // namespace

IncentiveReport is_incentive_compatible(const GameSpec& game, const Signal& sig) {
  IncentiveReport report;
  auto mass = action_receiver_mass(game, sig);
  report.ok = true;
  for (int a = 0; a < game.action_count(); ++a) {
    Rational total;
    for (const auto& w : mass[a]) total += w;
    if (total.is_zero()) continue;
    Rational own = expected_receiver_mass_value(game, mass[a], a);
    for (int b = 0; b < game.action_count(); ++b) {
      if (own < expected_receiver_mass_value(game, mass[a], b)) {
        report.ok = false;
        report.violations.push_back(a);
        break;
      }
    }
  }
  return report;
}

Rational receiver_value(const GameSpec& game, const Signal& sig) {
  auto mass = action_receiver_mass(game, sig);
  Rational value;
  for (int a = 0; a < game.action_count(); ++a) {
    int best = receiver_best_action(game, mass[a]);
    value += expected_receiver_mass_value(game, mass[a], best);
  }
  return value;
}

Rational sender_value(const GameSpec& game, int k, const Signal& sig) {
  auto receiver_mass = action_receiver_mass(game, sig);
  auto own_mass = action_player_mass(game, sig, k);
  Rational value;
  for (int a = 0; a < game.action_count(); ++a) {
    int best = receiver_best_action(game, receiver_mass[a]);
    for (int s = 0; s < game.sender_state_count(k); ++s) {
      if (own_mass[a][s].is_zero()) continue;
      value += own_mass[a][s] * game.sender_u(k, best, s);
    }
  }
  return value;
}

InformativenessReport is_fully_informative(const GameSpec& game, const Signal& sig) {
  InformativenessReport report;
  auto mass = action_receiver_mass(game, sig);
  const int n = game.sender_count();
  report.ok = true;
  for (int a = 0; a < game.action_count() && report.ok; ++a) {
    for (int r = 0; r < game.receiver_state_count(); ++r) {
      if (mass[a][r].is_zero()) continue;
      auto best = game.unique_best_action(n, r);
      if (!best || *best != a) {
        report.ok = false;
        report.counterexample = {a, r};
        break;
      }
    }
  }
  return report;
}

Signal full_info_signal(const GameSpec& game, int sender) {
  Signal sig;
  sig.sender = sender;
  const int n = game.sender_count();
  for (const auto& [pair, m] : marginal_prior(game, sender)) {
    auto best = game.unique_best_action(n, pair.second);
    if (!best) {
      throw DomainError("receiver optimum is not unique in state '" +
                        game.receiver_states[pair.second] + "'");
    }
    std::vector<Rational> dist(game.action_count());
    dist[*best] = 1;
    sig.rows[pair] = std::move(dist);
  }
  return sig;
}

Rational full_info_value(const GameSpec& game) {
  auto prior_r = receiver_prior(game);
  Rational value;
  for (int r = 0; r < game.receiver_state_count(); ++r) {
    if (prior_r[r].is_zero()) continue;
    Rational best = game.receiver_u(0, r);
    for (int a = 1; a < game.action_count(); ++a) best = max(best, game.receiver_u(a, r));
    value += prior_r[r] * best;
  }
  return value;
}

}  // namespace persuasion
