#include "persuasion/constructions.hpp"

#include "persuasion/errors.hpp"

namespace persuasion {

Signal simulate(const GameSpec& game, int sender, const Signal& other) {
  if (sender == other.sender) throw DomainError("simulate needs a signal of a different sender");
  const int n = game.sender_count();
  const int m = game.action_count();

  // P(other = a, omega_i, omega_R) accumulated over the joint prior.
  std::map<StatePair, std::vector<Rational>> joint;
  for (const auto& [tuple, p] : game.prior) {
    if (p.is_zero()) continue;
    const auto& dist = other.row({tuple[other.sender], tuple[n]});
    auto& cell = joint[{tuple[sender], tuple[n]}];
    if (cell.empty()) cell.assign(m, Rational());
    for (int a = 0; a < m; ++a) {
      if (dist[a].is_zero()) continue;
      cell[a] += p * dist[a];
    }
  }

  Signal out;
  out.sender = sender;
  for (const auto& [pair, mass] : marginal_prior(game, sender)) {
    std::vector<Rational> dist(m);
    const auto& cell = joint.at(pair);
    for (int a = 0; a < m; ++a) dist[a] = cell[a] / mass;
    out.rows[pair] = std::move(dist);
  }
  return out;
}

namespace {

// Unnormalized joint masses P(omega_i, omega_R = r, pi = action).
std::vector<Rational> witness_joint_mass(const GameSpec& game, int sender, const Signal& pi,
                                         int action, int receiver_state) {
  const int n = game.sender_count();
  std::vector<Rational> joint(game.sender_state_count(sender));
  for (const auto& [tuple, p] : game.prior) {
    if (p.is_zero() || tuple[n] != receiver_state) continue;
    const auto& dist = pi.row({tuple[pi.sender], tuple[n]});
    if (dist[action].is_zero()) continue;
    joint[tuple[sender]] += p * dist[action];
  }
  return joint;
}

}  // namespace

int alignment_witness(const GameSpec& game, int sender, const Signal& pi, int action,
                      int receiver_state) {
  auto joint = witness_joint_mass(game, sender, pi, action, receiver_state);
  Rational total;
  for (const auto& w : joint) total += w;
  if (total.is_zero()) {
    throw DomainError("receiver state '" + game.receiver_states[receiver_state] +
                      "' is not in the support of the posterior after '" +
                      game.actions[action] + "'");
  }
  auto receiver_best = game.unique_best_action(game.sender_count(), receiver_state);
  int best_state = -1;
  for (int s = 0; s < game.sender_state_count(sender); ++s) {
    if (joint[s].is_zero()) continue;
    auto own_best = game.unique_best_action(sender, s);
    if (!own_best || !receiver_best || *own_best != *receiver_best) continue;
    if (best_state < 0 || joint[best_state] < joint[s]) best_state = s;
  }
  if (best_state < 0) {
    throw DomainError("assumption violated on a reachable event: no state of sender " +
                      std::to_string(sender + 1) + " aligned with the receiver at '" +
                      game.receiver_states[receiver_state] + "' after '" +
                      game.actions[action] + "'");
  }
  return best_state;
}

Improvement improve(const GameSpec& game, int sender, const Signal& other,
                    std::optional<Rational> epsilon) {
  if (sender == other.sender) throw DomainError("improve needs a signal of a different sender");
  auto fi = is_fully_informative(game, other);
  if (fi.ok) throw DomainError("nothing to improve: the signal is already fully informative");

  Signal base = simulate(game, sender, other);
  // The simulation preserves receiver-state posteriors, so the lowest-index
  // counterexample of the input is also the one of the simulated signal.
  const int base_action = fi.counterexample->first;

  auto mass = action_receiver_mass(game, base);
  struct Target {
    int receiver_state;
    int witness_state;
    int target_action;
    Rational cap;  // joint(pair | base_action) / P(omega_R | base_action)
  };
  std::vector<Target> targets;
  for (int r = 0; r < game.receiver_state_count(); ++r) {
    if (mass[base_action][r].is_zero()) continue;
    auto best = game.unique_best_action(game.sender_count(), r);
    if (!best) {
      throw DomainError("receiver optimum is not unique in state '" + game.receiver_states[r] + "'");
    }
    int witness = alignment_witness(game, sender, other, base_action, r);
    // Both masses below are joint with {signal == base_action}; their ratio
    // equals the conditional one, so no normalization is needed.
    Rational joint = witness_joint_mass(game, sender, base, base_action, r)[witness];
    targets.push_back({r, witness, *best, joint / mass[base_action][r]});
  }

  Rational cap = targets.front().cap;
  for (const auto& t : targets) cap = min(cap, t.cap);
  Rational eps;
  if (epsilon) {
    eps = *epsilon;
    if (eps.sign() <= 0) throw DomainError("epsilon must be positive");
    if (cap < eps) {
      throw DomainError("epsilon " + eps.str() + " exceeds the feasible cap " + cap.str());
    }
  } else {
    eps = cap / Rational(2);
  }

  Improvement result;
  result.signal = base;
  result.trace.base_action = base_action;
  result.trace.epsilon = eps;
  for (const auto& t : targets) {
    Rational reroute = eps / t.cap;  // eps * P(omega_R | a) / P(pair | a), at most 1
    result.trace.targets.push_back({t.receiver_state, t.witness_state, t.target_action, reroute});
    auto& row = result.signal.rows.at({t.witness_state, t.receiver_state});
    Rational moved = row[base_action] * reroute;
    row[base_action] -= moved;
    row[t.target_action] += moved;
  }
  return result;
}

Signal mix_with_full_info(const GameSpec& game, const Signal& pi, const Rational& eps) {
  if (eps.sign() <= 0 || Rational(1) <= eps) {
    throw DomainError("mixing weight must lie strictly between 0 and 1");
  }
  Signal fi = full_info_signal(game, pi.sender);
  Signal out;
  out.sender = pi.sender;
  const Rational keep = Rational(1) - eps;
  for (const auto& [pair, dist] : pi.rows) {
    const auto& fi_dist = fi.row(pair);
    std::vector<Rational> mixed(game.action_count());
    for (int a = 0; a < game.action_count(); ++a) {
      mixed[a] = keep * dist[a] + eps * fi_dist[a];
    }
    out.rows[pair] = std::move(mixed);
  }
  return out;
}

}  // namespace persuasion
