#include "persuasion/game.hpp"

#include <set>

#include "persuasion/errors.hpp"

namespace persuasion {

void GameSpec::check_structure() const {
  const int n = sender_count();
  if (n < 1) throw ParseError("game needs at least one sender");
  if (actions.empty()) throw ParseError("game has no actions");
  if (receiver_states.empty()) throw ParseError("game has no receiver states");
  for (int i = 0; i < n; ++i) {
    if (sender_states[i].empty()) throw ParseError("sender " + std::to_string(i + 1) + " has no states");
  }

  if (static_cast<int>(sender_utility.size()) != n) throw ParseError("sender_utility table count != sender count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(sender_utility[i].size()) != action_count()) {
      throw ParseError("sender " + std::to_string(i + 1) + " utility table missing actions");
    }
    for (const auto& row : sender_utility[i]) {
      if (static_cast<int>(row.size()) != sender_state_count(i)) {
        throw ParseError("sender " + std::to_string(i + 1) + " utility table missing states");
      }
    }
  }
  if (static_cast<int>(receiver_utility.size()) != action_count()) {
    throw ParseError("receiver utility table missing actions");
  }
  for (const auto& row : receiver_utility) {
    if (static_cast<int>(row.size()) != receiver_state_count()) {
      throw ParseError("receiver utility table missing states");
    }
  }

  Rational sum;
  for (const auto& [tuple, p] : prior) {
    if (static_cast<int>(tuple.size()) != n + 1) throw ParseError("prior tuple arity != n+1");
    for (int i = 0; i < n; ++i) {
      if (tuple[i] < 0 || tuple[i] >= sender_state_count(i)) throw ParseError("prior tuple sender state out of range");
    }
    if (tuple[n] < 0 || tuple[n] >= receiver_state_count()) throw ParseError("prior tuple receiver state out of range");
    if (p.sign() < 0) throw ParseError("negative prior mass at a state tuple");
    sum += p;
  }
  if (sum != Rational(1)) {
    throw ParseError("prior sums to " + sum.str() + ", deficit " + (Rational(1) - sum).str());
  }
}

Rational GameSpec::prior_sum() const {
  Rational sum;
  for (const auto& [tuple, p] : prior) sum += p;
  return sum;
}

std::vector<int> GameSpec::best_actions(int player, int state) const {
  const auto& table = player == sender_count() ? receiver_utility : sender_utility[player];
  std::vector<int> best;
  for (int a = 0; a < action_count(); ++a) {
    if (best.empty()) {
      best.push_back(a);
      continue;
    }
    const Rational& cur = table[a][state];
    const Rational& top = table[best.front()][state];
    if (top < cur) {
      best.clear();
      best.push_back(a);
    } else if (cur == top) {
      best.push_back(a);
    }
  }
  return best;
}

std::optional<int> GameSpec::unique_best_action(int player, int state) const {
  auto best = best_actions(player, state);
  if (best.size() == 1) return best.front();
  return std::nullopt;
}

ValidationReport validate_game(const GameSpec& game) {
  ValidationReport report;
  const int n = game.sender_count();

  report.prior_sum = game.prior_sum();
  report.prior_ok = report.prior_sum == Rational(1);
  for (const auto& [tuple, p] : game.prior) {
    if (p.sign() < 0) report.prior_ok = false;
  }

  // Unique per-state optima, for each sender and the receiver.
  report.assumption1_ok = true;
  for (int player = 0; player <= n; ++player) {
    const int states = player == n ? game.receiver_state_count() : game.sender_state_count(player);
    for (int s = 0; s < states; ++s) {
      if (!game.unique_best_action(player, s)) {
        report.assumption1_ok = false;
        report.assumption1_violations.emplace_back(player, s);
      }
    }
  }

  if (!report.prior_ok) {
    // Assumption 2 conditions on prior probabilities; without a sane prior
    // the check is meaningless, so it is reported as not evaluated (true,
    // no violations) and the caller should look at prior_ok first.
    report.assumption2_ok = true;
    return report;
  }

  // Residual-alignment assumption. For each ordered sender pair (i, j) and
  // each positive-probability (omega_j, omega_R), some omega_i with positive
  // conditional probability must have its unique optimum equal to the
  // receiver's unique optimum at omega_R.
  report.assumption2_ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Positive-mass support of (omega_j, omega_R, omega_i).
      std::map<StatePair, std::set<int>> support_i;  // (omega_j, omega_R) -> {omega_i}
      for (const auto& [tuple, p] : game.prior) {
        if (p.is_zero()) continue;
        support_i[{tuple[j], tuple[n]}].insert(tuple[i]);
      }
      for (const auto& [jr, omegas] : support_i) {
        auto receiver_best = game.unique_best_action(n, jr.second);
        bool aligned = false;
        for (int omega_i : omegas) {
          auto sender_best = game.unique_best_action(i, omega_i);
          if (sender_best && receiver_best && *sender_best == *receiver_best) {
            aligned = true;
            break;
          }
        }
        if (!aligned) {
          report.assumption2_ok = false;
          report.assumption2_violations.push_back({i, j, jr.first, jr.second});
        }
      }
    }
  }
  return report;
}

std::map<StatePair, Rational> marginal_prior(const GameSpec& game, int sender) {
  std::map<StatePair, Rational> out;
  const int n = game.sender_count();
  for (const auto& [tuple, p] : game.prior) {
    if (p.is_zero()) continue;
    out[{tuple[sender], tuple[n]}] += p;
  }
  return out;
}

std::vector<Rational> receiver_prior(const GameSpec& game) {
  std::vector<Rational> out(game.receiver_state_count());
  const int n = game.sender_count();
  for (const auto& [tuple, p] : game.prior) out[tuple[n]] += p;
  return out;
}

}  // namespace persuasion
