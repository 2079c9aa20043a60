#include "persuasion/oracle.hpp"

#include <vector>

#include "persuasion/errors.hpp"

namespace persuasion {

namespace {

// All compositions of `total` into `parts` nonnegative integers, first part
// largest first. At total == 1 the composition index equals the action index.
void build_compositions(int total, int parts, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    current.push_back(first);
    build_compositions(total - first, parts - 1, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  build_compositions(total, parts, current, out);
  return out;
}

struct EnumerationPlan {
  std::vector<StatePair> pairs;
  std::vector<Rational> masses;
  std::vector<std::vector<int>> rows;         // composition table, shared by all pairs
  std::vector<std::vector<Rational>> row_dists;  // compositions scaled by 1/K
  std::size_t total = 0;
};

EnumerationPlan make_plan(const GameSpec& game, int sender, const GridSpec& grid) {
  if (grid.resolution < 1) throw DomainError("grid resolution must be positive");
  EnumerationPlan plan;
  for (const auto& [pair, mass] : marginal_prior(game, sender)) {
    plan.pairs.push_back(pair);
    plan.masses.push_back(mass);
  }
  plan.rows = compositions(grid.resolution, game.action_count());
  const Rational scale(1, grid.resolution);
  for (const auto& row : plan.rows) {
    std::vector<Rational> dist;
    dist.reserve(row.size());
    for (int c : row) dist.push_back(Rational(c) * scale);
    plan.row_dists.push_back(std::move(dist));
  }

  std::size_t total = 1;
  const std::size_t per_pair = plan.rows.size();
  for (std::size_t p = 0; p < plan.pairs.size(); ++p) {
    if (total > grid.bound / per_pair && total * per_pair > grid.bound) {
      throw SizeError("grid enumeration would exceed the bound of " +
                      std::to_string(grid.bound) + " candidate signals");
    }
    total *= per_pair;
  }
  plan.total = total;
  return plan;
}

// Walks all candidate signals as index vectors into the composition table.
template <typename Fn>
void walk(const EnumerationPlan& plan, Fn&& fn) {
  std::vector<std::size_t> choice(plan.pairs.size(), 0);
  const std::size_t per_pair = plan.row_dists.size();
  for (;;) {
    fn(choice);
    int pos = static_cast<int>(choice.size()) - 1;
    while (pos >= 0) {
      if (++choice[pos] < per_pair) break;
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

Signal to_signal(const EnumerationPlan& plan, int sender, const std::vector<std::size_t>& choice) {
  Signal sig;
  sig.sender = sender;
  for (std::size_t p = 0; p < plan.pairs.size(); ++p) {
    sig.rows[plan.pairs[p]] = plan.row_dists[choice[p]];
  }
  return sig;
}

// Compact evaluator: joint masses, incentive check, tie-broken best actions
// and player values, all straight off a candidate's composition indices.
class CandidateEvaluator {
 public:
  CandidateEvaluator(const GameSpec& game, const EnumerationPlan& plan, int sender)
      : game_(game), plan_(plan), sender_(sender) {
    for (const auto& pair : plan.pairs) {
      receiver_of_pair_.push_back(pair.second);
      own_of_pair_.push_back(pair.first);
    }
  }

  void load(const std::vector<std::size_t>& choice) {
    const int m = game_.action_count();
    const int nr = game_.receiver_state_count();
    const int ns = game_.sender_state_count(sender_);
    receiver_mass_.assign(m, std::vector<Rational>(nr, Rational()));
    own_mass_.assign(m, std::vector<Rational>(ns, Rational()));
    for (std::size_t p = 0; p < plan_.pairs.size(); ++p) {
      const auto& dist = plan_.row_dists[choice[p]];
      for (int a = 0; a < m; ++a) {
        if (dist[a].is_zero()) continue;
        Rational w = plan_.masses[p] * dist[a];
        receiver_mass_[a][receiver_of_pair_[p]] += w;
        own_mass_[a][own_of_pair_[p]] += w;
      }
    }
  }

  bool incentive_compatible() const {
    const int m = game_.action_count();
    for (int a = 0; a < m; ++a) {
      if (!has_mass(a)) continue;
      Rational own = expected_receiver(a, a);
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        if (own < expected_receiver(a, b)) return false;
      }
    }
    return true;
  }

  Rational receiver_value() const {
    Rational total;
    for (int a = 0; a < game_.action_count(); ++a) {
      if (!has_mass(a)) continue;
      total += expected_receiver(a, best_response(a));
    }
    return total;
  }

  Rational own_sender_value() const {
    Rational total;
    for (int a = 0; a < game_.action_count(); ++a) {
      if (!has_mass(a)) continue;
      int b = best_response(a);
      for (int s = 0; s < game_.sender_state_count(sender_); ++s) {
        if (own_mass_[a][s].is_zero()) continue;
        total += own_mass_[a][s] * game_.sender_u(sender_, b, s);
      }
    }
    return total;
  }

 private:
  bool has_mass(int a) const {
    for (const auto& w : receiver_mass_[a]) {
      if (!w.is_zero()) return true;
    }
    return false;
  }

  Rational expected_receiver(int a, int action) const {
    Rational v;
    for (int r = 0; r < game_.receiver_state_count(); ++r) {
      if (receiver_mass_[a][r].is_zero()) continue;
      v += receiver_mass_[a][r] * game_.receiver_u(action, r);
    }
    return v;
  }

  int best_response(int a) const {
    int best = 0;
    Rational best_value = expected_receiver(a, 0);
    for (int b = 1; b < game_.action_count(); ++b) {
      Rational v = expected_receiver(a, b);
      if (best_value < v) {
        best = b;
        best_value = v;
      }
    }
    return best;
  }

  const GameSpec& game_;
  const EnumerationPlan& plan_;
  int sender_;
  std::vector<int> receiver_of_pair_;
  std::vector<int> own_of_pair_;
  std::vector<std::vector<Rational>> receiver_mass_;
  std::vector<std::vector<Rational>> own_mass_;
};

}  // namespace

std::size_t count_grid_signals(const GameSpec& game, int sender, const GridSpec& grid) {
  return make_plan(game, sender, grid).total;
}

void grid_signals(const GameSpec& game, int sender, const GridSpec& grid,
                  const std::function<void(const Signal&)>& yield) {
  auto plan = make_plan(game, sender, grid);
  walk(plan, [&](const std::vector<std::size_t>& choice) { yield(to_signal(plan, sender, choice)); });
}

void enumerate_deterministic_signals(const GameSpec& game, int sender, std::size_t bound,
                                     const std::function<void(const Signal&)>& yield) {
  grid_signals(game, sender, GridSpec{1, bound}, yield);
}

OracleOptimum brute_force_optimal_signal(const GameSpec& game, int sender, const GridSpec& grid) {
  auto plan = make_plan(game, sender, grid);
  CandidateEvaluator eval(game, plan, sender);
  bool found = false;
  Rational best_value;
  std::vector<std::size_t> best_choice;
  walk(plan, [&](const std::vector<std::size_t>& choice) {
    eval.load(choice);
    if (!eval.incentive_compatible()) return;
    Rational value = eval.own_sender_value();
    if (!found || best_value < value) {
      found = true;
      best_value = value;
      best_choice = choice;
    }
  });
  if (!found) throw DomainError("no incentive-compatible signal on the grid");  // unreachable: constants are IC
  return {to_signal(plan, sender, best_choice), best_value};
}

OracleDeviation brute_force_best_deviation(const GameSpec& game, const PureProfile& profile,
                                           int sender, const GridSpec& grid) {
  auto plan = make_plan(game, sender, grid);
  CandidateEvaluator eval(game, plan, sender);

  // Fixed opponents: their receiver values and their value to the deviator.
  std::vector<Rational> other_receiver_value;
  std::vector<Rational> other_own_value;
  for (int k = 0; k < game.sender_count(); ++k) {
    if (k == sender) {
      other_receiver_value.push_back(Rational());
      other_own_value.push_back(Rational());
      continue;
    }
    other_receiver_value.push_back(receiver_value(game, profile.signals[k]));
    other_own_value.push_back(sender_value(game, sender, profile.signals[k]));
  }

  bool found = false;
  Rational best_payoff;
  std::vector<std::size_t> best_choice;
  walk(plan, [&](const std::vector<std::size_t>& choice) {
    eval.load(choice);
    Rational own_receiver = eval.receiver_value();
    Rational top = own_receiver;
    for (int k = 0; k < game.sender_count(); ++k) {
      if (k != sender) top = max(top, other_receiver_value[k]);
    }
    Rational acc;
    long long members = 0;
    if (own_receiver == top) {
      acc += eval.own_sender_value();
      ++members;
    }
    for (int k = 0; k < game.sender_count(); ++k) {
      if (k == sender || other_receiver_value[k] != top) continue;
      acc += other_own_value[k];
      ++members;
    }
    Rational payoff = acc / Rational(members);
    if (!found || best_payoff < payoff) {
      found = true;
      best_payoff = payoff;
      best_choice = choice;
    }
  });
  return {to_signal(plan, sender, best_choice), best_payoff};
}

}  // namespace persuasion
