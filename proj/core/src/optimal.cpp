#include "persuasion/optimal.hpp"

#include "persuasion/errors.hpp"

namespace persuasion {

LPProblem obedience_lp(const GameSpec& game, int sender) {
  auto marginal = marginal_prior(game, sender);
  const int m = game.action_count();

  LPProblem lp;
  std::vector<StatePair> pairs;
  for (const auto& [pair, mass] : marginal) {
    pairs.push_back(pair);
    for (int a = 0; a < m; ++a) {
      lp.add_variable("x(" + game.sender_states[sender][pair.first] + "," +
                          game.receiver_states[pair.second] + "->" + game.actions[a] + ")",
                      game.sender_u(sender, a, pair.first));
    }
  }

  const int num_vars = lp.variable_count();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::vector<Rational> row(num_vars);
    for (int a = 0; a < m; ++a) row[p * m + a] = 1;
    lp.add_eq(std::move(row), marginal.at(pairs[p]));
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      std::vector<Rational> row(num_vars);
      bool nonzero = false;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        int r = pairs[p].second;
        Rational gap = game.receiver_u(a, r) - game.receiver_u(b, r);
        if (!gap.is_zero()) {
          row[p * m + a] = gap;
          nonzero = true;
        }
      }
      if (nonzero) lp.add_ge(std::move(row), Rational(0));
    }
  }
  return lp;
}

OptimalSignalResult optimal_signal(const GameSpec& game, int sender) {
  auto marginal = marginal_prior(game, sender);
  const int m = game.action_count();
  LPProblem lp = obedience_lp(game, sender);

  LPSolution sol = solve_lp(lp);
  if (sol.status != LPStatus::Optimal) {
    // Full revelation is always feasible, so this indicates a malformed game.
    throw DomainError("obedience LP did not solve to optimality");
  }

  OptimalSignalResult result;
  result.value = sol.objective_value;
  result.outline = {lp.variable_count(), static_cast<int>(lp.eq_rows.size()),
                    static_cast<int>(lp.ge_rows.size())};
  result.signal.sender = sender;
  std::size_t p = 0;
  for (const auto& [pair, mass] : marginal) {
    std::vector<Rational> dist(m);
    for (int a = 0; a < m; ++a) dist[a] = sol.values[p * m + a] / mass;
    result.signal.rows[pair] = std::move(dist);
    ++p;
  }
  return result;
}

}  // namespace persuasion
