#include "persuasion/equilibrium.hpp"

#include <algorithm>

#include "persuasion/errors.hpp"

namespace persuasion {

MixedProfile MixedProfile::from_pure(const PureProfile& pure) {
  MixedProfile mixed;
  for (const auto& sig : pure.signals) {
    mixed.strategies.push_back({WeightedSignal{sig, Rational(1)}});
  }
  return mixed;
}

bool MixedProfile::is_pure() const {
  for (const auto& support : strategies) {
    if (support.size() != 1) return false;
  }
  return true;
}

Decision decide(const GameSpec& game, const std::vector<Signal>& signals) {
  if (static_cast<int>(signals.size()) != game.sender_count()) {
    throw DomainError("decide needs exactly one signal per sender");
  }
  Decision d;
  for (const auto& sig : signals) d.receiver_values.push_back(receiver_value(game, sig));
  Rational best = d.receiver_values.front();
  for (const auto& v : d.receiver_values) best = max(best, v);
  for (int i = 0; i < game.sender_count(); ++i) {
    if (d.receiver_values[i] == best) d.chosen.push_back(i);
  }
  return d;
}

namespace {

void check_mixed(const GameSpec& game, const MixedProfile& profile) {
  if (static_cast<int>(profile.strategies.size()) != game.sender_count()) {
    throw DomainError("profile needs one strategy per sender");
  }
  for (int i = 0; i < game.sender_count(); ++i) {
    const auto& support = profile.strategies[i];
    if (support.empty()) throw DomainError("empty support in mixed strategy");
    Rational sum;
    for (const auto& ws : support) {
      if (ws.signal.sender != i) {
        throw DomainError("strategy of sender " + std::to_string(i + 1) +
                          " contains a signal of sender " + std::to_string(ws.signal.sender + 1));
      }
      if (ws.probability.sign() <= 0) throw DomainError("mixed strategy weights must be positive");
      sum += ws.probability;
    }
    if (sum != Rational(1)) {
      throw DomainError("mixed strategy weights sum to " + sum.str() + ", expected 1");
    }
  }
}

// Per-support-signal values: receiver value plus every sender's value of it.
struct SupportValues {
  std::vector<std::vector<Rational>> receiver;           // [i][idx]
  std::vector<std::vector<std::vector<Rational>>> sender;  // [i][idx][k]
};

SupportValues evaluate_supports(const GameSpec& game, const MixedProfile& profile) {
  const int n = game.sender_count();
  SupportValues values;
  values.receiver.resize(n);
  values.sender.resize(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& ws : profile.strategies[i]) {
      values.receiver[i].push_back(receiver_value(game, ws.signal));
      std::vector<Rational> per_sender;
      for (int k = 0; k < n; ++k) per_sender.push_back(sender_value(game, k, ws.signal));
      values.sender[i].push_back(std::move(per_sender));
    }
  }
  return values;
}

std::size_t realization_count(const MixedProfile& profile, std::size_t bound) {
  std::size_t total = 1;
  for (const auto& support : profile.strategies) {
    if (total > bound / support.size() && total * support.size() > bound) {
      throw SizeError("mixed profile has more than " + std::to_string(bound) + " realizations");
    }
    total *= support.size();
  }
  return total;
}

ProfilePayoffs payoffs_from_values(const GameSpec& game, const MixedProfile& profile,
                                   const SupportValues& values, std::size_t bound) {
  check_mixed(game, profile);
  realization_count(profile, bound);
  const int n = game.sender_count();

  ProfilePayoffs out;
  out.sender_values.assign(n, Rational());

  std::vector<std::size_t> index(n, 0);
  for (;;) {
    Rational weight(1);
    for (int i = 0; i < n; ++i) weight *= profile.strategies[i][index[i]].probability;

    Rational best = values.receiver[0][index[0]];
    for (int i = 1; i < n; ++i) best = max(best, values.receiver[i][index[i]]);
    std::vector<int> chosen;
    for (int i = 0; i < n; ++i) {
      if (values.receiver[i][index[i]] == best) chosen.push_back(i);
    }
    Rational share = weight / Rational(static_cast<long long>(chosen.size()));

    out.receiver_value += weight * best;
    for (int k = 0; k < n; ++k) {
      Rational acc;
      for (int j : chosen) acc += values.sender[j][index[j]][k];
      out.sender_values[k] += share * acc;
    }
    out.chosen_sets.push_back({weight, std::move(chosen)});

    int pos = n - 1;
    while (pos >= 0) {
      if (++index[pos] < profile.strategies[pos].size()) break;
      index[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace

ProfilePayoffs mixed_profile_payoffs(const GameSpec& game, const MixedProfile& profile,
                                     std::size_t realization_bound) {
  auto values = evaluate_supports(game, profile);
  return payoffs_from_values(game, profile, values, realization_bound);
}

ProfilePayoffs profile_payoffs(const GameSpec& game, const PureProfile& profile) {
  return mixed_profile_payoffs(game, MixedProfile::from_pure(profile));
}

SupportAnalysis support_analysis(const MixedProfile& profile, const GameSpec& game) {
  check_mixed(game, profile);
  const int n = game.sender_count();
  SupportAnalysis out;
  std::vector<std::vector<Rational>> raw(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& ws : profile.strategies[i]) {
      raw[i].push_back(receiver_value(game, ws.signal));
    }
    auto sorted = raw[i];
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.receiver_values.push_back(sorted);
    out.tau_i.push_back(sorted.front());
  }
  out.tau = out.tau_i.front();
  for (const auto& t : out.tau_i) out.tau = max(out.tau, t);
  for (int i = 0; i < n; ++i) {
    for (std::size_t idx = 0; idx < raw[i].size(); ++idx) {
      if (raw[i][idx] < out.tau) out.never_chosen.emplace_back(i, static_cast<int>(idx));
    }
  }
  return out;
}

namespace {

Rational payoff_with_deviation(const GameSpec& game, const MixedProfile& profile, int sender,
                               const Signal& deviation, std::size_t bound) {
  MixedProfile changed = profile;
  changed.strategies[sender] = {WeightedSignal{deviation, Rational(1)}};
  return mixed_profile_payoffs(game, changed, bound).sender_values[sender];
}

}  // namespace

std::optional<DeviationWitness> find_profitable_deviation(const GameSpec& game,
                                                          const MixedProfile& profile, int sender,
                                                          std::size_t realization_bound) {
  check_mixed(game, profile);
  auto values = evaluate_supports(game, profile);
  const Rational old_payoff =
      payoffs_from_values(game, profile, values, realization_bound).sender_values[sender];
  auto support = support_analysis(profile, game);

  // The other senders' potentially-chosen signals, best for the deviator
  // first. Only these can be worth copying or improving on.
  struct Candidate {
    int owner;
    int index;
    Rational own_value;  // the deviator's value of this signal
  };
  std::vector<Candidate> candidates;
  for (int k = 0; k < game.sender_count(); ++k) {
    if (k == sender) continue;
    for (std::size_t idx = 0; idx < profile.strategies[k].size(); ++idx) {
      if (values.receiver[k][idx] < support.tau) continue;
      candidates.push_back({k, static_cast<int>(idx), values.sender[k][idx][sender]});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.own_value != b.own_value) return b.own_value < a.own_value;
    if (a.owner != b.owner) return a.owner < b.owner;
    return a.index < b.index;
  });

  auto attempt = [&](const Signal& candidate, DeviationKind kind) -> std::optional<DeviationWitness> {
    Rational new_payoff = payoff_with_deviation(game, profile, sender, candidate, realization_bound);
    if (old_payoff < new_payoff) {
      return DeviationWitness{sender, candidate, old_payoff, new_payoff, kind};
    }
    return std::nullopt;
  };

  // 1) Strict improvement on a non-fully-informative chosen signal.
  for (const auto& c : candidates) {
    const Signal& target = profile.strategies[c.owner][c.index].signal;
    if (is_fully_informative(game, target).ok) continue;
    try {
      auto witness = attempt(improve(game, sender, target).signal, DeviationKind::ImproveOnChosen);
      if (witness) return witness;
    } catch (const DomainError&) {
      // No alignment witness on this event; fall through to other candidates.
    }
  }

  // 2) Plain simulation.
  for (const auto& c : candidates) {
    const Signal& target = profile.strategies[c.owner][c.index].signal;
    try {
      auto witness = attempt(simulate(game, sender, target), DeviationKind::Simulate);
      if (witness) return witness;
    } catch (const DomainError&) {
    }
  }

  // 3) Full revelation.
  try {
    auto witness = attempt(full_info_signal(game, sender), DeviationKind::FullInfo);
    if (witness) return witness;
  } catch (const DomainError&) {
  }

  // 4) Own signals mixed with full revelation, epsilon in {1/2, ..., 1/2^10}.
  for (const auto& ws : profile.strategies[sender]) {
    Rational eps(1, 2);
    for (int step = 0; step < 10; ++step) {
      try {
        auto witness = attempt(mix_with_full_info(game, ws.signal, eps), DeviationKind::EpsMix);
        if (witness) return witness;
      } catch (const DomainError&) {
        break;  // the game lacks a unique receiver optimum somewhere
      }
      eps /= 2;
    }
  }

  return std::nullopt;
}

std::optional<DeviationWitness> find_profitable_deviation(const GameSpec& game,
                                                          const PureProfile& profile, int sender) {
  return find_profitable_deviation(game, MixedProfile::from_pure(profile), sender);
}

EquilibriumVerdict check_equilibrium(const GameSpec& game, const MixedProfile& profile,
                                     std::size_t realization_bound) {
  EquilibriumVerdict verdict;
  verdict.payoffs = mixed_profile_payoffs(game, profile, realization_bound);
  verdict.support = support_analysis(profile, game);

  // Does any realization give positive choice probability to a signal that
  // is not fully informative? Chosen sets are indexed in odometer order, so
  // rebuild the realization indices alongside them.
  const int n = game.sender_count();
  std::vector<std::vector<bool>> informative(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& ws : profile.strategies[i]) {
      informative[i].push_back(is_fully_informative(game, ws.signal).ok);
    }
  }
  bool opaque_chosen = false;
  std::vector<std::size_t> index(n, 0);
  for (const auto& choice : verdict.payoffs.chosen_sets) {
    for (int j : choice.chosen) {
      if (!informative[j][index[j]]) {
        opaque_chosen = true;
        break;
      }
    }
    if (opaque_chosen) break;
    int pos = n - 1;
    while (pos >= 0) {
      if (++index[pos] < profile.strategies[pos].size()) break;
      index[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  if (!opaque_chosen) {
    verdict.kind = VerdictKind::FullyInformativeConsistent;
    return verdict;
  }
  for (int i = 0; i < n; ++i) {
    auto witness = find_profitable_deviation(game, profile, i, realization_bound);
    if (witness) {
      verdict.kind = VerdictKind::Refuted;
      verdict.witness = witness;
      return verdict;
    }
  }
  verdict.kind = VerdictKind::NoDeviationFound;
  return verdict;
}

EquilibriumVerdict check_equilibrium(const GameSpec& game, const PureProfile& profile) {
  return check_equilibrium(game, MixedProfile::from_pure(profile));
}

Rational pessimistic_payoff(const GameSpec& game, const PureProfile& profile, int sender,
                            const Signal& deviation) {
  std::vector<Signal> signals = profile.signals;
  signals[sender] = deviation;
  Decision d = decide(game, signals);
  bool first = true;
  Rational worst;
  for (int j : d.chosen) {
    Rational v = sender_value(game, sender, signals[j]);
    if (first || v < worst) {
      worst = v;
      first = false;
    }
  }
  return worst;
}

const char* to_string(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::ImproveOnChosen: return "improve-on-chosen";
    case DeviationKind::Simulate: return "simulate";
    case DeviationKind::FullInfo: return "full-info";
    case DeviationKind::EpsMix: return "eps-mix";
  }
  return "?";
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Refuted: return "refuted";
    case VerdictKind::FullyInformativeConsistent: return "fully-informative-consistent";
    case VerdictKind::NoDeviationFound: return "no-deviation-found";
  }
  return "?";
}

}  // namespace persuasion
