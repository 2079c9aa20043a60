#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "persuasion/analysis.hpp"
#include "persuasion/constructions.hpp"
#include "persuasion/game.hpp"
#include "persuasion/signal.hpp"

namespace persuasion {

inline constexpr std::size_t kDefaultRealizationBound = 10000;

struct PureProfile {
  std::vector<Signal> signals;  // one per sender, in sender order
};

struct WeightedSignal {
  Signal signal;
  Rational probability;
};

// Finite-support mixed profile; probabilities are positive and sum to 1 per
// sender. A pure profile is the special case of point-mass supports.
struct MixedProfile {
  std::vector<std::vector<WeightedSignal>> strategies;

  static MixedProfile from_pure(const PureProfile& pure);
  bool is_pure() const;
};

// The receiver's interim choice: uniform over the senders whose signals
// maximize his expected value.
struct Decision {
  std::vector<int> chosen;                // argmax senders, ascending
  std::vector<Rational> receiver_values;  // per sender
};

Decision decide(const GameSpec& game, const std::vector<Signal>& signals);

struct RealizationChoice {
  Rational weight;
  std::vector<int> chosen;
};

struct ProfilePayoffs {
  Rational receiver_value;
  std::vector<Rational> sender_values;
  std::vector<RealizationChoice> chosen_sets;
};

ProfilePayoffs profile_payoffs(const GameSpec& game, const PureProfile& profile);
ProfilePayoffs mixed_profile_payoffs(const GameSpec& game, const MixedProfile& profile,
                                     std::size_t realization_bound = kDefaultRealizationBound);

// Receiver-value support structure of a mixed profile: T_i, tau_i = min T_i,
// tau = max_i tau_i, plus the support signals that can never be chosen
// because some other sender always offers strictly more.
struct SupportAnalysis {
  std::vector<std::vector<Rational>> receiver_values;  // T_i, sorted unique
  std::vector<Rational> tau_i;
  Rational tau;
  std::vector<std::pair<int, int>> never_chosen;  // (sender, support index)
};

SupportAnalysis support_analysis(const MixedProfile& profile, const GameSpec& game);

enum class DeviationKind { ImproveOnChosen, Simulate, FullInfo, EpsMix };
const char* to_string(DeviationKind kind);

struct DeviationWitness {
  int deviator = 0;
  Signal new_signal;
  Rational old_payoff;
  Rational new_payoff;  // strictly larger, exact
  DeviationKind construction = DeviationKind::ImproveOnChosen;
};

// Searches the constructive deviation family in canonical order: strict
// improvements on the other senders' potentially-chosen signals, plain
// simulations of them, full revelation, then mixing the deviator's own
// support signals with full revelation over a decreasing epsilon schedule.
// Returns the first candidate with a strictly larger exact expected payoff.
// none-found is a valid outcome, not an equilibrium certificate.
std::optional<DeviationWitness> find_profitable_deviation(
    const GameSpec& game, const MixedProfile& profile, int sender,
    std::size_t realization_bound = kDefaultRealizationBound);
std::optional<DeviationWitness> find_profitable_deviation(const GameSpec& game,
                                                          const PureProfile& profile, int sender);

enum class VerdictKind { Refuted, FullyInformativeConsistent, NoDeviationFound };
const char* to_string(VerdictKind kind);

struct EquilibriumVerdict {
  VerdictKind kind = VerdictKind::NoDeviationFound;
  std::optional<DeviationWitness> witness;
  ProfilePayoffs payoffs;
  SupportAnalysis support;
};

// Theorem-backed refuter: if some realization gives positive choice
// probability to a signal that is not fully informative, hunts for a
// profitable deviation sender by sender.
EquilibriumVerdict check_equilibrium(const GameSpec& game, const MixedProfile& profile,
                                     std::size_t realization_bound = kDefaultRealizationBound);
EquilibriumVerdict check_equilibrium(const GameSpec& game, const PureProfile& profile);

// Sender's payoff from a deviation under the adversarial optimal decision
// rule: the receiver-argmax member that minimizes the deviator's value.
Rational pessimistic_payoff(const GameSpec& game, const PureProfile& profile, int sender,
                            const Signal& deviation);

}  // namespace persuasion
