#pragma once

#include <optional>
#include <string>
#include <vector>

#include "persuasion/game.hpp"

namespace persuasion {

// Two-expert policy game: the policy is beneficial or harmful with equal
// probability, each expert is independently unbiased with probability
// `unbiased_prob` (and then shares the policymaker's preference) or biased
// (and then always wants implementation). Each expert learns his own type
// and the policy's benefit. All utilities are 0/1.
GameSpec policy_game(const Rational& unbiased_prob);

// Two-lobbyist e-cigarette regulation game with the fixed 8-state prior:
// expert 1 cares about health (H/U), expert 2 about gender popularity (M/W),
// the regulator about youth smoking rates (Y/O). All utilities are 0/1.
GameSpec ecig_game();

// Parses "ecig" or "policy(<rational>)", e.g. "policy(1/10)", "policy(0.1)".
std::optional<GameSpec> make_builtin(const std::string& name);

std::vector<std::string> builtin_names();

}  // namespace persuasion
