#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "persuasion/constructions.hpp"
#include "persuasion/equilibrium.hpp"
#include "persuasion/game.hpp"
#include "persuasion/signal.hpp"

namespace persuasion {

// All rationals in files are strings: "p/q", an integer, or a terminating
// decimal (converted exactly on input; output is always canonical "p/q").

nlohmann::json game_to_json(const GameSpec& game);
GameSpec game_from_json(const nlohmann::json& j);

// Accepts a builtin name ("ecig", "policy(1/10)") or a path to a game file.
GameSpec load_game(const std::string& name_or_path);
void save_game(const GameSpec& game, const std::string& path);

// Signal files refer to senders 1-based.
nlohmann::json signal_to_json(const GameSpec& game, const Signal& sig);
Signal signal_from_json(const GameSpec& game, const nlohmann::json& j);
Signal load_signal(const GameSpec& game, const std::string& path);
void save_signal(const GameSpec& game, const Signal& sig, const std::string& path);

// Improvement output: the signal plus a `trace` object for auditability.
nlohmann::json improvement_to_json(const GameSpec& game, const Improvement& result);

// Mixed-profile files list weighted signals per sender, either inline
// (`signal`) or by reference (`file`, resolved relative to the profile file).
MixedProfile profile_from_json(const GameSpec& game, const nlohmann::json& j,
                               const std::string& base_dir = "");
MixedProfile load_profile(const GameSpec& game, const std::string& path);
nlohmann::json profile_to_json(const GameSpec& game, const MixedProfile& profile);

}  // namespace persuasion
