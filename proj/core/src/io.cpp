#include "persuasion/io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

#include "persuasion/builtin.hpp"
#include "persuasion/errors.hpp"

namespace persuasion {

using nlohmann::json;

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Rational rational_field(const json& j, const std::string& context) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.what());
  }
  throw ParseError(context + ": expected a rational string, got " + j.dump());
}

int index_of(const std::vector<std::string>& labels, const std::string& label,
             const std::string& context) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  throw ParseError(context + ": unknown label '" + label + "'");
}

std::vector<std::string> string_list(const json& j, const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": expected an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError(context + ": labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::vector<Rational>> utility_table_from_json(
    const json& j, const std::vector<std::string>& actions,
    const std::vector<std::string>& states, const std::string& context) {
  if (!j.is_array()) throw ParseError(context + ": expected an array of {action, state, u} rows");
  std::vector<std::vector<Rational>> table(actions.size(), std::vector<Rational>(states.size()));
  std::vector<std::vector<bool>> seen(actions.size(), std::vector<bool>(states.size(), false));
  for (const auto& row : j) {
    int a = index_of(actions, row.at("action").get<std::string>(), context);
    int s = index_of(states, row.at("state").get<std::string>(), context);
    if (seen[a][s]) {
      throw ParseError(context + ": duplicate entry for (" + actions[a] + ", " + states[s] + ")");
    }
    seen[a][s] = true;
    table[a][s] = rational_field(row.at("u"), context);
  }
  for (std::size_t a = 0; a < actions.size(); ++a) {
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (!seen[a][s]) {
        throw ParseError(context + ": missing entry for (" + actions[a] + ", " + states[s] + ")");
      }
    }
  }
  return table;
}

json utility_table_to_json(const std::vector<std::vector<Rational>>& table,
                           const std::vector<std::string>& actions,
                           const std::vector<std::string>& states) {
  json out = json::array();
  for (std::size_t a = 0; a < actions.size(); ++a) {
    for (std::size_t s = 0; s < states.size(); ++s) {
      out.push_back({{"action", actions[a]}, {"state", states[s]}, {"u", table[a][s].str()}});
    }
  }
  return out;
}

}  // namespace

json game_to_json(const GameSpec& game) {
  json j;
  if (!game.name.empty()) j["name"] = game.name;
  j["senders"] = game.sender_states;
  j["receiver_states"] = game.receiver_states;
  j["actions"] = game.actions;
  json prior = json::array();
  for (const auto& [tuple, p] : game.prior) {
    json labels = json::array();
    for (int i = 0; i < game.sender_count(); ++i) labels.push_back(game.sender_states[i][tuple[i]]);
    labels.push_back(game.receiver_states[tuple[game.sender_count()]]);
    prior.push_back({{"state", labels}, {"p", p.str()}});
  }
  j["prior"] = prior;
  json sender_utilities = json::array();
  for (int i = 0; i < game.sender_count(); ++i) {
    sender_utilities.push_back(
        utility_table_to_json(game.sender_utility[i], game.actions, game.sender_states[i]));
  }
  j["sender_utilities"] = sender_utilities;
  j["receiver_utility"] =
      utility_table_to_json(game.receiver_utility, game.actions, game.receiver_states);
  return j;
}

GameSpec game_from_json(const json& j) {
  GameSpec game;
  try {
    if (j.contains("name")) game.name = j.at("name").get<std::string>();
    if (!j.at("senders").is_array() || j.at("senders").empty()) {
      throw ParseError("senders: expected a nonempty array of label arrays");
    }
    int idx = 0;
    for (const auto& states : j.at("senders")) {
      game.sender_states.push_back(string_list(states, "senders[" + std::to_string(idx++) + "]"));
    }
    game.receiver_states = string_list(j.at("receiver_states"), "receiver_states");
    game.actions = string_list(j.at("actions"), "actions");

    const int n = game.sender_count();
    for (const auto& entry : j.at("prior")) {
      auto labels = string_list(entry.at("state"), "prior.state");
      if (static_cast<int>(labels.size()) != n + 1) {
        throw ParseError("prior.state: expected " + std::to_string(n + 1) + " labels, got " +
                         std::to_string(labels.size()));
      }
      StateTuple tuple;
      for (int i = 0; i < n; ++i) {
        tuple.push_back(index_of(game.sender_states[i], labels[i],
                                 "prior.state sender " + std::to_string(i + 1)));
      }
      tuple.push_back(index_of(game.receiver_states, labels[n], "prior.state receiver"));
      Rational p = rational_field(entry.at("p"), "prior.p");
      if (p.sign() < 0) throw ParseError("prior.p: negative mass");
      if (game.prior.count(tuple)) throw ParseError("prior: duplicate state tuple");
      if (!p.is_zero()) game.prior[tuple] = p;
    }

    const auto& tables = j.at("sender_utilities");
    if (!tables.is_array() || static_cast<int>(tables.size()) != n) {
      throw ParseError("sender_utilities: expected one table per sender");
    }
    for (int i = 0; i < n; ++i) {
      game.sender_utility.push_back(utility_table_from_json(
          tables[i], game.actions, game.sender_states[i],
          "sender_utilities[" + std::to_string(i) + "]"));
    }
    game.receiver_utility = utility_table_from_json(j.at("receiver_utility"), game.actions,
                                                    game.receiver_states, "receiver_utility");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed game file: ") + e.what());
  }
  game.check_structure();
  return game;
}

GameSpec load_game(const std::string& name_or_path) {
  if (auto builtin = make_builtin(name_or_path)) return *builtin;
  return game_from_json(load_json_file(name_or_path));
}

void save_game(const GameSpec& game, const std::string& path) {
  write_json_file(game_to_json(game), path);
}

json signal_to_json(const GameSpec& game, const Signal& sig) {
  json j;
  j["sender"] = sig.sender + 1;
  json rows = json::array();
  for (const auto& [pair, dist] : sig.rows) {
    json d = json::object();
    for (int a = 0; a < game.action_count(); ++a) {
      if (dist[a].is_zero()) continue;
      d[game.actions[a]] = dist[a].str();
    }
    rows.push_back({{"state",
                     {game.sender_states[sig.sender][pair.first],
                      game.receiver_states[pair.second]}},
                    {"dist", d}});
  }
  j["rows"] = rows;
  return j;
}

Signal signal_from_json(const GameSpec& game, const json& j) {
  Signal sig;
  try {
    int sender = j.at("sender").get<int>();
    if (sender < 1 || sender > game.sender_count()) {
      throw ParseError("signal sender " + std::to_string(sender) + " out of range 1.." +
                       std::to_string(game.sender_count()));
    }
    sig.sender = sender - 1;
    for (const auto& row : j.at("rows")) {
      auto labels = string_list(row.at("state"), "signal row state");
      if (labels.size() != 2) throw ParseError("signal row state: expected [own, receiver]");
      int own = index_of(game.sender_states[sig.sender], labels[0], "signal row own state");
      int recv = index_of(game.receiver_states, labels[1], "signal row receiver state");
      if (sig.rows.count({own, recv})) throw ParseError("signal: duplicate row for a state pair");
      std::vector<Rational> dist(game.action_count());
      for (const auto& [action, p] : row.at("dist").items()) {
        int a = index_of(game.actions, action, "signal row dist");
        dist[a] = rational_field(p, "signal row dist");
      }
      sig.rows[{own, recv}] = std::move(dist);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed signal file: ") + e.what());
  }
  validate_signal(game, sig);
  return sig;
}

Signal load_signal(const GameSpec& game, const std::string& path) {
  return signal_from_json(game, load_json_file(path));
}

void save_signal(const GameSpec& game, const Signal& sig, const std::string& path) {
  write_json_file(signal_to_json(game, sig), path);
}

json improvement_to_json(const GameSpec& game, const Improvement& result) {
  json j = signal_to_json(game, result.signal);
  json reroutes = json::array();
  for (const auto& entry : result.trace.targets) {
    reroutes.push_back({
        {"receiver_state", game.receiver_states[entry.receiver_state]},
        {"witness_state", game.sender_states[result.signal.sender][entry.witness_state]},
        {"target_action", game.actions[entry.target_action]},
        {"p", entry.reroute_probability.str()},
    });
  }
  j["trace"] = {{"base_action", game.actions[result.trace.base_action]},
                {"epsilon", result.trace.epsilon.str()},
                {"reroutes", reroutes}};
  return j;
}

MixedProfile profile_from_json(const GameSpec& game, const json& j, const std::string& base_dir) {
  MixedProfile profile;
  try {
    const auto& senders = j.at("senders");
    if (!senders.is_array() || static_cast<int>(senders.size()) != game.sender_count()) {
      throw ParseError("profile: expected one support list per sender");
    }
    for (const auto& support : senders) {
      std::vector<WeightedSignal> entries;
      for (const auto& item : support) {
        WeightedSignal ws;
        ws.probability = item.contains("p") ? rational_field(item.at("p"), "profile entry p")
                                            : Rational(1);
        if (item.contains("signal")) {
          ws.signal = signal_from_json(game, item.at("signal"));
        } else if (item.contains("file")) {
          std::filesystem::path p = item.at("file").get<std::string>();
          if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
          ws.signal = load_signal(game, p.string());
        } else {
          throw ParseError("profile entry needs 'signal' or 'file'");
        }
        entries.push_back(std::move(ws));
      }
      profile.strategies.push_back(std::move(entries));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed profile file: ") + e.what());
  }
  return profile;
}

MixedProfile load_profile(const GameSpec& game, const std::string& path) {
  std::filesystem::path p(path);
  return profile_from_json(game, load_json_file(path), p.parent_path().string());
}

json profile_to_json(const GameSpec& game, const MixedProfile& profile) {
  json senders = json::array();
  for (const auto& support : profile.strategies) {
    json entries = json::array();
    for (const auto& ws : support) {
      entries.push_back({{"p", ws.probability.str()}, {"signal", signal_to_json(game, ws.signal)}});
    }
    senders.push_back(entries);
  }
  return json{{"senders", senders}};
}

}  // namespace persuasion
