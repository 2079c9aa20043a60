// persuade: exact analysis of competing-senders persuasion games.
//
// Subcommands: validate, analyze, optimal, simulate, improve, check-ne,
// oracle, examples. Every number printed is an exact rational; decimal
// columns are approximations and are marked as such.

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "persuasion/builtin.hpp"
#include "persuasion/equilibrium.hpp"
#include "persuasion/errors.hpp"
#include "persuasion/io.hpp"
#include "persuasion/optimal.hpp"
#include "persuasion/oracle.hpp"

using namespace persuasion;
using nlohmann::json;

namespace {

std::string show(const Rational& r) {
  if (r.is_integer()) return r.str();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", r.approx());
  return r.str() + " (~" + buf + ")";
}

std::size_t oracle_bound_from_env() {
  if (const char* env = std::getenv("PERSUADE_ORACLE_BOUND")) {
    return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
  }
  return kDefaultEnumerationBound;
}

void check_sender_index(const GameSpec& g, int sender) {
  if (sender < 1 || sender > g.sender_count()) {
    throw DomainError("sender index " + std::to_string(sender) + " out of range 1.." +
                      std::to_string(g.sender_count()));
  }
}

json validation_to_json(const GameSpec& g, const ValidationReport& report) {
  json a1 = json::array();
  for (const auto& [player, state] : report.assumption1_violations) {
    std::string who = player == g.sender_count() ? "receiver" : "sender " + std::to_string(player + 1);
    std::string label = player == g.sender_count() ? g.receiver_states[state]
                                                   : g.sender_states[player][state];
    a1.push_back({{"player", who}, {"state", label}});
  }
  json a2 = json::array();
  for (const auto& v : report.assumption2_violations) {
    a2.push_back({{"sender_i", v.sender_i + 1},
                  {"sender_j", v.sender_j + 1},
                  {"state_j", g.sender_states[v.sender_j][v.omega_j]},
                  {"receiver_state", g.receiver_states[v.omega_r]}});
  }
  return json{{"prior_ok", report.prior_ok},
              {"prior_sum", report.prior_sum.str()},
              {"unique_optima_ok", report.assumption1_ok},
              {"unique_optima_violations", a1},
              {"residual_alignment_ok", report.assumption2_ok},
              {"residual_alignment_violations", a2}};
}

void print_validation(const GameSpec& g, const ValidationReport& report) {
  std::cout << "prior sums to " << report.prior_sum.str() << (report.prior_ok ? " [ok]" : " [BAD]")
            << "\n";
  std::cout << "unique per-state optima: " << (report.assumption1_ok ? "ok" : "VIOLATED") << "\n";
  for (const auto& [player, state] : report.assumption1_violations) {
    if (player == g.sender_count()) {
      std::cout << "  receiver ties in state " << g.receiver_states[state] << "\n";
    } else {
      std::cout << "  sender " << player + 1 << " ties in state "
                << g.sender_states[player][state] << "\n";
    }
  }
  std::cout << "residual alignment: " << (report.assumption2_ok ? "ok" : "VIOLATED") << "\n";
  for (const auto& v : report.assumption2_violations) {
    std::cout << "  no state of sender " << v.sender_i + 1 << " aligned with the receiver given ("
              << g.sender_states[v.sender_j][v.omega_j] << ", " << g.receiver_states[v.omega_r]
              << ") of sender " << v.sender_j + 1 << "\n";
  }
}

json payoffs_to_json(const ProfilePayoffs& p) {
  json senders = json::array();
  for (const auto& v : p.sender_values) senders.push_back(v.str());
  return json{{"receiver_value", p.receiver_value.str()}, {"sender_values", senders}};
}

json support_to_json(const SupportAnalysis& s) {
  json values = json::array();
  for (const auto& list : s.receiver_values) {
    json one = json::array();
    for (const auto& v : list) one.push_back(v.str());
    values.push_back(one);
  }
  json tau_i = json::array();
  for (const auto& t : s.tau_i) tau_i.push_back(t.str());
  json never = json::array();
  for (const auto& [sender, index] : s.never_chosen) {
    never.push_back({{"sender", sender + 1}, {"support_index", index}});
  }
  return json{{"receiver_value_support", values},
              {"tau_i", tau_i},
              {"tau", s.tau.str()},
              {"never_chosen", never}};
}

void print_signal_analysis(const GameSpec& g, const Signal& sig) {
  std::cout << "signal of sender " << sig.sender + 1 << "\n";
  for (int a = 0; a < g.action_count(); ++a) {
    Rational p = message_probability(g, sig, a);
    std::cout << "  P(" << g.actions[a] << ") = " << show(p);
    if (!p.is_zero()) {
      auto belief = posterior(g, sig, a).receiver_marginal(g);
      std::cout << "; posterior over receiver states:";
      for (int r = 0; r < g.receiver_state_count(); ++r) {
        std::cout << " " << g.receiver_states[r] << "=" << belief[r].str();
      }
      std::cout << "; best response " << g.actions[receiver_best_action(g, belief)];
    }
    std::cout << "\n";
  }
  auto ic = is_incentive_compatible(g, sig);
  std::cout << "incentive compatible: " << (ic.ok ? "yes" : "no") << "\n";
  for (int a : ic.violations) {
    std::cout << "  recommendation " << g.actions[a] << " is not receiver-optimal\n";
  }
  auto fi = is_fully_informative(g, sig);
  std::cout << "fully informative: " << (fi.ok ? "yes" : "no");
  if (fi.counterexample) {
    std::cout << " (" << g.actions[fi.counterexample->first] << " at "
              << g.receiver_states[fi.counterexample->second] << ")";
  }
  std::cout << "\n";
  std::cout << "receiver value: " << show(receiver_value(g, sig)) << "\n";
  for (int k = 0; k < g.sender_count(); ++k) {
    std::cout << "sender " << k + 1 << " value: " << show(sender_value(g, k, sig)) << "\n";
  }
}

json signal_analysis_to_json(const GameSpec& g, const Signal& sig) {
  json messages = json::array();
  for (int a = 0; a < g.action_count(); ++a) {
    Rational p = message_probability(g, sig, a);
    json entry = {{"action", g.actions[a]}, {"probability", p.str()}};
    if (!p.is_zero()) {
      auto belief = posterior(g, sig, a).receiver_marginal(g);
      json post = json::object();
      for (int r = 0; r < g.receiver_state_count(); ++r) post[g.receiver_states[r]] = belief[r].str();
      entry["receiver_posterior"] = post;
      entry["best_response"] = g.actions[receiver_best_action(g, belief)];
    }
    messages.push_back(entry);
  }
  auto ic = is_incentive_compatible(g, sig);
  auto fi = is_fully_informative(g, sig);
  json senders = json::array();
  for (int k = 0; k < g.sender_count(); ++k) senders.push_back(sender_value(g, k, sig).str());
  json out = {{"sender", sig.sender + 1},
              {"messages", messages},
              {"incentive_compatible", ic.ok},
              {"fully_informative", fi.ok},
              {"receiver_value", receiver_value(g, sig).str()},
              {"sender_values", senders}};
  if (fi.counterexample) {
    out["counterexample"] = {{"action", g.actions[fi.counterexample->first]},
                             {"receiver_state", g.receiver_states[fi.counterexample->second]}};
  }
  return out;
}

json witness_to_json(const GameSpec& g, const DeviationWitness& w) {
  return json{{"deviator", w.deviator + 1},
              {"construction", to_string(w.construction)},
              {"old_payoff", w.old_payoff.str()},
              {"new_payoff", w.new_payoff.str()},
              {"signal", signal_to_json(g, w.new_signal)}};
}

int run_validate(const std::string& game_name, bool as_json) {
  GameSpec g = load_game(game_name);
  auto report = validate_game(g);
  if (as_json) {
    json out = validation_to_json(g, report);
    out["ok"] = report.ok();
    std::cout << out.dump(2) << "\n";
  } else {
    print_validation(g, report);
  }
  return report.ok() ? 0 : 1;
}

int run_analyze(const std::string& game_name, const std::string& signal_path, bool as_json) {
  GameSpec g = load_game(game_name);
  if (!signal_path.empty()) {
    Signal sig = load_signal(g, signal_path);
    if (as_json) {
      std::cout << signal_analysis_to_json(g, sig).dump(2) << "\n";
    } else {
      print_signal_analysis(g, sig);
    }
    return 0;
  }
  auto report = validate_game(g);
  Rational top = full_info_value(g);
  if (as_json) {
    json senders = json::array();
    for (int i = 0; i < g.sender_count(); ++i) {
      senders.push_back({{"states", g.sender_states[i].size()},
                         {"full_info_value", sender_value(g, i, full_info_signal(g, i)).str()}});
    }
    json out = {{"name", g.name},
                {"senders", senders},
                {"actions", g.actions},
                {"receiver_states", g.receiver_states},
                {"validation", validation_to_json(g, report)},
                {"full_information_receiver_value", top.str()}};
    std::cout << out.dump(2) << "\n";
  } else {
    if (!g.name.empty()) std::cout << g.name << ": ";
    std::cout << g.sender_count() << " senders, " << g.action_count() << " actions, "
              << g.receiver_state_count() << " receiver states\n";
    print_validation(g, report);
    std::cout << "full-information receiver value: " << show(top) << "\n";
    for (int i = 0; i < g.sender_count(); ++i) {
      std::cout << "sender " << i + 1 << " value under own full revelation: "
                << show(sender_value(g, i, full_info_signal(g, i))) << "\n";
    }
  }
  return 0;
}

int run_optimal(const std::string& game_name, int sender, const std::string& out_path,
                bool as_json) {
  GameSpec g = load_game(game_name);
  check_sender_index(g, sender);
  auto result = optimal_signal(g, sender - 1);
  if (!out_path.empty()) save_signal(g, result.signal, out_path);
  if (as_json) {
    json out = {{"value", result.value.str()},
                {"receiver_value", receiver_value(g, result.signal).str()},
                {"signal", signal_to_json(g, result.signal)},
                {"lp", {{"variables", result.outline.variable_count},
                        {"equalities", result.outline.equality_count},
                        {"inequalities", result.outline.inequality_count}}}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "optimal commitment value for sender " << sender << ": " << show(result.value)
              << "\n";
    std::cout << "receiver value of that signal: " << show(receiver_value(g, result.signal))
              << "\n";
    std::cout << "LP: " << result.outline.variable_count << " variables, "
              << result.outline.equality_count << " equalities, "
              << result.outline.inequality_count << " obedience inequalities\n";
    std::cout << signal_to_json(g, result.signal).dump(2) << "\n";
  }
  return 0;
}

int run_simulate(const std::string& game_name, int sender, const std::string& signal_path,
                 const std::string& out_path, bool as_json) {
  GameSpec g = load_game(game_name);
  check_sender_index(g, sender);
  Signal original = load_signal(g, signal_path);
  Signal copy = simulate(g, sender - 1, original);
  if (!out_path.empty()) save_signal(g, copy, out_path);
  if (as_json) {
    json out = {{"signal", signal_to_json(g, copy)},
                {"receiver_value", receiver_value(g, copy).str()},
                {"sender_value", sender_value(g, sender - 1, copy).str()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "sender " << sender << " replicates the signal of sender " << original.sender + 1
              << "\n";
    std::cout << "receiver value " << show(receiver_value(g, copy)) << " (original "
              << show(receiver_value(g, original)) << ")\n";
    std::cout << signal_to_json(g, copy).dump(2) << "\n";
  }
  return 0;
}

int run_improve(const std::string& game_name, int sender, const std::string& signal_path,
                const std::string& epsilon, const std::string& out_path, bool as_json) {
  GameSpec g = load_game(game_name);
  check_sender_index(g, sender);
  Signal target = load_signal(g, signal_path);
  std::optional<Rational> eps;
  if (!epsilon.empty()) eps = Rational::parse(epsilon);
  auto result = improve(g, sender - 1, target, eps);
  json out = improvement_to_json(g, result);
  out["receiver_value"] = receiver_value(g, result.signal).str();
  out["sender_value"] = sender_value(g, sender - 1, result.signal).str();
  out["target_receiver_value"] = receiver_value(g, target).str();
  out["target_sender_value"] = sender_value(g, sender - 1, target).str();
  if (!out_path.empty()) save_signal(g, result.signal, out_path);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "sender " << sender << " strictly improves on the signal of sender "
              << target.sender + 1 << "\n";
    std::cout << "receiver value " << show(receiver_value(g, target)) << " -> "
              << show(receiver_value(g, result.signal)) << "\n";
    std::cout << "sender value " << show(sender_value(g, sender - 1, target)) << " -> "
              << show(sender_value(g, sender - 1, result.signal)) << "\n";
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_check_ne(const std::string& game_name, const std::vector<std::string>& signal_paths,
                 const std::string& profile_path, bool full_info_profile,
                 std::size_t realization_bound, bool as_json) {
  GameSpec g = load_game(game_name);
  MixedProfile profile;
  if (full_info_profile) {
    PureProfile pure;
    for (int i = 0; i < g.sender_count(); ++i) pure.signals.push_back(full_info_signal(g, i));
    profile = MixedProfile::from_pure(pure);
  } else if (!profile_path.empty()) {
    profile = load_profile(g, profile_path);
  } else {
    if (static_cast<int>(signal_paths.size()) != g.sender_count()) {
      throw DomainError("check-ne needs one signal file per sender (got " +
                        std::to_string(signal_paths.size()) + ", want " +
                        std::to_string(g.sender_count()) + ") or --profile");
    }
    PureProfile pure;
    for (const auto& path : signal_paths) pure.signals.push_back(load_signal(g, path));
    for (int i = 0; i < g.sender_count(); ++i) {
      if (pure.signals[i].sender != i) {
        throw DomainError("signal file " + std::to_string(i + 1) + " belongs to sender " +
                          std::to_string(pure.signals[i].sender + 1) + ", expected sender " +
                          std::to_string(i + 1));
      }
    }
    profile = MixedProfile::from_pure(pure);
  }
  auto validation = validate_game(g);
  auto verdict = check_equilibrium(g, profile, realization_bound);

  if (as_json) {
    json out = {{"verdict", to_string(verdict.kind)},
                {"payoffs", payoffs_to_json(verdict.payoffs)},
                {"support_analysis", support_to_json(verdict.support)},
                {"assumptions_ok", validation.ok()}};
    if (verdict.witness) out["witness"] = witness_to_json(g, *verdict.witness);
    if (verdict.kind == VerdictKind::NoDeviationFound) {
      out["disclaimer"] =
          "no constructive deviation found; this does not certify an equilibrium";
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (!validation.ok()) {
      std::cout << "warning: model assumptions fail on this game\n";
      print_validation(g, validation);
    }
    std::cout << "verdict: " << to_string(verdict.kind) << "\n";
    std::cout << "receiver value " << show(verdict.payoffs.receiver_value) << "\n";
    for (int i = 0; i < g.sender_count(); ++i) {
      std::cout << "sender " << i + 1 << " payoff " << show(verdict.payoffs.sender_values[i])
                << " (tau_i " << verdict.support.tau_i[i].str() << ")\n";
    }
    if (verdict.witness) {
      const auto& w = *verdict.witness;
      std::cout << "deviation: sender " << w.deviator + 1 << " via " << to_string(w.construction)
                << ", payoff " << show(w.old_payoff) << " -> " << show(w.new_payoff) << "\n";
    }
    if (verdict.kind == VerdictKind::NoDeviationFound) {
      std::cout << "no constructive deviation found; this does not certify an equilibrium\n";
    }
  }
  return 0;
}

int run_oracle(const std::string& game_name, int sender, int resolution, std::size_t bound,
               bool as_json) {
  GameSpec g = load_game(game_name);
  check_sender_index(g, sender);
  GridSpec grid{resolution, bound};
  auto count = count_grid_signals(g, sender - 1, grid);
  auto best = brute_force_optimal_signal(g, sender - 1, grid);
  if (as_json) {
    json out = {{"resolution", resolution},
                {"candidates", count},
                {"value", best.value.str()},
                {"signal", signal_to_json(g, best.signal)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "grid resolution " << resolution << ": " << count << " candidate signals\n";
    std::cout << "best incentive-compatible value for sender " << sender << ": "
              << show(best.value) << "\n";
    std::cout << signal_to_json(g, best.signal).dump(2) << "\n";
  }
  return 0;
}

int run_examples(const std::string& name, bool as_json) {
  if (name.empty()) {
    if (as_json) {
      std::cout << json{{"builtins", builtin_names()}}.dump(2) << "\n";
    } else {
      std::cout << "builtin games:\n";
      for (const auto& n : builtin_names()) std::cout << "  " << n << "\n";
      std::cout << "try: persuade examples ecig\n";
    }
    return 0;
  }
  GameSpec g = load_game(name);
  auto report = validate_game(g);
  PureProfile full_info;
  for (int i = 0; i < g.sender_count(); ++i) full_info.signals.push_back(full_info_signal(g, i));
  auto payoffs = profile_payoffs(g, full_info);
  auto verdict = check_equilibrium(g, full_info);
  std::vector<OptimalSignalResult> solo;
  for (int i = 0; i < g.sender_count(); ++i) solo.push_back(optimal_signal(g, i));

  if (as_json) {
    json lp = json::array();
    for (int i = 0; i < g.sender_count(); ++i) {
      lp.push_back({{"sender", i + 1},
                    {"value", solo[i].value.str()},
                    {"receiver_value", receiver_value(g, solo[i].signal).str()}});
    }
    json out = {{"name", g.name},
                {"validation", validation_to_json(g, report)},
                {"full_information_profile", payoffs_to_json(payoffs)},
                {"full_information_verdict", to_string(verdict.kind)},
                {"single_sender_optimum", lp}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << g.name << "\n";
    print_validation(g, report);
    std::cout << "full-information profile: receiver " << show(payoffs.receiver_value);
    for (int i = 0; i < g.sender_count(); ++i) {
      std::cout << ", sender " << i + 1 << " " << show(payoffs.sender_values[i]);
    }
    std::cout << " [" << to_string(verdict.kind) << "]\n";
    for (int i = 0; i < g.sender_count(); ++i) {
      std::cout << "single-sender optimum for sender " << i + 1 << ": value "
                << show(solo[i].value) << ", receiver gets "
                << show(receiver_value(g, solo[i].signal)) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of competing-senders persuasion games"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string game_name, signal_path, profile_path, epsilon, out_path, builtin;
  std::vector<std::string> signal_paths;
  int sender = 1;
  int resolution = 1;
  std::size_t oracle_bound = oracle_bound_from_env();
  std::size_t realization_bound = kDefaultRealizationBound;

  auto* validate = app.add_subcommand("validate", "check the model assumptions on a game");
  validate->fallthrough();
  validate->add_option("game", game_name, "game file or builtin name")->required();

  auto* analyze = app.add_subcommand("analyze", "summarize a game or a signal");
  analyze->fallthrough();
  analyze->add_option("game", game_name)->required();
  analyze->add_option("--signal", signal_path, "signal file to analyze");

  auto* optimal = app.add_subcommand("optimal", "sender-optimal IC signal via the obedience LP");
  optimal->fallthrough();
  optimal->add_option("game", game_name)->required();
  optimal->add_option("--sender", sender, "1-based sender index")->required();
  optimal->add_option("--out", out_path, "write the signal to this file");

  auto* simulate_cmd = app.add_subcommand("simulate", "replicate another sender's signal");
  simulate_cmd->fallthrough();
  simulate_cmd->add_option("game", game_name)->required();
  simulate_cmd->add_option("--sender", sender, "the simulating sender (1-based)")->required();
  simulate_cmd->add_option("--signal", signal_path, "the signal to replicate")->required();
  simulate_cmd->add_option("--out", out_path);

  auto* improve_cmd = app.add_subcommand("improve", "strictly improve on a rival's signal");
  improve_cmd->fallthrough();
  improve_cmd->add_option("game", game_name)->required();
  improve_cmd->add_option("--sender", sender, "the deviating sender (1-based)")->required();
  improve_cmd->add_option("--signal", signal_path, "the rival signal")->required();
  improve_cmd->add_option("--epsilon", epsilon, "reroute intensity (rational); default: half the cap");
  improve_cmd->add_option("--out", out_path);

  auto* check = app.add_subcommand("check-ne", "hunt for a profitable deviation from a profile");
  check->fallthrough();
  check->add_option("game", game_name)->required();
  check->add_option("signals", signal_paths, "one signal file per sender");
  check->add_option("--profile", profile_path, "mixed-profile file instead of signal files");
  bool full_info_profile = false;
  check->add_flag("--full-info", full_info_profile,
                  "evaluate the profile where every sender fully reveals");
  check->add_option("--realization-bound", realization_bound,
                    "max product of support sizes (default 10000)");

  auto* oracle = app.add_subcommand("oracle", "brute-force grid search for the optimal IC signal");
  oracle->fallthrough();
  oracle->add_option("game", game_name)->required();
  oracle->add_option("--sender", sender)->required();
  oracle->add_option("--resolution", resolution, "row probabilities are multiples of 1/K");
  oracle->add_option("--bound", oracle_bound,
                     "candidate bound (also PERSUADE_ORACLE_BOUND; default 1000000)");

  auto* examples = app.add_subcommand("examples", "builtin games and their headline numbers");
  examples->fallthrough();
  examples->add_option("name", builtin, "builtin game name, e.g. ecig or policy(1/10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (validate->parsed()) return run_validate(game_name, as_json);
    if (analyze->parsed()) return run_analyze(game_name, signal_path, as_json);
    if (optimal->parsed()) return run_optimal(game_name, sender, out_path, as_json);
    if (simulate_cmd->parsed())
      return run_simulate(game_name, sender, signal_path, out_path, as_json);
    if (improve_cmd->parsed())
      return run_improve(game_name, sender, signal_path, epsilon, out_path, as_json);
    if (check->parsed())
      return run_check_ne(game_name, signal_paths, profile_path, full_info_profile,
                          realization_bound, as_json);
    if (oracle->parsed()) return run_oracle(game_name, sender, resolution, oracle_bound, as_json);
    if (examples->parsed()) return run_examples(builtin, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
