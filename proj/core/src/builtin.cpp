#include "persuasion/builtin.hpp"

#include "persuasion/errors.hpp"

namespace persuasion {

GameSpec policy_game(const Rational& unbiased_prob) {
  if (unbiased_prob.sign() < 0 || Rational(1) < unbiased_prob) {
    throw DomainError("policy game needs an unbiased probability in [0,1]");
  }
  GameSpec game;
  game.name = "policy(" + unbiased_prob.str() + ")";
  game.actions = {"implement", "status-quo"};
  game.receiver_states = {"beneficial", "harmful"};
  // Expert states combine the expert's type with the policy's benefit; the
  // benefit coordinate always agrees with the receiver state under the prior.
  const std::vector<std::string> expert_states = {
      "biased-beneficial", "biased-harmful", "unbiased-beneficial", "unbiased-harmful"};
  game.sender_states = {expert_states, expert_states};

  const Rational eps = unbiased_prob;
  const Rational half(1, 2);
  const Rational type_prob[2] = {Rational(1) - eps, eps};  // biased, unbiased
  for (int t1 = 0; t1 < 2; ++t1) {
    for (int t2 = 0; t2 < 2; ++t2) {
      for (int w = 0; w < 2; ++w) {  // 0 = beneficial, 1 = harmful
        Rational p = type_prob[t1] * type_prob[t2] * half;
        if (p.is_zero()) continue;
        game.prior[{2 * t1 + w, 2 * t2 + w, w}] = p;
      }
    }
  }

  // Receiver: wants implementation exactly when the policy is beneficial.
  game.receiver_utility = {{1, 0}, {0, 1}};
  // Experts: the biased type always wants implementation; the unbiased type
  // matches the receiver's preference.
  std::vector<std::vector<Rational>> expert_u = {
      // implement: biased-ben, biased-harm, unbiased-ben, unbiased-harm
      {1, 1, 1, 0},
      // status-quo
      {0, 0, 0, 1},
  };
  game.sender_utility = {expert_u, expert_u};
  game.check_structure();
  return game;
}

GameSpec ecig_game() {
  GameSpec game;
  game.name = "ecig";
  game.actions = {"impose", "status-quo"};
  game.receiver_states = {"Y", "O"};
  game.sender_states = {{"H", "U"}, {"M", "W"}};

  auto p = [](int num) { return Rational(num, 100); };
  // Tuples are (expert-1 state, expert-2 state, regulator state).
  game.prior[{0, 0, 0}] = p(18);  // (H, M, Y)
  game.prior[{0, 0, 1}] = p(8);   // (H, M, O)
  game.prior[{1, 0, 0}] = p(12);  // (U, M, Y)
  game.prior[{1, 0, 1}] = p(12);  // (U, M, O)
  game.prior[{0, 1, 0}] = p(12);  // (H, W, Y)
  game.prior[{0, 1, 1}] = p(12);  // (H, W, O)
  game.prior[{1, 1, 0}] = p(8);   // (U, W, Y)
  game.prior[{1, 1, 1}] = p(18);  // (U, W, O)

  game.receiver_utility = {{1, 0}, {0, 1}};          // impose iff Y
  game.sender_utility = {
      {{0, 1}, {1, 0}},  // expert 1: impose iff U
      {{0, 1}, {1, 0}},  // expert 2: impose iff W
  };
  game.check_structure();
  return game;
}

std::optional<GameSpec> make_builtin(const std::string& name) {
  if (name == "ecig") return ecig_game();
  const std::string prefix = "policy(";
  if (name.size() > prefix.size() + 1 && name.rfind(prefix, 0) == 0 && name.back() == ')') {
    Rational eps = Rational::parse(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    return policy_game(eps);
  }
  return std::nullopt;
}

std::vector<std::string> builtin_names() { return {"ecig", "policy(<eps>)"}; }

}  // namespace persuasion
