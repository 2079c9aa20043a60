#include "doctest.h"
#include "fixtures.hpp"
#include "persuasion/builtin.hpp"
#include "persuasion/equilibrium.hpp"
#include "persuasion/errors.hpp"
#include "persuasion/optimal.hpp"

using namespace persuasion;
using fixtures::constant_signal;
using fixtures::policy_truth_or_push;

TEST_CASE("the receiver's interim choice") {
  GameSpec g = ecig_game();
  Signal fi1 = full_info_signal(g, 0);
  Signal fi2 = full_info_signal(g, 1);
  Signal flat = constant_signal(g, 1, 0);

  auto tie = decide(g, {fi1, fi2});
  CHECK(tie.chosen == std::vector<int>{0, 1});

  auto strict = decide(g, {fi1, flat});
  CHECK(strict.chosen == std::vector<int>{0});
  CHECK(strict.receiver_values[1] == Rational(1, 2));

  // The commitment-optimal signal is worthless to the regulator here, so
  // full revelation by the other expert wins outright.
  auto lp = optimal_signal(g, 0);
  auto vs_lp = decide(g, {lp.signal, fi2});
  CHECK(vs_lp.chosen == std::vector<int>{1});
  CHECK(vs_lp.receiver_values[0] == Rational(1, 2));
}

TEST_CASE("decide is invariant under positive affine receiver rescaling") {
  GameSpec g = ecig_game();
  auto lp = optimal_signal(g, 0);
  std::vector<std::vector<Signal>> profiles = {
      {lp.signal, full_info_signal(g, 1)},
      {constant_signal(g, 0, 0), constant_signal(g, 1, 1)},
      {full_info_signal(g, 0), constant_signal(g, 1, 0)},
  };
  GameSpec scaled = g;
  for (auto& row : scaled.receiver_utility) {
    for (auto& u : row) u = Rational(3, 2) * u - Rational(7);
  }
  for (const auto& signals : profiles) {
    CHECK(decide(g, signals).chosen == decide(scaled, signals).chosen);
  }
}

TEST_CASE("payoffs of the joint full-information profile") {
  GameSpec ecig = ecig_game();
  auto p1 = profile_payoffs(ecig, {{full_info_signal(ecig, 0), full_info_signal(ecig, 1)}});
  CHECK(p1.receiver_value == Rational(1));
  CHECK(p1.sender_values == std::vector<Rational>{Rational(2, 5), Rational(2, 5)});

  GameSpec policy = policy_game(Rational(1, 10));
  auto p2 = profile_payoffs(policy, {{full_info_signal(policy, 0), full_info_signal(policy, 1)}});
  CHECK(p2.receiver_value == Rational(1));
  // 1/2 + eps/2 with eps = 1/10
  CHECK(p2.sender_values == std::vector<Rational>{Rational(11, 20), Rational(11, 20)});
}

TEST_CASE("asymmetric profiles pay the unique argmax signal") {
  GameSpec g = ecig_game();
  Signal fi = full_info_signal(g, 0);
  Signal flat = constant_signal(g, 1, 0);
  auto p = profile_payoffs(g, {{fi, flat}});
  CHECK(p.receiver_value == Rational(1));
  CHECK(p.sender_values[0] == sender_value(g, 0, fi));
  CHECK(p.sender_values[1] == sender_value(g, 1, fi));
  REQUIRE(p.chosen_sets.size() == 1);
  CHECK(p.chosen_sets[0].chosen == std::vector<int>{0});
}

TEST_CASE("mixed profiles agree with pure ones on point masses") {
  GameSpec g = policy_game(Rational(1, 10));
  PureProfile pure{{policy_truth_or_push(g, 0), full_info_signal(g, 1)}};
  auto direct = profile_payoffs(g, pure);
  auto mixed = mixed_profile_payoffs(g, MixedProfile::from_pure(pure));
  CHECK(direct.receiver_value == mixed.receiver_value);
  CHECK(direct.sender_values == mixed.sender_values);
}

TEST_CASE("mixing an uninformative option does not disturb a full-info rival") {
  GameSpec g = ecig_game();
  MixedProfile profile;
  profile.strategies.push_back({{constant_signal(g, 0, 0), Rational(1, 2)},
                                {full_info_signal(g, 0), Rational(1, 2)}});
  profile.strategies.push_back({{full_info_signal(g, 1), Rational(1)}});
  auto p = mixed_profile_payoffs(g, profile);
  CHECK(p.receiver_value == Rational(1));
  CHECK(p.sender_values == std::vector<Rational>{Rational(2, 5), Rational(2, 5)});
  CHECK(p.chosen_sets.size() == 2);

  auto support = support_analysis(profile, g);
  CHECK(support.tau_i[0] == Rational(1, 2));
  CHECK(support.tau_i[1] == Rational(1));
  CHECK(support.tau == Rational(1));
  REQUIRE(support.never_chosen.size() == 1);
  CHECK(support.never_chosen[0] == std::pair<int, int>{0, 0});
}

TEST_CASE("mixed strategy validation") {
  GameSpec g = ecig_game();
  MixedProfile bad;
  bad.strategies.push_back({{constant_signal(g, 0, 0), Rational(1, 2)}});
  bad.strategies.push_back({{full_info_signal(g, 1), Rational(1)}});
  CHECK_THROWS_AS(mixed_profile_payoffs(g, bad), DomainError);

  MixedProfile big;
  big.strategies.push_back({{constant_signal(g, 0, 0), Rational(1, 2)},
                            {full_info_signal(g, 0), Rational(1, 2)}});
  big.strategies.push_back({{full_info_signal(g, 1), Rational(1, 2)},
                            {constant_signal(g, 1, 1), Rational(1, 2)}});
  CHECK_THROWS_AS(mixed_profile_payoffs(g, big, 3), SizeError);
}

TEST_CASE("support analysis of a pure profile") {
  GameSpec g = ecig_game();
  auto lp = optimal_signal(g, 0);
  MixedProfile profile = MixedProfile::from_pure({{lp.signal, full_info_signal(g, 1)}});
  auto support = support_analysis(profile, g);
  CHECK(support.receiver_values[0] == std::vector<Rational>{Rational(1, 2)});
  CHECK(support.receiver_values[1] == std::vector<Rational>{Rational(1)});
  CHECK(support.tau == Rational(1));
  CHECK(support.never_chosen == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("deviation search on the symmetric push-or-truth profile") {
  // Both experts play the single-expert optimum. Improving on the rival's
  // signal is not enough here: the deviator would give up the half-time
  // choice of his own, better-for-him signal. The profitable deviation is
  // his own signal lightly mixed with full revelation.
  GameSpec g = policy_game(Rational(1, 10));
  PureProfile profile{{policy_truth_or_push(g, 0), policy_truth_or_push(g, 1)}};
  auto payoffs = profile_payoffs(g, profile);
  CHECK(payoffs.sender_values[0] == Rational(191, 200));

  auto witness = find_profitable_deviation(g, profile, 0);
  REQUIRE(witness.has_value());
  CHECK(witness->construction == DeviationKind::EpsMix);
  CHECK(witness->old_payoff == Rational(191, 200));
  CHECK(witness->new_payoff == Rational(311, 320));  // own mix at eps = 1/16
  CHECK(witness->new_payoff > witness->old_payoff);

  // The witness replays exactly.
  PureProfile deviated = profile;
  deviated.signals[0] = witness->new_signal;
  CHECK(profile_payoffs(g, deviated).sender_values[0] == witness->new_payoff);

  // And it convinces even a pessimistic deviator: the receiver strictly
  // prefers the new signal, so the adversarial choice set is {deviator}.
  CHECK(pessimistic_payoff(g, profile, 0, witness->new_signal) == witness->new_payoff);

  auto verdict = check_equilibrium(g, profile);
  CHECK(verdict.kind == VerdictKind::Refuted);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->deviator == 0);

  // The same search succeeds for the other expert by symmetry.
  auto witness2 = find_profitable_deviation(g, profile, 1);
  REQUIRE(witness2.has_value());
  CHECK(witness2->new_payoff == Rational(311, 320));
}

TEST_CASE("deviation search on the e-cig commitment-vs-babble profile") {
  GameSpec g = ecig_game();
  auto lp = optimal_signal(g, 0);
  PureProfile profile{{lp.signal, constant_signal(g, 1, 0)}};

  // Expert 2 simulates and improves on expert 1's commitment optimum.
  auto witness2 = find_profitable_deviation(g, profile, 1);
  REQUIRE(witness2.has_value());
  CHECK(witness2->construction == DeviationKind::ImproveOnChosen);
  CHECK(witness2->old_payoff == Rational(1, 2));
  CHECK(witness2->new_payoff == Rational(14, 25));

  // Expert 1 can improve on the babbling rival as well.
  auto witness1 = find_profitable_deviation(g, profile, 0);
  REQUIRE(witness1.has_value());
  CHECK(witness1->construction == DeviationKind::ImproveOnChosen);
  CHECK(witness1->old_payoff == Rational(1, 2));
  CHECK(witness1->new_payoff == Rational(3, 5));

  auto verdict = check_equilibrium(g, profile);
  CHECK(verdict.kind == VerdictKind::Refuted);
  CHECK(verdict.witness->deviator == 0);
  CHECK(pessimistic_payoff(g, profile, 0, verdict.witness->new_signal) ==
        verdict.witness->new_payoff);
}

TEST_CASE("refutation of a genuinely mixed profile") {
  // Sender 1 hedges between babbling and his commitment optimum; sender 2
  // babbles outright. Both supports put positive choice probability on
  // signals that pool states, so a deviation must exist, and it replays.
  GameSpec g = ecig_game();
  auto lp = optimal_signal(g, 0);
  MixedProfile profile;
  profile.strategies.push_back(
      {{constant_signal(g, 0, 0), Rational(1, 2)}, {lp.signal, Rational(1, 2)}});
  profile.strategies.push_back({{constant_signal(g, 1, 1), Rational(1)}});

  auto support = support_analysis(profile, g);
  CHECK(support.tau == Rational(1, 2));  // every support signal pools
  CHECK(support.never_chosen.empty());

  auto verdict = check_equilibrium(g, profile);
  REQUIRE(verdict.kind == VerdictKind::Refuted);
  REQUIRE(verdict.witness.has_value());
  const auto& w = *verdict.witness;
  CHECK(w.new_payoff > w.old_payoff);

  MixedProfile deviated = profile;
  deviated.strategies[w.deviator] = {{w.new_signal, Rational(1)}};
  CHECK(mixed_profile_payoffs(g, deviated).sender_values[w.deviator] == w.new_payoff);
  CHECK(mixed_profile_payoffs(g, profile).sender_values[w.deviator] == w.old_payoff);
}

TEST_CASE("joint full information admits no constructive deviation") {
  GameSpec g = ecig_game();
  PureProfile profile{{full_info_signal(g, 0), full_info_signal(g, 1)}};
  CHECK(!find_profitable_deviation(g, profile, 0).has_value());
  CHECK(!find_profitable_deviation(g, profile, 1).has_value());
  auto verdict = check_equilibrium(g, profile);
  CHECK(verdict.kind == VerdictKind::FullyInformativeConsistent);
  CHECK(!verdict.witness.has_value());
}

TEST_CASE("the epsilon-zero knife edge is not refuted") {
  GameSpec g = policy_game(Rational(0));
  CHECK(!validate_game(g).assumption2_ok);
  PureProfile push{{constant_signal(g, 0, 0), constant_signal(g, 1, 0)}};
  auto payoffs = profile_payoffs(g, push);
  CHECK(payoffs.sender_values == std::vector<Rational>{Rational(1), Rational(1)});
  auto verdict = check_equilibrium(g, push);
  CHECK(verdict.kind == VerdictKind::NoDeviationFound);
}

TEST_CASE("pessimistic payoffs") {
  GameSpec g = ecig_game();
  Signal fi1 = full_info_signal(g, 0);
  Signal fi2 = full_info_signal(g, 1);

  // Unique argmax: the adversary has no room.
  PureProfile vs_flat{{constant_signal(g, 0, 0), constant_signal(g, 1, 0)}};
  CHECK(pessimistic_payoff(g, vs_flat, 0, fi1) == Rational(2, 5));

  // A tie the deviator values asymmetrically: adversary picks the worse one.
  GameSpec policy = policy_game(Rational(1, 10));
  Signal own = policy_truth_or_push(policy, 0);
  Signal rivals = policy_truth_or_push(policy, 1);
  PureProfile sym{{own, rivals}};
  CHECK(pessimistic_payoff(policy, sym, 0, own) == Rational(91, 100));
  // The uniform rule would average 1 and 91/100 instead.
  CHECK(profile_payoffs(policy, sym).sender_values[0] == Rational(191, 200));

  // Lemma-style deviations force the chosen set to the deviator alone.
  auto improved = improve(policy, 1, own);
  CHECK(pessimistic_payoff(policy, sym, 1, improved.signal) == Rational(373, 400));
}
