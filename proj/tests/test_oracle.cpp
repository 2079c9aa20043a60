#include "doctest.h"
#include "fixtures.hpp"
#include "persuasion/builtin.hpp"
#include "persuasion/errors.hpp"
#include "persuasion/optimal.hpp"
#include "persuasion/oracle.hpp"

using namespace persuasion;

namespace {

// Independent slow path: public enumerator + public evaluations.
OracleOptimum reference_optimal(const GameSpec& g, int sender, const GridSpec& grid) {
  OracleOptimum best;
  bool found = false;
  grid_signals(g, sender, grid, [&](const Signal& sig) {
    if (!is_incentive_compatible(g, sig).ok) return;
    Rational value = sender_value(g, sender, sig);
    if (!found || best.value < value) {
      found = true;
      best = {sig, value};
    }
  });
  REQUIRE(found);
  return best;
}

GameSpec aligned_single_sender_game() {
  GameSpec g;
  g.actions = {"left", "right"};
  g.receiver_states = {"x", "y"};
  g.sender_states = {{"x", "y"}};
  g.prior[{0, 0}] = Rational(2, 5);
  g.prior[{1, 1}] = Rational(3, 5);
  g.receiver_utility = {{1, 0}, {0, 1}};
  g.sender_utility = {{{1, 0}, {0, 1}}};
  g.check_structure();
  return g;
}

}  // namespace

TEST_CASE("deterministic signal counts") {
  GameSpec tiny = aligned_single_sender_game();
  int count = 0;
  enumerate_deterministic_signals(tiny, 0, 100, [&](const Signal&) { ++count; });
  CHECK(count == 4);  // 2 state pairs, 2 actions

  GameSpec ecig = ecig_game();
  count = 0;
  bool saw_full_info = false;
  Signal fi = full_info_signal(ecig, 0);
  enumerate_deterministic_signals(ecig, 0, 100, [&](const Signal& sig) {
    ++count;
    saw_full_info = saw_full_info || sig == fi;
  });
  CHECK(count == 16);
  CHECK(saw_full_info);
}

TEST_CASE("grid signal counts follow stars and bars") {
  GameSpec ecig = ecig_game();
  CHECK(count_grid_signals(ecig, 0, {1, 1000}) == 16);
  CHECK(count_grid_signals(ecig, 0, {2, 1000}) == 81);   // C(3,1)^4
  CHECK(count_grid_signals(ecig, 0, {10, 100000}) == 14641);  // 11^4

  GameSpec tiny = aligned_single_sender_game();
  CHECK(count_grid_signals(tiny, 0, {2, 1000}) == 9);

  CHECK_THROWS_AS(count_grid_signals(ecig, 0, GridSpec{10, 1000}), SizeError);
  int seen = 0;
  grid_signals(tiny, 0, {3, 1000}, [&](const Signal& sig) {
    validate_signal(tiny, sig);
    ++seen;
  });
  CHECK(seen == 16);  // C(4,1)^2
}

TEST_CASE("brute force matches the independent reference path") {
  GameSpec ecig = ecig_game();
  for (int K : {1, 2}) {
    auto fast = brute_force_optimal_signal(ecig, 0, {K, 100000});
    auto slow = reference_optimal(ecig, 0, {K, 100000});
    CHECK(fast.value == slow.value);
    CHECK(fast.signal == slow.signal);
  }
}

TEST_CASE("brute force on the e-cig game across resolutions") {
  GameSpec g = ecig_game();
  auto lp = optimal_signal(g, 0);

  auto k1 = brute_force_optimal_signal(g, 0, {1, 100000});
  CHECK(k1.value == Rational(7, 10));
  CHECK(is_incentive_compatible(g, k1.signal).ok);

  // The LP optimum makes the regulator indifferent after every message, so
  // its realized sender value collapses under lowest-index tie-breaking.
  // Grid maximizers therefore stop strictly short of 9/10 at every
  // resolution: the best value with strict obedience and step 1/K rows is
  // 7/10 + (3/10) * (largest multiple of 1/K strictly below 2/3).
  auto k3 = brute_force_optimal_signal(g, 0, {3, 100000});
  CHECK(k3.value == Rational(4, 5));
  auto k6 = brute_force_optimal_signal(g, 0, {6, 100000});
  CHECK(k6.value == Rational(17, 20));
  auto k10 = brute_force_optimal_signal(g, 0, {10, 100000});
  CHECK(k10.value == Rational(22, 25));
  CHECK(k10.value < lp.value);

  // Under the obedient reading (the receiver follows the recommendation,
  // which is what the LP objective scores), the K=3 grid does attain the
  // LP optimum: its rows need thirds and nothing finer.
  auto follow_value = [&](const Signal& sig) {
    auto mass = action_player_mass(g, sig, 0);
    Rational v;
    for (int a = 0; a < g.action_count(); ++a) {
      for (int s = 0; s < g.sender_state_count(0); ++s) {
        v += mass[a][s] * g.sender_u(0, a, s);
      }
    }
    return v;
  };
  Rational best_follow_k3, best_follow_k10;
  grid_signals(g, 0, {3, 100000}, [&](const Signal& sig) {
    if (!is_incentive_compatible(g, sig).ok) return;
    best_follow_k3 = max(best_follow_k3, follow_value(sig));
  });
  grid_signals(g, 0, {10, 100000}, [&](const Signal& sig) {
    if (!is_incentive_compatible(g, sig).ok) return;
    best_follow_k10 = max(best_follow_k10, follow_value(sig));
  });
  CHECK(best_follow_k3 == Rational(9, 10));
  CHECK(best_follow_k10 == Rational(22, 25));  // thirds are off the K=10 grid

  // Nested grids can only improve.
  auto k2 = brute_force_optimal_signal(g, 0, {2, 100000});
  CHECK(k1.value <= k2.value);
  auto k4 = brute_force_optimal_signal(g, 0, {4, 100000});
  CHECK(k2.value <= k4.value);
  for (const auto& r : {k1, k2, k3, k4, k6, k10}) CHECK(r.value <= lp.value);
}

TEST_CASE("aligned games are maximized by full revelation at every resolution") {
  GameSpec g = aligned_single_sender_game();
  Signal fi = full_info_signal(g, 0);
  Rational fi_value = sender_value(g, 0, fi);
  for (int K : {1, 2, 4}) {
    auto best = brute_force_optimal_signal(g, 0, {K, 100000});
    CHECK(best.value == fi_value);
    CHECK(best.value == Rational(1));
  }
}

TEST_CASE("no grid deviation beats joint full revelation in the e-cig game") {
  GameSpec g = ecig_game();
  PureProfile profile{{full_info_signal(g, 0), full_info_signal(g, 1)}};
  for (int K : {1, 2, 3}) {
    auto best = brute_force_best_deviation(g, profile, 0, {K, 100000});
    CHECK(best.payoff == Rational(2, 5));  // the status quo payoff; no strict gain
  }
}

TEST_CASE("a single active sender reduces the deviation oracle to the optimum search") {
  GameSpec g = aligned_single_sender_game();
  PureProfile profile{{fixtures::constant_signal(g, 0, 0)}};
  for (int K : {1, 3}) {
    auto deviation = brute_force_best_deviation(g, profile, 0, {K, 100000});
    auto optimum = brute_force_optimal_signal(g, 0, {K, 100000});
    CHECK(deviation.payoff == optimum.value);
  }
}

TEST_CASE("the grid confirms the refuted policy profile" * doctest::timeout(120)) {
  GameSpec g = policy_game(Rational(1, 10));
  Signal sig = fixtures::policy_truth_or_push(g, 0);
  PureProfile profile{{sig, simulate(g, 1, sig)}};  // receiver values tie at 11/20
  Rational current = profile_payoffs(g, profile).sender_values[0];
  auto witness = find_profitable_deviation(g, profile, 0);
  REQUIRE(witness.has_value());

  // The constructive witness lands on small-denominator rows, so a modest
  // grid already contains strictly profitable deviations.
  auto best = brute_force_best_deviation(g, profile, 0, {20, 250000});
  CHECK(current < best.payoff);
}
