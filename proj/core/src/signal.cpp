#include "persuasion/signal.hpp"

#include "persuasion/errors.hpp"

namespace persuasion {

const std::vector<Rational>& Signal::row(const StatePair& pair) const {
  auto it = rows.find(pair);
  if (it == rows.end()) throw DomainError("signal has no row for the requested state pair");
  return it->second;
}

void validate_signal(const GameSpec& game, const Signal& sig) {
  if (sig.sender < 0 || sig.sender >= game.sender_count()) {
    throw DomainError("signal sender index out of range");
  }
  auto marginal = marginal_prior(game, sig.sender);
  if (sig.rows.size() != marginal.size()) {
    throw DomainError("signal must have one row per positive-probability state pair");
  }
  for (const auto& [pair, dist] : sig.rows) {
    if (!marginal.count(pair)) {
      throw DomainError("signal row on a zero-probability state pair");
    }
    if (static_cast<int>(dist.size()) != game.action_count()) {
      throw DomainError("signal row arity != action count");
    }
    Rational sum;
    for (const auto& p : dist) {
      if (p.sign() < 0 || Rational(1) < p) throw DomainError("signal row entry outside [0,1]");
      sum += p;
    }
    if (sum != Rational(1)) throw DomainError("signal row sums to " + sum.str() + ", expected 1");
  }
}

Rational Belief::total() const {
  Rational sum;
  for (const auto& [tuple, p] : distribution) sum += p;
  return sum;
}

std::vector<Rational> Belief::receiver_marginal(const GameSpec& game) const {
  std::vector<Rational> out(game.receiver_state_count());
  const int n = game.sender_count();
  for (const auto& [tuple, p] : distribution) out[tuple[n]] += p;
  return out;
}

std::vector<Rational> Belief::sender_marginal(const GameSpec& game, int k) const {
  std::vector<Rational> out(game.sender_state_count(k));
  for (const auto& [tuple, p] : distribution) out[tuple[k]] += p;
  return out;
}

std::map<StatePair, Rational> Belief::pair_marginal(const GameSpec& game, int k) const {
  std::map<StatePair, Rational> out;
  const int n = game.sender_count();
  for (const auto& [tuple, p] : distribution) {
    if (p.is_zero()) continue;
    out[{tuple[k], tuple[n]}] += p;
  }
  return out;
}

}  // namespace persuasion
