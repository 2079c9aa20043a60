#include "persuasion/rational.hpp"

#include <cctype>
#include <ostream>

#include "persuasion/errors.hpp"

namespace persuasion {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty integer in rational '" + std::string(whole) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad digit '" + std::string(1, c) + "' in rational '" + std::string(whole) + "'");
    }
  }
  // Leading zeros would read as an octal prefix ("08" is rejected outright).
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  // The backend insists on a positive denominator.
  if (den.sign() < 0) {
    value_ = boost::multiprecision::cpp_rational(-num, -den);
  } else {
    value_ = boost::multiprecision::cpp_rational(num, den);
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = parse_integer(s.substr(0, slash), text);
    BigInt den = parse_integer(s.substr(slash + 1), text);
    if (den.is_zero()) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    Rational r(num, den);
    return negative ? -r : r;
  }

  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("bad rational '" + std::string(text) + "'");
    BigInt whole = ip.empty() ? BigInt(0) : parse_integer(ip, text);
    BigInt frac = fp.empty() ? BigInt(0) : parse_integer(fp, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Rational r(whole * scale + frac, scale);
    return negative ? -r : r;
  }

  Rational r(parse_integer(s, text), BigInt(1));
  return negative ? -r : r;
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += "/";
    out += denominator().str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace persuasion
