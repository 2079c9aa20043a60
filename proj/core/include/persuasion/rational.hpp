#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace persuasion {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Every probability and utility in the library is one
// of these; nothing is ever rounded. Values are kept in canonical form
// (reduced, denominator > 0), so equality is plain structural equality.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}                // NOLINT: implicit by design
  Rational(long long n) : value_(n) {}          // NOLINT
  Rational(const BigInt& n) : value_(n) {}      // NOLINT
  Rational(long long num, long long den);
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p/q", an integer, or a terminating decimal such as "0.18".
  // Decimals convert exactly (0.18 -> 9/50). Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  // Canonical form: "p" when the denominator is 1, else "p/q".
  std::string str() const;
  // Decimal approximation for display only; never used in computation.
  double approx() const { return value_.convert_to<double>(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace persuasion
