#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace ctopo {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// gcd of two positive rationals: the largest rational dividing both with
/// integer quotient.  gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s).
Rational ratGcd(const Rational& a, const Rational& b);

/// lcm of two positive rationals: lcm(p/q, r/s) = lcm(p*s, r*q) / (q*s).
Rational ratLcm(const Rational& a, const Rational& b);

/// Floor of a rational as an Int.
Int ratFloor(const Rational& r);

/// a mod m into [0, m) for positive m.
Rational ratMod(const Rational& a, const Rational& m);

/// Renders as "p/q", or "p" when q == 1.
std::string toString(const Rational& r);

/// Parses "p", "p/q" or a decimal "d.ddd" exactly.  Throws std::invalid_argument.
Rational parseRational(const std::string& s);

/// A rational extended with the two infinities; total order -inf < q < +inf.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::Finite), value_(0) {}
  ExtRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}
  ExtRational(int v) : kind_(Kind::Finite), value_(v) {}

  static ExtRational negInf() { return ExtRational(Kind::NegInf); }
  static ExtRational posInf() { return ExtRational(Kind::PosInf); }

  bool isFinite() const { return kind_ == Kind::Finite; }
  bool isNegInf() const { return kind_ == Kind::NegInf; }
  bool isPosInf() const { return kind_ == Kind::PosInf; }

  const Rational& value() const {
    if (!isFinite()) throw std::logic_error("ExtRational: value() on infinity");
    return value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return a < b || a == b; }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return b <= a; }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

  std::string str() const;

 private:
  explicit ExtRational(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

}  // namespace ctopo
