#include "ctopo/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ctopo {

Rational ratGcd(const Rational& a, const Rational& b) {
  Int p = numer(a), q = denom(a), r = numer(b), s = denom(b);
  Int g = boost::multiprecision::gcd(p * s, r * q);
  return Rational(g, q * s);
}

Rational ratLcm(const Rational& a, const Rational& b) {
  Int p = numer(a), q = denom(a), r = numer(b), s = denom(b);
  Int l = boost::multiprecision::lcm(p * s, r * q);
  return Rational(l, q * s);
}

Int ratFloor(const Rational& r) {
  Int n = numer(r), d = denom(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Rational ratMod(const Rational& a, const Rational& m) {
  Rational q(ratFloor(a / m));
  return a - q * m;
}

std::string toString(const Rational& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

Rational parseRational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty()) throw std::invalid_argument("bad decimal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    if (head.empty()) head = "0";
    Int scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    Rational r = Rational(Int(head)) + Rational(Int(tail), scale);
    return neg ? -r : r;
  }
  return Rational(Int(s));
}

std::string ExtRational::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return toString(value_);
  }
}

}  // namespace ctopo
