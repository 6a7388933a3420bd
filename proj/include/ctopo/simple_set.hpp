#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctopo/rational.hpp"

namespace ctopo {

/// One connected piece of a SimpleSet: a point (lo == hi, both flags closed)
/// or an interval with lo < hi.  Closed flags are forbidden on infinite ends.
struct Component {
  ExtRational lo, hi;
  bool loClosed = false, hiClosed = false;

  bool isPoint() const { return lo == hi; }

  static Component point(Rational p) {
    return Component{ExtRational(p), ExtRational(p), true, true};
  }
  static Component interval(ExtRational lo, ExtRational hi, bool lc, bool hc) {
    return Component{std::move(lo), std::move(hi), lc, hc};
  }

  bool contains(const Rational& q) const;
  friend bool operator==(const Component&, const Component&) = default;
};

/// A finite union of intervals and points on the real line, kept in canonical
/// form: components pairwise disjoint, sorted by infimum, none mergeable with
/// its neighbour.
class SimpleSet {
 public:
  SimpleSet() = default;
  explicit SimpleSet(std::vector<Component> comps);

  static SimpleSet empty() { return SimpleSet(); }
  static SimpleSet full();
  static SimpleSet point(Rational p) { return SimpleSet({Component::point(std::move(p))}); }
  static SimpleSet interval(ExtRational lo, ExtRational hi, bool lc, bool hc);

  const std::vector<Component>& components() const { return comps_; }
  bool isEmpty() const { return comps_.empty(); }
  bool isFull() const;

  bool contains(const Rational& q) const;

  SimpleSet unionWith(const SimpleSet& o) const;
  SimpleSet intersect(const SimpleSet& o) const;
  SimpleSet complement() const;
  SimpleSet minus(const SimpleSet& o) const { return intersect(o.complement()); }
  bool subsetOf(const SimpleSet& o) const { return minus(o).isEmpty(); }

  /// Interior as a subset of the line: intervals opened, points dropped.
  SimpleSet interiorLine() const;
  /// Closure as a subset of the line: finite interval ends closed.
  SimpleSet closureLine() const;
  /// Interval components only, points dropped.
  SimpleSet intervalHull() const;

  friend bool operator==(const SimpleSet&, const SimpleSet&) = default;

  std::string str() const;

 private:
  void normalize();
  std::vector<Component> comps_;
};

}  // namespace ctopo
