#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctopo/discrete_set.hpp"
#include "ctopo/rational.hpp"
#include "ctopo/simple_set.hpp"

namespace ctopo {

enum class Cardinality { Finite, CountablyInfinite, Uncountable };

/// An exactly-representable subset of R:
///
///   S = (Q intersect qIntervals, minus qMinus) union qPlus
///       union (irrationals intersect iIntervals)
///
/// kept in a unique canonical form, so equality is structural:
///   - qIntervals has interval components only; isolated rationals live in
///     qPlus, and a puncture at a closed endpoint is stored as an open flag;
///   - qMinus lies strictly inside qIntervals and is disjoint from qPlus;
///   - qPlus is disjoint from the qIntervals-minus-qMinus trace, and a plus
///     point at an open endpoint is stored as a closed flag;
///   - adjacent qIntervals components that meet in a point belonging to
///     neither are merged, with the meeting point recorded in qMinus;
///   - iIntervals components are open intervals, merged across shared
///     (necessarily rational) endpoints.
class RealSet {
 public:
  RealSet() = default;

  static RealSet empty() { return RealSet(); }
  static RealSet full();
  static RealSet rationals();
  static RealSet irrationals();
  static RealSet integers();
  static RealSet naturals();
  static RealSet interval(ExtRational lo, ExtRational hi, bool lc, bool hc);
  static RealSet point(Rational q);
  static RealSet points(std::vector<Rational> pts);
  static RealSet progression(Progression p);
  /// Rational trace of a union of intervals: Q intersect s.
  static RealSet qTrace(SimpleSet s);
  /// Irrational trace of a union of intervals.
  static RealSet iTrace(SimpleSet s);
  /// Canonicalizes arbitrary part data.
  static RealSet make(SimpleSet q, DiscreteSet m, DiscreteSet p, SimpleSet i);

  const SimpleSet& qIntervals() const { return q_; }
  const DiscreteSet& qMinus() const { return m_; }
  const DiscreteSet& qPlus() const { return p_; }
  const SimpleSet& iIntervals() const { return i_; }

  bool isEmpty() const;
  bool isFull() const;
  bool containsRational(const Rational& q) const;
  Cardinality cardinality() const;
  bool isCountable() const { return cardinality() != Cardinality::Uncountable; }
  bool isFinite() const { return cardinality() == Cardinality::Finite; }
  /// Number of elements when the set is finite.
  std::optional<std::size_t> finiteCount() const;
  /// The sole member if the set is a singleton.  Representable singletons are
  /// always rational.
  std::optional<Rational> onlyPoint() const;

  RealSet complement() const;
  RealSet unionWith(const RealSet& o) const;
  RealSet intersect(const RealSet& o) const;
  RealSet minus(const RealSet& o) const { return intersect(o.complement()); }
  bool subsetOf(const RealSet& o) const { return minus(o).isEmpty(); }

  /// Image { slope*x + offset : x in S }, slope != 0.  Exact: affine maps
  /// preserve rationality both ways.
  RealSet affine(const Rational& slope, const Rational& offset) const;

  friend bool operator==(const RealSet&, const RealSet&) = default;

  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> ratSteps() const;
  std::vector<Rational> ratBreakpoints() const;

  SimpleSet q_;
  DiscreteSet m_;
  DiscreteSet p_;
  SimpleSet i_;
};

}  // namespace ctopo
