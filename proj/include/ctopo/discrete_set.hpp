#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ctopo/rational.hpp"
#include "ctopo/simple_set.hpp"

namespace ctopo {

/// An arithmetic progression of rationals with positive step.
///   Full: { anchor + k*step : k in Z },  anchor normalized into [0, step)
///   Up:   { anchor + k*step : k >= 0 }
///   Down: { anchor - k*step : k >= 0 }
/// Bounded restrictions are never stored; they materialize as points.
struct Progression {
  enum class Kind { Full, Up, Down };
  Rational anchor;
  Rational step;
  Kind kind = Kind::Full;

  bool contains(const Rational& q) const;
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// A countable-discrete set of rationals: finitely many progressions plus a
/// finite set of isolated points, in a unique normal form (no point lies in a
/// progression, no progression overlaps another, rays are maximal and carry
/// the coarsest step).
class DiscreteSet {
 public:
  DiscreteSet() = default;

  static DiscreteSet empty() { return DiscreteSet(); }
  static DiscreteSet ofPoints(std::vector<Rational> pts);
  static DiscreteSet ofProgression(Progression p);
  /// Canonicalizes an arbitrary finite union of progressions and points.
  static DiscreteSet fromComponents(std::vector<Progression> progs, std::vector<Rational> pts);

  const std::vector<Progression>& progressions() const { return progs_; }
  const std::vector<Rational>& points() const { return points_; }

  bool isEmpty() const { return progs_.empty() && points_.empty(); }
  bool hasProgression() const { return !progs_.empty(); }
  bool contains(const Rational& q) const;

  DiscreteSet unionWith(const DiscreteSet& o) const;
  DiscreteSet intersect(const DiscreteSet& o) const;
  DiscreteSet minus(const DiscreteSet& o) const;

  /// Members lying in the given SimpleSet.
  DiscreteSet restrictTo(const SimpleSet& s) const;
  /// Members outside the given SimpleSet.
  DiscreteSet minusSimple(const SimpleSet& s) const;

  /// Keeps the members satisfying `pred`.  The predicate must be eventually
  /// periodic: beyond every breakpoint its value on a progression with step d
  /// repeats with period lcm(d, predSteps...).
  DiscreteSet filter(const std::function<bool(const Rational&)>& pred,
                     const std::vector<Rational>& predSteps,
                     const std::vector<Rational>& predBreakpoints) const;

  /// Steps and anchor/point breakpoints, for building filter arguments.
  std::vector<Rational> steps() const;
  std::vector<Rational> breakpoints() const;

  /// Affine image { slope*x + offset : x in S }, slope != 0.
  DiscreteSet affine(const Rational& slope, const Rational& offset) const;

  friend bool operator==(const DiscreteSet&, const DiscreteSet&) = default;

  std::string str() const;

 private:
  std::vector<Progression> progs_;
  std::vector<Rational> points_;
};

}  // namespace ctopo
