#pragma once

#include <string>

#include "ctopo/real_set.hpp"

namespace ctopo {

enum class TopologyKind { Usual, ParticularPoint, ExcludedSet, Cocountable, OverlappingInterval };

struct ClassifyResult {
  bool isOpen = false;
  bool isClosed = false;
};

/// One of five concrete topologies:
///   usual              the standard topology on R
///   particularPoint(p) open = empty or contains p, on R
///   excludedSet(E)     open = disjoint from E or all of R
///   cocountable        open = empty or countable complement, on R
///   overlappingInterval  on X=[-1,1], generated by [-1,b), b>0 and (a,1], a<0;
///                        the opens are exactly the intervals containing 0 plus
///                        the empty set and X
/// All operators take and return RealSets contained in the universe and throw
/// std::domain_error otherwise.
class Topology {
 public:
  static Topology usual();
  static Topology particularPoint(Rational p);
  static Topology excludedSet(RealSet e);
  static Topology cocountable();
  static Topology overlappingInterval();

  TopologyKind kind() const { return kind_; }
  const RealSet& universe() const { return universe_; }
  const Rational& particular() const { return particular_; }
  const RealSet& excluded() const { return excluded_; }
  std::string name() const;

  RealSet interior(const RealSet& s) const;
  /// By duality: universe minus interior(universe minus s).
  RealSet closure(const RealSet& s) const;
  /// closure(s) minus interior(s).
  RealSet frontier(const RealSet& s) const;
  /// Limit points of s.
  RealSet derivedSet(const RealSet& s) const;
  ClassifyResult classify(const RealSet& s) const;

 private:
  Topology() = default;
  void checkArg(const RealSet& s) const;

  TopologyKind kind_ = TopologyKind::Usual;
  RealSet universe_;
  Rational particular_ = 0;
  RealSet excluded_;
};

}  // namespace ctopo
