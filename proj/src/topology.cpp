#include "ctopo/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ctopo {

namespace {

// Interior under the usual topology.  A point is interior iff both traces
// cover a two-sided neighbourhood; the punctures themselves stay removed but
// do not disturb their neighbours (qMinus is closed and discrete).
RealSet usualInterior(const RealSet& s) {
  SimpleSet o = s.qIntervals().interiorLine().intersect(s.iIntervals().interiorLine());
  return RealSet::make(o, s.qMinus().restrictTo(o), {}, o);
}

// Does s contain points arbitrarily close to x from the given side?  Only the
// interval parts matter: discrete parts never accumulate.
bool approaches(const RealSet& s, const Rational& x, bool fromLeft) {
  ExtRational ex(x);
  auto scan = [&](const SimpleSet& ss) {
    for (const auto& c : ss.components()) {
      if (c.isPoint()) continue;
      if (fromLeft ? (c.lo < ex && c.hi >= ex) : (c.lo <= ex && c.hi > ex)) return true;
    }
    return false;
  };
  return scan(s.qIntervals()) || scan(s.iIntervals());
}

RealSet closedSpan(const Rational& a, const Rational& b) {
  return RealSet::interval(ExtRational(a), ExtRational(b), true, true);
}

}  // namespace

Topology Topology::usual() {
  Topology t;
  t.kind_ = TopologyKind::Usual;
  t.universe_ = RealSet::full();
  return t;
}

Topology Topology::particularPoint(Rational p) {
  Topology t;
  t.kind_ = TopologyKind::ParticularPoint;
  t.universe_ = RealSet::full();
  t.particular_ = std::move(p);
  return t;
}

Topology Topology::excludedSet(RealSet e) {
  if (e.isFull()) throw std::invalid_argument("excluded set must not be the whole universe");
  Topology t;
  t.kind_ = TopologyKind::ExcludedSet;
  t.universe_ = RealSet::full();
  t.excluded_ = std::move(e);
  return t;
}

Topology Topology::cocountable() {
  Topology t;
  t.kind_ = TopologyKind::Cocountable;
  t.universe_ = RealSet::full();
  return t;
}

Topology Topology::overlappingInterval() {
  Topology t;
  t.kind_ = TopologyKind::OverlappingInterval;
  t.universe_ = RealSet::interval(-1, 1, true, true);
  return t;
}

std::string Topology::name() const {
  switch (kind_) {
    case TopologyKind::Usual:
      return "usual";
    case TopologyKind::ParticularPoint:
      return "particular:" + toString(particular_);
    case TopologyKind::ExcludedSet:
      return "excluded:" + excluded_.str();
    case TopologyKind::Cocountable:
      return "cocountable";
    case TopologyKind::OverlappingInterval:
      return "overlap";
  }
  return "?";
}

void Topology::checkArg(const RealSet& s) const {
  if (!s.subsetOf(universe_)) {
    throw std::domain_error("set is not contained in the universe of " + name());
  }
}

RealSet Topology::interior(const RealSet& s) const {
  checkArg(s);
  switch (kind_) {
    case TopologyKind::Usual:
      return usualInterior(s);
    case TopologyKind::ParticularPoint:
      // the nonempty opens are exactly the sets containing p
      return s.containsRational(particular_) ? s : RealSet::empty();
    case TopologyKind::ExcludedSet:
      return s.isFull() ? s : s.minus(excluded_);
    case TopologyKind::Cocountable:
      return s.complement().isCountable() ? s : RealSet::empty();
    case TopologyKind::OverlappingInterval: {
      // Every nonempty open contains 0, so the interior is the widest
      // interval around 0 inside s (endpoint membership decides whether -1/1
      // join in).  Padding with the outside of [-1,1] lets the usual interior
      // do the interval hunting.
      if (!s.containsRational(0)) return RealSet::empty();
      RealSet u = usualInterior(s.unionWith(universe_.complement()));
      if (!u.containsRational(0)) return RealSet::empty();
      const Component* comp = nullptr;
      for (const auto& c : u.qIntervals().components()) {
        if (c.contains(0)) comp = &c;
      }
      if (!comp) return RealSet::empty();
      ExtRational lo = comp->lo, hi = comp->hi;
      for (const auto& m : u.qMinus().points()) {
        ExtRational em(m);
        if (!comp->contains(m)) continue;
        if (m < 0) lo = std::max(lo, em);
        if (m > 0) hi = std::min(hi, em);
      }
      bool loIn = lo < ExtRational(-1);
      bool hiIn = hi > ExtRational(1);
      return RealSet::interval(loIn ? ExtRational(-1) : lo, hiIn ? ExtRational(1) : hi, loIn,
                               hiIn);
    }
  }
  return RealSet::empty();
}

RealSet Topology::closure(const RealSet& s) const {
  checkArg(s);
  return universe_.minus(interior(universe_.minus(s)));
}

RealSet Topology::frontier(const RealSet& s) const { return closure(s).minus(interior(s)); }

RealSet Topology::derivedSet(const RealSet& s) const {
  checkArg(s);
  switch (kind_) {
    case TopologyKind::Usual: {
      // Only the interval parts accumulate; punctures and discrete parts are
      // invisible to limit points.
      SimpleSet c =
          s.qIntervals().intervalHull().unionWith(s.iIntervals().intervalHull()).closureLine();
      return RealSet::make(c, {}, {}, c);
    }
    case TopologyKind::ParticularPoint:
      // {x,p} is the smallest neighbourhood of x != p; {p} itself is open
      return s.containsRational(particular_) ? universe_.minus(RealSet::point(particular_))
                                             : RealSet::empty();
    case TopologyKind::ExcludedSet: {
      // points outside E are open singletons; a point of E only has X
      if (s.isEmpty()) return RealSet::empty();
      if (auto pt = s.onlyPoint()) return excluded_.minus(RealSet::point(*pt));
      return excluded_;
    }
    case TopologyKind::Cocountable:
      // removing one point from an uncountable set never makes it countable
      return s.isCountable() ? RealSet::empty() : universe_;
    case TopologyKind::OverlappingInterval: {
      // Every open around x>0 contains (a,b) with a<0<x<b, so x is a limit
      // point iff s meets [0,x] away from x or accumulates onto 0 from the
      // left or onto x from the right; mirrored for x<0.  The verdict is
      // constant between consecutive structural breakpoints.
      auto inD = [&](const Rational& x) {
        RealSet rest = s.minus(RealSet::point(x));
        if (x > 0) {
          return !rest.intersect(closedSpan(0, x)).isEmpty() || approaches(s, 0, true) ||
                 approaches(s, x, false);
        }
        if (x < 0) {
          return !rest.intersect(closedSpan(x, 0)).isEmpty() || approaches(s, 0, false) ||
                 approaches(s, x, true);
        }
        return approaches(s, 0, true) || approaches(s, 0, false);
      };
      std::set<Rational> bps{-1, 0, 1};
      auto addEnds = [&](const SimpleSet& ss) {
        for (const auto& c : ss.components()) {
          if (c.lo.isFinite()) bps.insert(c.lo.value());
          if (c.hi.isFinite()) bps.insert(c.hi.value());
        }
      };
      addEnds(s.qIntervals());
      addEnds(s.iIntervals());
      for (const auto& m : s.qMinus().points()) bps.insert(m);
      for (const auto& p : s.qPlus().points()) bps.insert(p);
      std::vector<Rational> b(bps.begin(), bps.end());
      RealSet d;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (inD(b[i])) d = d.unionWith(RealSet::point(b[i]));
        if (i + 1 < b.size()) {
          Rational mid = (b[i] + b[i + 1]) / 2;
          if (inD(mid)) {
            d = d.unionWith(
                RealSet::interval(ExtRational(b[i]), ExtRational(b[i + 1]), false, false));
          }
        }
      }
      return d;
    }
  }
  return RealSet::empty();
}

ClassifyResult Topology::classify(const RealSet& s) const {
  checkArg(s);
  return ClassifyResult{interior(s) == s, closure(s) == s};
}

}  // namespace ctopo
