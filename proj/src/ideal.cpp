#include "ctopo/ideal.hpp"

namespace ctopo {

namespace {

// The ideal-open family of the overlapping-interval topology, largest first.
// A nonempty open (a,b)-style set has closure X, so its frontier is X minus
// itself; that is small only when at most the endpoints are missing.
std::vector<RealSet> overlapIdealOpens() {
  return {
      RealSet::interval(-1, 1, true, true),    // X
      RealSet::interval(-1, 1, true, false),   // [-1,1)
      RealSet::interval(-1, 1, false, true),   // (-1,1]
      RealSet::interval(-1, 1, false, false),  // (-1,1)
  };
}

}  // namespace

IdealClassifyResult idealClassify(const Topology& t, IdealKind k, const RealSet& s) {
  ClassifyResult c = t.classify(s);
  bool smallFrontier = (c.isOpen || c.isClosed) && isSmall(t.frontier(s), k);
  return IdealClassifyResult{c.isOpen && smallFrontier, c.isClosed && smallFrontier};
}

IdealInteriorResult idealInteriorEx(const Topology& t, IdealKind k, const RealSet& s) {
  RealSet out;
  switch (t.kind()) {
    case TopologyKind::Usual:
      // every open interval is ideal-open (frontier has at most two points),
      // so the union of ideal-open subsets is the whole interior
      out = t.interior(s);
      break;
    case TopologyKind::ParticularPoint:
      // nonempty ideal-opens are the sets containing p with small complement
      out = s.containsRational(t.particular()) && isSmall(s.complement(), k) ? s
                                                                             : RealSet::empty();
      break;
    case TopologyKind::ExcludedSet:
      // frontier of a nonempty proper open is E itself
      if (isSmall(t.excluded(), k)) {
        out = t.interior(s);
      } else {
        out = s.isFull() ? s : RealSet::empty();
      }
      break;
    case TopologyKind::Cocountable:
      // an open set here has small frontier iff its complement is in the ideal
      out = isSmall(s.complement(), k) ? s : RealSet::empty();
      break;
    case TopologyKind::OverlappingInterval: {
      // the family is finite and totally covered by the ordered scan: if two
      // incomparable members both fit, their union X was caught first
      t.classify(s);  // universe check
      for (const auto& v : overlapIdealOpens()) {
        if (v.subsetOf(s)) {
          out = v;
          break;
        }
      }
      break;
    }
  }
  return IdealInteriorResult{out, idealClassify(t, k, out).isIdealOpen};
}

RealSet idealInterior(const Topology& t, IdealKind k, const RealSet& s) {
  return idealInteriorEx(t, k, s).set;
}

RealSet idealClosure(const Topology& t, IdealKind k, const RealSet& s) {
  return t.universe().minus(idealInterior(t, k, t.universe().minus(s)));
}

RealSet idealDerived(const Topology& t, IdealKind k, const RealSet& s) {
  switch (t.kind()) {
    case TopologyKind::Usual:
      // ideal-open neighbourhoods contain open intervals and open intervals
      // are ideal-open, so the classical limit points are exactly right
      return t.derivedSet(s);
    case TopologyKind::ParticularPoint: {
      RealSet p = RealSet::point(t.particular());
      if (s.containsRational(t.particular())) {
        // every x != p has p in each of its neighbourhoods; p itself escapes
        // through R minus (s minus p) when that set is co-small
        return isSmall(s.minus(p), k) ? t.universe().minus(p) : t.universe();
      }
      return isSmall(s, k) ? RealSet::empty() : t.universe();
    }
    case TopologyKind::ExcludedSet:
      if (isSmall(t.excluded(), k)) return t.derivedSet(s);
      // otherwise the only nonempty ideal-open set is X itself
      if (s.isEmpty()) return RealSet::empty();
      if (auto pt = s.onlyPoint()) return t.universe().minus(RealSet::point(*pt));
      return t.universe();
    case TopologyKind::Cocountable:
      return isSmall(s, k) ? RealSet::empty() : t.universe();
    case TopologyKind::OverlappingInterval: {
      // x fails to be a limit point iff some family member isolates it
      t.classify(s);
      RealSet bad;
      for (const auto& v : overlapIdealOpens()) {
        RealSet hit = v.intersect(s);
        if (hit.isEmpty()) {
          bad = bad.unionWith(v);
        } else if (auto pt = hit.onlyPoint()) {
          bad = bad.unionWith(RealSet::point(*pt));
        }
      }
      return t.universe().minus(bad);
    }
  }
  return RealSet::empty();
}

RealSet idealBorder(const Topology& t, IdealKind k, const RealSet& s) {
  return s.minus(idealInterior(t, k, s));
}

RealSet idealFrontier(const Topology& t, IdealKind k, const RealSet& s) {
  return idealClosure(t, k, s).minus(idealInterior(t, k, s));
}

RealSet idealExterior(const Topology& t, IdealKind k, const RealSet& s) {
  return idealInterior(t, k, t.universe().minus(s));
}

Decomposition decomposition(const Topology& t, IdealKind k, const RealSet& s) {
  return Decomposition{idealInterior(t, k, s), idealExterior(t, k, s), idealFrontier(t, k, s)};
}

}  // namespace ctopo
