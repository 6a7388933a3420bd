#include "ctopo/maps.hpp"

#include <stdexcept>

namespace ctopo {
namespace {

RealSet pieceDomain(const AffinePiece& p) {
  return RealSet::interval(p.lo, p.hi, p.loClosed, p.hiClosed);
}

}  // namespace

PiecewiseAffineMap::PiecewiseAffineMap(std::vector<AffinePiece> pieces)
    : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieceDomain(pieces_[i]).isEmpty()) {
      throw std::invalid_argument("empty piece domain");
    }
    if (i > 0) {
      const AffinePiece& a = pieces_[i - 1];
      const AffinePiece& b = pieces_[i];
      const bool ordered =
          a.hi < b.lo || (a.hi == b.lo && !(a.hiClosed && b.loClosed));
      if (!ordered) {
        throw std::invalid_argument(
            "piece domains must be disjoint and ascending");
      }
    }
  }
}

PiecewiseAffineMap PiecewiseAffineMap::identity() {
  return PiecewiseAffineMap({AffinePiece{ExtRational::negInf(),
                                         ExtRational::posInf(), false, false,
                                         Rational(1), Rational(0)}});
}

PiecewiseAffineMap PiecewiseAffineMap::constant(Rational value) {
  return PiecewiseAffineMap({AffinePiece{ExtRational::negInf(),
                                         ExtRational::posInf(), false, false,
                                         Rational(0), std::move(value)}});
}

RealSet PiecewiseAffineMap::domain() const {
  RealSet d;
  for (const AffinePiece& p : pieces_) d = d.unionWith(pieceDomain(p));
  return d;
}

RealSet preimage(const PiecewiseAffineMap& h, const RealSet& s) {
  RealSet out;
  for (const AffinePiece& p : h.pieces()) {
    if (p.slope == 0) {
      // A constant piece lands in s entirely or not at all.
      if (s.containsRational(p.offset)) out = out.unionWith(pieceDomain(p));
    } else {
      const RealSet inv = s.affine(Rational(1) / p.slope, -p.offset / p.slope);
      out = out.unionWith(inv.intersect(pieceDomain(p)));
    }
  }
  return out;
}

RealSet imageOfSet(const PiecewiseAffineMap& h, const RealSet& s) {
  RealSet out;
  for (const AffinePiece& p : h.pieces()) {
    const RealSet slice = s.intersect(pieceDomain(p));
    if (slice.isEmpty()) continue;
    out = out.unionWith(p.slope == 0 ? RealSet::point(p.offset)
                                     : slice.affine(p.slope, p.offset));
  }
  return out;
}

ContinuityVerdict continuityVerdict(const PiecewiseAffineMap& h,
                                    const Topology& domT, const Topology& codT,
                                    IdealKind ideal,
                                    const std::vector<RealSet>& family) {
  for (const RealSet& u : family) {
    if (!codT.classify(u).isOpen) {
      throw std::invalid_argument("family member is not open in the codomain");
    }
  }
  for (const RealSet& u : family) {
    const RealSet pre = preimage(h, u);
    if (!domT.classify(pre).isOpen) {
      return {ContinuityStatus::NotContinuous, u, pre};
    }
    if (!idealClassify(domT, ideal, pre).isIdealOpen) {
      return {ContinuityStatus::NotIdealContinuous, u, pre};
    }
  }
  return {ContinuityStatus::PassedOnFamily, std::nullopt, std::nullopt};
}

ContinuityVerdict builtinIdentityVerdict(const Topology& t, IdealKind ideal) {
  // The identity is I-continuous exactly when every (representable) open set
  // of the driver is I-open; each branch either establishes that or returns
  // an open witness whose frontier is not small.
  auto refuted = [&](RealSet witness) -> ContinuityVerdict {
    return {ContinuityStatus::NotIdealContinuous, witness, witness};
  };
  switch (t.kind()) {
    case TopologyKind::Usual:
      // Representable opens are finite unions of intervals, whose frontiers
      // are finite sets of endpoints: small for the countable ideal, but not
      // for the finite ideal (the open set R minus Z has frontier Z).
      if (ideal == IdealKind::Countable) {
        return {ContinuityStatus::IdealContinuous, std::nullopt, std::nullopt};
      }
      return refuted(RealSet::integers().complement());
    case TopologyKind::ParticularPoint:
      // Every nonempty open set contains the particular point and is dense,
      // so its frontier is the whole complement; the open singleton {p} has
      // uncountable frontier.
      return refuted(RealSet::point(t.particular()));
    case TopologyKind::ExcludedSet: {
      // A proper open set is disjoint from the excluded set E and has
      // frontier exactly E.
      if (isSmall(t.excluded(), ideal)) {
        return {ContinuityStatus::IdealContinuous, std::nullopt, std::nullopt};
      }
      return refuted(t.excluded().complement());
    }
    case TopologyKind::Cocountable:
      // Nonempty opens are co-countable and dense, with countable frontier.
      if (ideal == IdealKind::Countable) {
        return {ContinuityStatus::IdealContinuous, std::nullopt, std::nullopt};
      }
      return refuted(RealSet::integers().complement());
    case TopologyKind::OverlappingInterval:
      // [-1,1/2) is open but its closure is the whole space, leaving the
      // uncountable frontier [1/2,1].
      return refuted(RealSet::interval(-1, Rational(1) / 2, true, false));
  }
  throw std::logic_error("unknown topology kind");
}

CoverAnalysis analyzeCover(const Cover& c, IdealKind ideal) {
  CoverAnalysis out;
  RealSet all, goodUnion;
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    const RealSet& m = c.members[i];
    if (!c.space.classify(m).isOpen) {
      throw std::invalid_argument("cover member is not open");
    }
    all = all.unionWith(m);
    if (idealClassify(c.space, ideal, m).isIdealOpen) {
      out.idealOpenMembers.push_back(i);
      goodUnion = goodUnion.unionWith(m);
    }
  }
  out.isCover = all == c.space.universe();
  out.hasIdealOpenFiniteSubcover = goodUnion == c.space.universe();
  return out;
}

bool finiteMapCheck(const FiniteSpace& sp1, const FiniteSpace& sp2,
                    const FiniteIdeal& idDom, const FiniteIdeal& idCod,
                    const std::vector<int>& f, MapProperty property) {
  if (static_cast<int>(f.size()) != sp1.n()) {
    throw std::invalid_argument("map must be total on the domain points");
  }
  for (int y : f) {
    if (y < 0 || y >= sp2.n()) {
      throw std::invalid_argument("map value outside the codomain");
    }
  }
  auto image = [&](Bits s) {
    Bits out = 0;
    for (int x = 0; x < sp1.n(); ++x) {
      if (s & (Bits{1} << x)) out |= Bits{1} << f[x];
    }
    return out;
  };
  auto pre = [&](Bits s) {
    Bits out = 0;
    for (int x = 0; x < sp1.n(); ++x) {
      if (s & (Bits{1} << f[x])) out |= Bits{1} << x;
    }
    return out;
  };
  auto continuous = [&]() {
    for (Bits u : sp2.opens()) {
      if (!bfIsIdealOpen(sp1, idDom, pre(u))) return false;
    }
    return true;
  };
  switch (property) {
    case MapProperty::IdealContinuous:
      return continuous();
    case MapProperty::IdealOpenMap:
      for (Bits u : sp1.opens()) {
        if (!bfIsIdealOpen(sp2, idCod, image(u))) return false;
      }
      return true;
    case MapProperty::IdealClosedMap:
      for (Bits u : sp1.opens()) {
        if (!bfIsIdealClosed(sp2, idCod, image(sp1.universe() & ~u))) {
          return false;
        }
      }
      return true;
    case MapProperty::IdealHomeomorphism: {
      if (sp1.n() != sp2.n() || image(sp1.universe()) != sp2.universe()) {
        return false;  // not a bijection
      }
      if (!continuous()) return false;
      // Continuity of the inverse: images of domain opens are I-open.
      for (Bits u : sp1.opens()) {
        if (!bfIsIdealOpen(sp2, idCod, image(u))) return false;
      }
      return true;
    }
    case MapProperty::PreservesIdealCompact: {
      const bool onto = image(sp1.universe()) == sp2.universe();
      if (!onto || !bfIsIdealCompact(sp1, idDom)) return true;
      return bfIsIdealCompact(sp2, idCod);
    }
  }
  throw std::logic_error("unknown map property");
}

bool finiteMapCheck(const FiniteSpace& sp1, const FiniteSpace& sp2,
                    const FiniteIdeal& id, const std::vector<int>& f,
                    MapProperty property) {
  if (sp1.n() != sp2.n()) {
    throw std::invalid_argument(
        "single-ideal check requires equal universe sizes");
  }
  return finiteMapCheck(sp1, sp2, id, id, f, property);
}

}  // namespace ctopo
