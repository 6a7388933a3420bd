#pragma once

#include "ctopo/real_set.hpp"
#include "ctopo/topology.hpp"

namespace ctopo {

/// The smallness ideal: finite sets, or countable sets.
enum class IdealKind { Finite, Countable };

inline bool isSmall(const RealSet& s, IdealKind k) {
  return k == IdealKind::Finite ? s.isFinite() : s.isCountable();
}

struct IdealClassifyResult {
  bool isIdealOpen = false;
  bool isIdealClosed = false;
};

/// The union of all ideal-open subsets, plus whether that union is itself
/// ideal-open (it need not be: in the usual topology with the finite ideal,
/// the union below R minus Z is R minus Z, whose frontier Z is infinite).
struct IdealInteriorResult {
  RealSet set;
  bool unionIsIdealOpen = false;
};

struct Decomposition {
  RealSet interiorPart, exteriorPart, frontierPart;
};

/// A set is ideal-open (ideal-closed) when it is open (closed) and its
/// frontier lies in the ideal.
IdealClassifyResult idealClassify(const Topology& t, IdealKind k, const RealSet& s);

IdealInteriorResult idealInteriorEx(const Topology& t, IdealKind k, const RealSet& s);
RealSet idealInterior(const Topology& t, IdealKind k, const RealSet& s);
/// universe minus idealInterior(universe minus s).
RealSet idealClosure(const Topology& t, IdealKind k, const RealSet& s);
/// Points whose every ideal-open neighbourhood meets s elsewhere.
RealSet idealDerived(const Topology& t, IdealKind k, const RealSet& s);
/// s minus idealInterior(s).
RealSet idealBorder(const Topology& t, IdealKind k, const RealSet& s);
/// idealClosure(s) minus idealInterior(s).
RealSet idealFrontier(const Topology& t, IdealKind k, const RealSet& s);
/// idealInterior(universe minus s).
RealSet idealExterior(const Topology& t, IdealKind k, const RealSet& s);
/// (idealInterior, idealExterior, idealFrontier): a partition of the universe.
Decomposition decomposition(const Topology& t, IdealKind k, const RealSet& s);

}  // namespace ctopo
