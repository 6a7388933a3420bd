#pragma once

// Piecewise-affine maps on the real line with exact preimages and images,
// continuity verdicts against the five topology drivers, finite-cover
// analysis, and the finite-model bridge for function properties.

#include <optional>
#include <vector>

#include "ctopo/finite_space.hpp"
#include "ctopo/ideal.hpp"
#include "ctopo/real_set.hpp"
#include "ctopo/topology.hpp"

namespace ctopo {

// One affine piece h(x) = slope*x + offset on an interval domain.
struct AffinePiece {
  ExtRational lo, hi;
  bool loClosed = false, hiClosed = false;
  Rational slope, offset;
};

// A total or partial map on R given by finitely many affine pieces with
// pairwise disjoint interval domains, kept in ascending order.  Rational
// slopes and offsets keep preimages and images representable: rationals map
// to rationals, and for nonzero slope irrationals map to irrationals.
class PiecewiseAffineMap {
 public:
  // Throws std::invalid_argument when a piece domain is empty or the domains
  // are not disjoint and ascending.
  explicit PiecewiseAffineMap(std::vector<AffinePiece> pieces);

  static PiecewiseAffineMap identity();
  static PiecewiseAffineMap constant(Rational value);

  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  RealSet domain() const;

 private:
  std::vector<AffinePiece> pieces_;
};

// Exact preimage { x in dom(h) : h(x) in s }.
RealSet preimage(const PiecewiseAffineMap& h, const RealSet& s);

// Exact image { h(x) : x in s, x in dom(h) }.
RealSet imageOfSet(const PiecewiseAffineMap& h, const RealSet& s);

enum class ContinuityStatus {
  Continuous,
  IdealContinuous,
  NotContinuous,
  NotIdealContinuous,
  PassedOnFamily,
};

struct ContinuityVerdict {
  ContinuityStatus status;
  // The open set whose preimage violates the property, with that preimage.
  std::optional<RealSet> witnessOpen;
  std::optional<RealSet> witnessPreimage;
};

// Checks h against the given family of codomain-open sets: returns
// NotContinuous or NotIdealContinuous with a witness when some member's
// preimage fails, and PassedOnFamily otherwise (refutation-complete relative
// to the family, not a proof).  Throws std::invalid_argument when a family
// member is not open in the codomain.
ContinuityVerdict continuityVerdict(const PiecewiseAffineMap& h,
                                    const Topology& domT, const Topology& codT,
                                    IdealKind ideal,
                                    const std::vector<RealSet>& family);

// Exact decision for the identity map id:(X,t)->(X,t) over the representable
// fragment: IdealContinuous when every representable open set of the driver
// is I-open, NotIdealContinuous with a stored witness otherwise.
ContinuityVerdict builtinIdentityVerdict(const Topology& t, IdealKind ideal);

struct Cover {
  std::vector<RealSet> members;
  Topology space;
};

struct CoverAnalysis {
  bool isCover = false;
  // Indices into members of the I-open members.
  std::vector<std::size_t> idealOpenMembers;
  bool hasIdealOpenFiniteSubcover = false;
};

// Checks whether the members cover the universe, which members are I-open,
// and whether the I-open members alone still cover (for a finite cover this
// is exactly the existence of an I-open finite subcover).  Throws
// std::invalid_argument when a member is not open.
CoverAnalysis analyzeCover(const Cover& c, IdealKind ideal);

// ---- Finite-model bridge ----

enum class MapProperty {
  IdealContinuous,
  IdealOpenMap,
  IdealClosedMap,
  IdealHomeomorphism,
  PreservesIdealCompact,
};

// Exact decision by enumeration for f : points(sp1) -> points(sp2), with
// idDom governing I-openness in the domain and idCod in the codomain.
// PreservesIdealCompact holds when the hypothesis fails (f not onto or sp1
// not I-compact) or sp2 is I-compact.  Throws std::invalid_argument when f
// is not total on sp1's points or maps outside sp2.
bool finiteMapCheck(const FiniteSpace& sp1, const FiniteSpace& sp2,
                    const FiniteIdeal& idDom, const FiniteIdeal& idCod,
                    const std::vector<int>& f, MapProperty property);

// Same ideal on both sides; requires sp1 and sp2 to share the universe size.
bool finiteMapCheck(const FiniteSpace& sp1, const FiniteSpace& sp2,
                    const FiniteIdeal& id, const std::vector<int>& f,
                    MapProperty property);

}  // namespace ctopo
