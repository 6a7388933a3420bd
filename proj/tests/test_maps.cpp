#include <doctest.h>

#include <stdexcept>

#include "ctopo/maps.hpp"

using namespace ctopo;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n) / d; }

RealSet iv(ExtRational lo, ExtRational hi, bool lc, bool hc) {
  return RealSet::interval(std::move(lo), std::move(hi), lc, hc);
}

PiecewiseAffineMap doubling() {
  return PiecewiseAffineMap({AffinePiece{ExtRational::negInf(),
                                         ExtRational::posInf(), false, false,
                                         rat(2), rat(0)}});
}

PiecewiseAffineMap stepMap() {
  // 0 on (-inf,0), 1 on [0,inf)
  return PiecewiseAffineMap(
      {AffinePiece{ExtRational::negInf(), ExtRational(0), false, false, rat(0),
                   rat(0)},
       AffinePiece{ExtRational(0), ExtRational::posInf(), true, false, rat(0),
                   rat(1)}});
}

}  // namespace

TEST_CASE("piecewise map construction validates domains") {
  CHECK_NOTHROW(stepMap());
  // Empty piece domain.
  CHECK_THROWS_AS(PiecewiseAffineMap({AffinePiece{
                      ExtRational(1), ExtRational(0), true, true, rat(1),
                      rat(0)}}),
                  std::invalid_argument);
  // Overlapping domains: [0,2] then [1,3].
  CHECK_THROWS_AS(
      PiecewiseAffineMap(
          {AffinePiece{ExtRational(0), ExtRational(2), true, true, rat(1),
                       rat(0)},
           AffinePiece{ExtRational(1), ExtRational(3), true, true, rat(1),
                       rat(0)}}),
      std::invalid_argument);
  // Touching at a point claimed by both pieces.
  CHECK_THROWS_AS(
      PiecewiseAffineMap(
          {AffinePiece{ExtRational(0), ExtRational(1), true, true, rat(1),
                       rat(0)},
           AffinePiece{ExtRational(1), ExtRational(2), true, true, rat(1),
                       rat(0)}}),
      std::invalid_argument);
  // Touching with only one side closed is fine.
  CHECK_NOTHROW(PiecewiseAffineMap(
      {AffinePiece{ExtRational(0), ExtRational(1), true, false, rat(1),
                   rat(0)},
       AffinePiece{ExtRational(1), ExtRational(2), true, true, rat(1),
                   rat(0)}}));
}

TEST_CASE("preimages are exact") {
  const auto id = PiecewiseAffineMap::identity();
  CHECK(preimage(id, RealSet::rationals()) == RealSet::rationals());
  CHECK(preimage(doubling(), iv(0, 2, false, false)) == iv(0, 1, false, false));
  // Constant map: all or nothing.
  const auto c = PiecewiseAffineMap::constant(rat(3));
  CHECK(preimage(c, iv(0, 5, false, false)) == RealSet::full());
  CHECK(preimage(c, iv(10, 20, false, false)) == RealSet::empty());
  // Step map: preimage of an interval containing 1 but not 0.
  CHECK(preimage(stepMap(), iv(rat(3, 4), 2, false, false)) ==
        iv(0, ExtRational::posInf(), true, false));
  // Irrational trace maps exactly through a rational affine map.
  CHECK(preimage(doubling(), RealSet::irrationals()) ==
        RealSet::irrationals());
}

TEST_CASE("images are exact") {
  const auto id = PiecewiseAffineMap::identity();
  CHECK(imageOfSet(id, RealSet::integers()) == RealSet::integers());
  CHECK(imageOfSet(doubling(), iv(0, 1, false, false)) ==
        iv(0, 2, false, false));
  const auto c = PiecewiseAffineMap::constant(rat(0));
  CHECK(imageOfSet(c, RealSet::rationals()) == RealSet::point(rat(0)));
  CHECK(imageOfSet(c, RealSet::empty()) == RealSet::empty());
  // Step map image of R is {0,1}.
  CHECK(imageOfSet(stepMap(), RealSet::full()) ==
        RealSet::points({rat(0), rat(1)}));
}

TEST_CASE("preimage is a boolean algebra homomorphism") {
  const auto h = stepMap();
  const RealSet a = iv(rat(1, 2), 3, true, false);
  const RealSet b = RealSet::rationals();
  CHECK(preimage(h, a.unionWith(b)) ==
        preimage(h, a).unionWith(preimage(h, b)));
  CHECK(preimage(h, a.intersect(b)) ==
        preimage(h, a).intersect(preimage(h, b)));
  CHECK(preimage(h, a.complement()) ==
        preimage(h, RealSet::full()).minus(preimage(h, a)));
}

TEST_CASE("image and preimage adjunction inclusions") {
  const auto h = doubling();
  const RealSet s = iv(0, 1, true, true);
  CHECK(s.subsetOf(preimage(h, imageOfSet(h, s))));
  CHECK(imageOfSet(h, preimage(h, s)).subsetOf(s));
}

TEST_CASE("family continuity verdicts reproduce the identity-map examples") {
  const auto id = PiecewiseAffineMap::identity();

  SUBCASE("identity on the irrational-excluded topology is not I-continuous") {
    const Topology t = Topology::excludedSet(RealSet::irrationals());
    const auto v = continuityVerdict(id, t, t, IdealKind::Countable,
                                     {RealSet::rationals()});
    CHECK(v.status == ContinuityStatus::NotIdealContinuous);
    REQUIRE(v.witnessOpen.has_value());
    CHECK(*v.witnessOpen == RealSet::rationals());
    CHECK(*v.witnessPreimage == RealSet::rationals());
  }

  SUBCASE("identity on the cocountable topology is not F-continuous") {
    const Topology t = Topology::cocountable();
    const auto v = continuityVerdict(id, t, t, IdealKind::Finite,
                                     {RealSet::integers().complement()});
    CHECK(v.status == ContinuityStatus::NotIdealContinuous);
    REQUIRE(v.witnessOpen.has_value());
    CHECK(*v.witnessOpen == RealSet::integers().complement());
  }

  SUBCASE("identity on the cocountable topology passes for C-continuity") {
    const Topology t = Topology::cocountable();
    const auto v = continuityVerdict(id, t, t, IdealKind::Countable,
                                     {RealSet::integers().complement(),
                                      RealSet::rationals().complement()});
    CHECK(v.status == ContinuityStatus::PassedOnFamily);
  }
}

TEST_CASE("the step map is refuted as plainly discontinuous") {
  const Topology u = Topology::usual();
  const auto v = continuityVerdict(stepMap(), u, u, IdealKind::Countable,
                                   {iv(rat(3, 4), 2, false, false)});
  CHECK(v.status == ContinuityStatus::NotContinuous);
  REQUIRE(v.witnessPreimage.has_value());
  CHECK(*v.witnessPreimage == iv(0, ExtRational::posInf(), true, false));
}

TEST_CASE("non-open family members are rejected") {
  const Topology u = Topology::usual();
  CHECK_THROWS_AS(continuityVerdict(PiecewiseAffineMap::identity(), u, u,
                                    IdealKind::Countable,
                                    {iv(0, 1, true, true)}),
                  std::invalid_argument);
}

TEST_CASE("builtin identity verdicts") {
  using K = IdealKind;
  auto status = [](const Topology& t, K k) {
    return builtinIdentityVerdict(t, k).status;
  };

  const Topology usual = Topology::usual();
  CHECK(status(usual, K::Countable) == ContinuityStatus::IdealContinuous);
  CHECK(status(usual, K::Finite) == ContinuityStatus::NotIdealContinuous);

  const Topology exI = Topology::excludedSet(RealSet::irrationals());
  CHECK(status(exI, K::Countable) == ContinuityStatus::NotIdealContinuous);
  CHECK(builtinIdentityVerdict(exI, K::Countable).witnessOpen ==
        RealSet::rationals());

  const Topology exQ = Topology::excludedSet(RealSet::rationals());
  CHECK(status(exQ, K::Countable) == ContinuityStatus::IdealContinuous);
  CHECK(status(exQ, K::Finite) == ContinuityStatus::NotIdealContinuous);

  const Topology coc = Topology::cocountable();
  CHECK(status(coc, K::Countable) == ContinuityStatus::IdealContinuous);
  CHECK(status(coc, K::Finite) == ContinuityStatus::NotIdealContinuous);
  CHECK(builtinIdentityVerdict(coc, K::Finite).witnessOpen ==
        RealSet::integers().complement());

  const Topology pp = Topology::particularPoint(rat(1));
  CHECK(status(pp, K::Countable) == ContinuityStatus::NotIdealContinuous);
  CHECK(status(pp, K::Finite) == ContinuityStatus::NotIdealContinuous);

  const Topology ov = Topology::overlappingInterval();
  CHECK(status(ov, K::Countable) == ContinuityStatus::NotIdealContinuous);
  CHECK(status(ov, K::Finite) == ContinuityStatus::NotIdealContinuous);
}

TEST_CASE("builtin verdict witnesses re-evaluate to genuine violations") {
  const Topology drivers[] = {
      Topology::usual(), Topology::particularPoint(rat(1)),
      Topology::excludedSet(RealSet::irrationals()), Topology::cocountable(),
      Topology::overlappingInterval()};
  for (const Topology& t : drivers) {
    for (IdealKind k : {IdealKind::Finite, IdealKind::Countable}) {
      const auto v = builtinIdentityVerdict(t, k);
      if (v.status == ContinuityStatus::NotIdealContinuous) {
        REQUIRE(v.witnessOpen.has_value());
        CHECK(t.classify(*v.witnessOpen).isOpen);
        CHECK_FALSE(idealClassify(t, k, *v.witnessOpen).isIdealOpen);
      }
    }
  }
}

TEST_CASE("finite-ideal identity continuity implies countable-ideal") {
  const Topology drivers[] = {
      Topology::usual(), Topology::particularPoint(rat(1)),
      Topology::excludedSet(RealSet::irrationals()),
      Topology::excludedSet(RealSet::rationals()), Topology::cocountable(),
      Topology::overlappingInterval()};
  for (const Topology& t : drivers) {
    if (builtinIdentityVerdict(t, IdealKind::Finite).status ==
        ContinuityStatus::IdealContinuous) {
      CHECK(builtinIdentityVerdict(t, IdealKind::Countable).status ==
            ContinuityStatus::IdealContinuous);
    }
  }
}

TEST_CASE("cover analysis on the overlapping-interval space") {
  const Topology ov = Topology::overlappingInterval();

  SUBCASE("the two-member cover has no I-open subcover") {
    const Cover c{{iv(-1, rat(1, 2), true, false),
                   iv(rat(-1, 2), 1, false, true)},
                  ov};
    const auto a = analyzeCover(c, IdealKind::Countable);
    CHECK(a.isCover);
    CHECK(a.idealOpenMembers.empty());
    CHECK_FALSE(a.hasIdealOpenFiniteSubcover);
  }

  SUBCASE("members with small complements are I-open and cover") {
    const Cover c{{iv(-1, 1, true, false), iv(-1, 1, false, true)}, ov};
    const auto a = analyzeCover(c, IdealKind::Countable);
    CHECK(a.isCover);
    CHECK(a.idealOpenMembers == std::vector<std::size_t>{0, 1});
    CHECK(a.hasIdealOpenFiniteSubcover);
  }

  SUBCASE("the whole space alone is always an I-open subcover") {
    const Cover c{{ov.universe()}, ov};
    const auto a = analyzeCover(c, IdealKind::Finite);
    CHECK(a.isCover);
    CHECK(a.idealOpenMembers == std::vector<std::size_t>{0});
    CHECK(a.hasIdealOpenFiniteSubcover);
  }

  SUBCASE("non-open members are rejected") {
    const Cover c{{iv(0, rat(1, 2), true, true)}, ov};
    CHECK_THROWS_AS(analyzeCover(c, IdealKind::Countable),
                    std::invalid_argument);
  }
}

TEST_CASE("cover analysis detects non-covers") {
  const Topology u = Topology::usual();
  const Cover c{{iv(0, 1, false, false), iv(2, 3, false, false)}, u};
  const auto a = analyzeCover(c, IdealKind::Countable);
  CHECK_FALSE(a.isCover);
}

TEST_CASE("finite map checks") {
  const FiniteSpace sierp(2, {0b00, 0b10, 0b11});
  const FiniteIdeal trivial(2, {0});
  const FiniteIdeal full(2, {0b00, 0b01, 0b10, 0b11});
  const std::vector<int> ident{0, 1};

  CHECK(finiteMapCheck(sierp, sierp, full, ident,
                       MapProperty::IdealContinuous));
  // {1} is open but not clopen, so with the trivial ideal the identity is
  // not I-continuous.
  CHECK_FALSE(finiteMapCheck(sierp, sierp, trivial, ident,
                             MapProperty::IdealContinuous));
  CHECK(finiteMapCheck(sierp, sierp, full, ident,
                       MapProperty::IdealHomeomorphism));
  CHECK_FALSE(finiteMapCheck(sierp, sierp, trivial, ident,
                             MapProperty::IdealHomeomorphism));
  // A constant map is not a bijection.
  CHECK_FALSE(finiteMapCheck(sierp, sierp, full, {0, 0},
                             MapProperty::IdealHomeomorphism));
  CHECK(finiteMapCheck(sierp, sierp, full, ident, MapProperty::IdealOpenMap));
  CHECK(finiteMapCheck(sierp, sierp, full, ident,
                       MapProperty::IdealClosedMap));
  CHECK(finiteMapCheck(sierp, sierp, trivial, ident,
                       MapProperty::PreservesIdealCompact));

  CHECK_THROWS_AS(finiteMapCheck(sierp, sierp, full, {0},
                                 MapProperty::IdealContinuous),
                  std::invalid_argument);
  CHECK_THROWS_AS(finiteMapCheck(sierp, sierp, full, {0, 5},
                                 MapProperty::IdealContinuous),
                  std::invalid_argument);
}

TEST_CASE("image of an I-compact space under good maps is I-compact") {
  // Exhaustive sweep at two points: whenever f is I-continuous, I-open and
  // onto and the domain is I-compact, PreservesIdealCompact must hold with
  // the conclusion part true.
  for (const FiniteSpace& spX : enumerateTopologies(2)) {
    for (const FiniteSpace& spY : enumerateTopologies(2)) {
      for (const FiniteIdeal& idX : enumerateIdeals(2)) {
        for (const FiniteIdeal& idY : enumerateIdeals(2)) {
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              const std::vector<int> f{a, b};
              const bool onto = (a != b);
              if (!onto) continue;
              if (!finiteMapCheck(spX, spY, idX, idY, f,
                                  MapProperty::IdealContinuous)) {
                continue;
              }
              if (!finiteMapCheck(spX, spY, idX, idY, f,
                                  MapProperty::IdealOpenMap)) {
                continue;
              }
              if (!bfIsIdealCompact(spX, idX)) continue;
              CHECK(bfIsIdealCompact(spY, idY));
            }
          }
        }
      }
    }
  }
}
