#include "ctopo/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctopo/ideal.hpp"
#include "ctopo/maps.hpp"
#include "ctopo/oracle.hpp"
#include "ctopo/parser.hpp"
#include "ctopo/real_set.hpp"
#include "ctopo/topology.hpp"

namespace ctopo {
namespace {

RealSet iv(ExtRational lo, ExtRational hi, bool lc, bool hc) {
  return RealSet::interval(std::move(lo), std::move(hi), lc, hc);
}

void checkSet(std::vector<SuiteCheck>& out, const std::string& name,
              const RealSet& actual, const RealSet& expected) {
  out.push_back({name, actual == expected,
                 "expected " + renderSet(expected) + ", got " +
                     renderSet(actual)});
}

void checkFlag(std::vector<SuiteCheck>& out, const std::string& name,
               bool actual, bool expected) {
  out.push_back({name, actual == expected,
                 std::string("expected ") + (expected ? "true" : "false")});
}

}  // namespace

std::vector<SuiteCheck> classificationFixtures() {
  std::vector<SuiteCheck> out;
  const Topology usual = Topology::usual();
  const Topology exI = Topology::excludedSet(RealSet::irrationals());
  const Topology pp1 = Topology::particularPoint(1);
  const RealSet coZ = RealSet::integers().complement();

  auto classify = [](const Topology& t, IdealKind k, const RealSet& s) {
    return idealClassify(t, k, s);
  };

  checkFlag(out, "usual: R minus Z is C-open",
            classify(usual, IdealKind::Countable, coZ).isIdealOpen, true);
  checkFlag(out, "usual: R minus Z is not F-open",
            classify(usual, IdealKind::Finite, coZ).isIdealOpen, false);
  checkFlag(out, "usual: Z is C-closed",
            classify(usual, IdealKind::Countable, RealSet::integers())
                .isIdealClosed,
            true);
  checkFlag(out, "usual: Z is not F-closed",
            classify(usual, IdealKind::Finite, RealSet::integers())
                .isIdealClosed,
            false);

  checkFlag(out, "particular point 1: N is open",
            pp1.classify(RealSet::naturals()).isOpen, true);
  checkFlag(out, "particular point 1: N is not C-open",
            classify(pp1, IdealKind::Countable, RealSet::naturals())
                .isIdealOpen,
            false);

  checkFlag(out, "excluded I: Q is open",
            exI.classify(RealSet::rationals()).isOpen, true);
  checkFlag(out, "excluded I: Q is not C-open",
            classify(exI, IdealKind::Countable, RealSet::rationals())
                .isIdealOpen,
            false);
  checkFlag(out, "excluded I: I is closed",
            exI.classify(RealSet::irrationals()).isClosed, true);
  checkFlag(out, "excluded I: I is not C-closed",
            classify(exI, IdealKind::Countable, RealSet::irrationals())
                .isIdealClosed,
            false);

  const RealSet h = RealSet::points({1, 2, 3});
  checkSet(out, "excluded I: int(cl({1,2,3})) = {1,2,3}",
           exI.interior(exI.closure(h)), h);
  checkFlag(out, "excluded I: {1,2,3} is not C-open",
            classify(exI, IdealKind::Countable, h).isIdealOpen, false);
  const RealSet k = h.complement();
  checkSet(out, "excluded I: cl(int(R minus {1,2,3})) = R minus {1,2,3}",
           exI.closure(exI.interior(k)), k);
  checkFlag(out, "excluded I: R minus {1,2,3} is not C-closed",
            classify(exI, IdealKind::Countable, k).isIdealClosed, false);

  const RealSet a =
      iv(2, 5, false, false).unionWith(iv(5, 9, false, false));
  checkFlag(out, "usual: (2,5) union (5,9) is C-open",
            classify(usual, IdealKind::Countable, a).isIdealOpen, true);
  checkSet(out, "usual: int(cl((2,5) union (5,9))) = (2,9)",
           usual.interior(usual.closure(a)), iv(2, 9, false, false));
  return out;
}

std::vector<SuiteCheck> operatorFixtures() {
  std::vector<SuiteCheck> out;
  const Topology usual = Topology::usual();
  const IdealKind c = IdealKind::Countable;

  checkSet(out, "usual: intC(Q union I) = R",
           idealInterior(usual, c,
                         RealSet::rationals().unionWith(
                             RealSet::irrationals())),
           RealSet::full());
  checkSet(out, "excluded I: clC(I) = R",
           idealClosure(Topology::excludedSet(RealSet::irrationals()), c,
                        RealSet::irrationals()),
           RealSet::full());

  const RealSet i12 = iv(1, 2, false, false);
  const RealSet i23 = iv(2, 3, false, false);
  checkSet(out, "usual: DC((1,2) inter (2,3)) = empty",
           idealDerived(usual, c, i12.intersect(i23)), RealSet::empty());
  checkSet(out, "usual: DC((1,2)) inter DC((2,3)) = {2}",
           idealDerived(usual, c, i12).intersect(idealDerived(usual, c, i23)),
           RealSet::point(2));

  const Topology ppHalf = Topology::particularPoint(Rational(1) / 2);
  const RealSet coHalf = RealSet::point(Rational(1) / 2).complement();
  checkSet(out, "particular point 1/2: D(R minus {1/2}) = empty",
           ppHalf.derivedSet(coHalf), RealSet::empty());
  checkSet(out, "particular point 1/2: DC(R minus {1/2}) = R",
           idealDerived(ppHalf, c, coHalf), RealSet::full());

  const RealSet half12 = iv(1, 2, false, true);
  checkSet(out, "usual: BdC((1,2]) = {2}", idealBorder(usual, c, half12),
           RealSet::point(2));
  checkSet(out, "usual: FrC((1,2]) = {1,2}", idealFrontier(usual, c, half12),
           RealSet::points({1, 2}));

  checkSet(out, "usual: ExtC({2}) = R minus {2}",
           idealExterior(usual, c, RealSet::point(2)),
           RealSet::point(2).complement());

  const RealSet below2 = iv(ExtRational::negInf(), 2, false, false);
  const RealSet above0 = iv(0, ExtRational::posInf(), false, false);
  checkSet(out, "usual: ExtC((-inf,2) union (0,inf)) = empty",
           idealExterior(usual, c, below2.unionWith(above0)),
           RealSet::empty());
  checkSet(out, "usual: ExtC((-inf,2)) = (2,inf)",
           idealExterior(usual, c, below2),
           iv(2, ExtRational::posInf(), false, false));
  checkSet(out, "usual: ExtC((0,inf)) = (-inf,0)",
           idealExterior(usual, c, above0),
           iv(ExtRational::negInf(), 0, false, false));
  checkSet(out,
           "usual: ExtC((-inf,2]) inter ExtC([2,inf)) = empty",
           idealExterior(usual, c, iv(ExtRational::negInf(), 2, false, true))
               .intersect(idealExterior(
                   usual, c, iv(2, ExtRational::posInf(), true, false))),
           RealSet::empty());
  return out;
}

std::vector<SuiteCheck> functionFixtures() {
  std::vector<SuiteCheck> out;

  const auto exI =
      builtinIdentityVerdict(Topology::excludedSet(RealSet::irrationals()),
                             IdealKind::Countable);
  checkFlag(out, "identity on excluded I is not C-continuous",
            exI.status == ContinuityStatus::NotIdealContinuous, true);
  checkFlag(out, "identity on excluded I: witness is Q",
            exI.witnessOpen == RealSet::rationals(), true);

  checkFlag(out, "identity on cocountable is C-continuous",
            builtinIdentityVerdict(Topology::cocountable(),
                                   IdealKind::Countable)
                    .status == ContinuityStatus::IdealContinuous,
            true);
  const auto cocF =
      builtinIdentityVerdict(Topology::cocountable(), IdealKind::Finite);
  checkFlag(out, "identity on cocountable is not F-continuous",
            cocF.status == ContinuityStatus::NotIdealContinuous, true);
  checkFlag(out, "identity on cocountable: witness is R minus Z",
            cocF.witnessOpen == RealSet::integers().complement(), true);

  const Topology ov = Topology::overlappingInterval();
  const RealSet left = iv(-1, Rational(1) / 2, true, false);
  const RealSet right = iv(Rational(-1) / 2, 1, false, true);
  const auto cover =
      analyzeCover(Cover{{left, right}, ov}, IdealKind::Countable);
  checkFlag(out, "overlap cover {[-1,0.5),(-0.5,1]} covers the space",
            cover.isCover, true);
  checkFlag(out, "overlap cover has no I-open members",
            cover.idealOpenMembers.empty(), true);
  checkFlag(out, "overlap cover has no I-open finite subcover",
            cover.hasIdealOpenFiniteSubcover, false);
  checkSet(out, "overlap: fr([-1,0.5)) = [0.5,1]", ov.frontier(left),
           iv(Rational(1) / 2, 1, true, true));
  checkSet(out, "overlap: fr((-0.5,1]) = [-1,-0.5]", ov.frontier(right),
           iv(-1, Rational(-1) / 2, true, true));
  return out;
}

std::vector<SuiteCheck> runSuite(const std::string& name, int maxN) {
  if (name == "paper-examples") {
    std::vector<SuiteCheck> out = classificationFixtures();
    for (auto& fixtures : {operatorFixtures(), functionFixtures()}) {
      out.insert(out.end(), fixtures.begin(), fixtures.end());
    }
    return out;
  }
  if (name == "theorems") {
    std::vector<SuiteCheck> out;
    for (const std::string& id : registeredTheoremIds()) {
      // Function-level laws cap at three points, set-level laws at four.
      int bound = maxN;
      for (; bound >= 1; --bound) {
        try {
          const TheoremReport r = checkTheorem(id, bound);
          out.push_back({id, r.pass(),
                         std::to_string(r.instancesChecked) +
                             " instances checked" +
                             (r.pass() ? ""
                                       : "; first counterexample: " +
                                             r.counterexamples.front().detail)});
          break;
        } catch (const std::out_of_range&) {
          continue;  // retry with a smaller bound
        }
      }
      if (bound == 0) {
        out.push_back({id, false, "no admissible bound"});
      }
    }
    return out;
  }
  if (name == "counterexamples") {
    std::vector<SuiteCheck> out;
    for (const std::string& id : registeredClaimIds()) {
      const int bound = std::min(maxN, 3);
      const auto witness = searchCounterexample(id, bound);
      out.push_back({id, witness.has_value(),
                     witness ? witness->detail : "no witness found"});
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace ctopo
