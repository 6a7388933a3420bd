// Acceptance gate: one pass/fail line per criterion.  Exit code is the
// number of failing criteria.

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ctopo/ideal.hpp"
#include "ctopo/oracle.hpp"
#include "ctopo/parser.hpp"
#include "ctopo/suites.hpp"
#include "ctopo/topology.hpp"
#include "random_sets.hpp"

using namespace ctopo;

namespace {

int failures = 0;

void report(int criterion, const std::string& title, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": "
            << title << " (" << detail << ")\n";
  if (!pass) ++failures;
}

// Criteria 1-3: the worked-example fixture suites.
void fixtureCriterion(int criterion, const std::string& title,
                      const std::vector<SuiteCheck>& checks) {
  bool pass = true;
  std::string firstFail;
  for (const SuiteCheck& c : checks) {
    if (!c.pass) {
      pass = false;
      if (firstFail.empty()) firstFail = c.name;
    }
  }
  report(criterion, title, pass,
         pass ? std::to_string(checks.size()) + " fixtures exact"
              : "first failure: " + firstFail);
}

void theoremCriterion() {
  bool pass = true;
  long long instances = 0;
  std::string firstFail;
  for (const std::string& id : registeredTheoremIds()) {
    TheoremReport r;
    for (int bound = 4;; --bound) {
      try {
        r = checkTheorem(id, bound);  // set-level laws run at n<=4
        break;
      } catch (const std::out_of_range&) {
        if (bound <= 1) throw;  // function-level laws cap at n<=3
      }
    }
    instances += r.instancesChecked;
    if (!r.pass()) {
      pass = false;
      if (firstFail.empty()) firstFail = id;
    }
  }
  report(4, "exhaustive theorem suite", pass,
         pass ? std::to_string(registeredTheoremIds().size()) +
                    " theorem ids, " + std::to_string(instances) +
                    " instances, zero counterexamples"
              : "failed: " + firstFail);
}

void counterexampleCriterion() {
  bool pass = true;
  std::string firstFail;
  for (const std::string& id : registeredClaimIds()) {
    if (!searchCounterexample(id, 3).has_value()) {
      pass = false;
      if (firstFail.empty()) firstFail = id;
    }
  }
  report(5, "counterexample suite", pass,
         pass ? std::to_string(registeredClaimIds().size()) +
                    " claims, all witnessed at n<=3"
              : "no witness for: " + firstFail);
}

void algebraCriterion() {
  constexpr int kTrials = 10000;
  std::mt19937 rng(testing::defaultSeed());
  const Topology lineDrivers[] = {
      Topology::usual(), Topology::particularPoint(Rational(1) / 2),
      Topology::excludedSet(RealSet::irrationals()), Topology::cocountable()};
  const Topology overlap = Topology::overlappingInterval();
  const RealSet box = RealSet::interval(-1, 1, true, true);

  long long checked = 0;
  bool pass = true;
  std::string firstFail;
  auto law = [&](bool ok, const char* name) {
    ++checked;
    if (!ok && firstFail.empty()) {
      pass = false;
      firstFail = name;
    }
  };

  for (int i = 0; i < kTrials && pass; ++i) {
    const RealSet a = testing::randomRealSet(rng);
    const RealSet b = testing::randomRealSet(rng);
    const RealSet c = testing::randomRealSet(rng);

    // Boolean-algebra laws.
    law(a.complement().complement() == a, "double complement");
    law(a.unionWith(a) == a && a.intersect(a) == a, "idempotence");
    law(a.unionWith(b) == b.unionWith(a) &&
            a.intersect(b) == b.intersect(a),
        "commutativity");
    law(a.unionWith(b.unionWith(c)) == a.unionWith(b).unionWith(c),
        "associativity");
    law(a.unionWith(b).complement() ==
            a.complement().intersect(b.complement()),
        "De Morgan");
    law(a.intersect(b.unionWith(c)) ==
            a.intersect(b).unionWith(a.intersect(c)),
        "distributivity");
    law(a.intersect(a.complement()).isEmpty() &&
            a.unionWith(a.complement()).isFull(),
        "complement laws");

    // Canonical round-trip through the expression grammar.
    law(std::get<RealSet>(
            evaluate(parseExpression(renderSet(a))).value) == a,
        "canonical round-trip");

    // Kuratowski laws and duality per driver.
    for (const Topology& t : lineDrivers) {
      const RealSet in = t.interior(a);
      const RealSet clo = t.closure(a);
      law(t.interior(in) == in && t.closure(clo) == clo, "idempotent int/cl");
      law(in.subsetOf(a) && a.subsetOf(clo), "int <= id <= cl");
      law(clo == t.interior(a.complement()).complement(), "int/cl duality");
      law(t.closure(a.unionWith(b)) == clo.unionWith(t.closure(b)),
          "closure additivity");

      // Ideal classification complement duality.
      for (IdealKind k : {IdealKind::Finite, IdealKind::Countable}) {
        const auto ca = idealClassify(t, k, a);
        const auto cc = idealClassify(t, k, a.complement());
        law(ca.isIdealOpen == cc.isIdealClosed &&
                ca.isIdealClosed == cc.isIdealOpen,
            "ideal classification duality");
      }
    }

    // The same laws inside the overlapping-interval universe.
    const RealSet oa = a.intersect(box);
    const RealSet ob = b.intersect(box);
    const RealSet oin = overlap.interior(oa);
    const RealSet oclo = overlap.closure(oa);
    law(overlap.interior(oin) == oin && overlap.closure(oclo) == oclo,
        "overlap idempotent int/cl");
    law(oin.subsetOf(oa) && oa.subsetOf(oclo), "overlap int <= id <= cl");
    law(oclo == overlap.interior(box.minus(oa)).complement().intersect(box),
        "overlap int/cl duality");
    law(overlap.closure(oa.unionWith(ob)) ==
            oclo.unionWith(overlap.closure(ob)),
        "overlap closure additivity");
    for (IdealKind k : {IdealKind::Finite, IdealKind::Countable}) {
      const auto ca = idealClassify(overlap, k, oa);
      const auto cc = idealClassify(overlap, k, box.minus(oa));
      law(ca.isIdealOpen == cc.isIdealClosed &&
              ca.isIdealClosed == cc.isIdealOpen,
          "overlap ideal classification duality");
    }
  }
  report(6, "algebra property suite", pass,
         pass ? std::to_string(kTrials) + " random instances per law, " +
                    std::to_string(checked) + " law checks, zero failures"
              : "failed law: " + firstFail);
}

void oracleAgreementCriterion() {
  constexpr int kInstances = 1000;
  std::mt19937 rng(testing::defaultSeed() + 1);
  std::vector<std::vector<FiniteSpace>> topos;
  std::vector<std::vector<FiniteIdeal>> ideals;
  for (int n = 1; n <= 4; ++n) {
    topos.push_back(enumerateTopologies(n));
    ideals.push_back(enumerateIdeals(n));
  }
  const char* ops[] = {"intI", "clI", "DI", "BdI", "FrI", "ExtI"};
  bool pass = true;
  std::string firstFail;
  long long comparisons = 0;
  for (int i = 0; i < kInstances; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const FiniteSpace& sp = topos[n - 1][rng() % topos[n - 1].size()];
    const FiniteIdeal& id = ideals[n - 1][rng() % ideals[n - 1].size()];
    const Bits s = static_cast<Bits>(rng()) & sp.universe();
    for (const char* op : ops) {
      ++comparisons;
      if (genericOperator(sp, id, op, s) !=
          std::get<Bits>(bfOperator(sp, id, op, {s}))) {
        pass = false;
        if (firstFail.empty()) firstFail = op;
      }
    }
  }
  report(7, "oracle agreement", pass,
         pass ? std::to_string(kInstances) + " random finite instances, " +
                    std::to_string(comparisons) + " operator comparisons exact"
              : "mismatch in: " + firstFail);
}

}  // namespace

int main() {
  fixtureCriterion(1, "classification fixtures", classificationFixtures());
  fixtureCriterion(2, "operator fixtures", operatorFixtures());
  fixtureCriterion(3, "function and cover fixtures", functionFixtures());
  theoremCriterion();
  counterexampleCriterion();
  algebraCriterion();
  oracleAgreementCriterion();
  return failures;
}
