#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>

#include "ctopo/finite_space.hpp"
#include "ctopo/oracle.hpp"

using namespace ctopo;

namespace {

FiniteSpace sierpinski() { return FiniteSpace(2, {0b00, 0b10, 0b11}); }
FiniteIdeal trivialIdeal(int n) { return FiniteIdeal(n, {0}); }

FiniteIdeal powerSetIdeal(int n) {
  std::vector<Bits> members;
  for (Bits s = 0; s < (Bits{1} << n); ++s) members.push_back(s);
  return FiniteIdeal(n, members);
}

unsigned rngSeed() {
  if (const char* env = std::getenv("CTOPO_SEED")) {
    return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  return 20260826u;
}

}  // namespace

TEST_CASE("finite space construction validates the axioms") {
  CHECK_NOTHROW(FiniteSpace(2, {0b00, 0b10, 0b11}));
  CHECK_THROWS_AS(FiniteSpace(2, {0b10, 0b11}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSpace(2, {0b00, 0b10}), std::invalid_argument);
  // {0,1} on a 3-point space: union {0,1}|{1,2} = X ok, but {0,1}&{1,2}={1}
  // missing.
  CHECK_THROWS_AS(FiniteSpace(3, {0b000, 0b011, 0b110, 0b111}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteSpace(0, {0}), std::out_of_range);
  CHECK_THROWS_AS(FiniteSpace(6, {0}), std::out_of_range);
}

TEST_CASE("finite ideal construction validates the axioms") {
  CHECK_NOTHROW(FiniteIdeal(2, {0b00, 0b01}));
  CHECK_THROWS_AS(FiniteIdeal(2, {0b01}), std::invalid_argument);
  // Not downward closed: {0,1} without {0}.
  CHECK_THROWS_AS(FiniteIdeal(2, {0b00, 0b11, 0b01}), std::invalid_argument);
  // Not union closed: {0} and {1} without {0,1}.
  CHECK_THROWS_AS(FiniteIdeal(2, {0b00, 0b01, 0b10}), std::invalid_argument);
}

TEST_CASE("topology enumeration counts") {
  CHECK(enumerateTopologies(1).size() == 1);
  CHECK(enumerateTopologies(2).size() == 4);
  CHECK(enumerateTopologies(3).size() == 29);
  CHECK(enumerateTopologies(4).size() == 355);
  CHECK_THROWS_AS(enumerateTopologies(0), std::out_of_range);
  CHECK_THROWS_AS(enumerateTopologies(6), std::out_of_range);

  // No duplicates and all valid (validation runs in the constructor).
  auto topos = enumerateTopologies(3);
  std::set<std::vector<Bits>> families;
  for (const auto& sp : topos) families.insert(sp.opens());
  CHECK(families.size() == topos.size());
}

TEST_CASE("topology enumeration count for five points") {
  CHECK(enumerateTopologies(5).size() == 6942);
}

TEST_CASE("ideal enumeration counts") {
  CHECK(enumerateIdeals(1).size() == 2);
  CHECK(enumerateIdeals(2).size() == 4);
  CHECK(enumerateIdeals(3).size() == 8);
  // The two extremes are present: the trivial ideal and the full power set.
  auto ideals = enumerateIdeals(2);
  bool sawTrivial = false, sawFull = false;
  for (const auto& id : ideals) {
    if (id.members() == std::vector<Bits>{0}) sawTrivial = true;
    if (id.members().size() == 4) sawFull = true;
  }
  CHECK(sawTrivial);
  CHECK(sawFull);
}

TEST_CASE("JSON round trip") {
  const std::string text =
      R"({"n":3,"opens":[[],[0],[0,1,2]],"ideal":[[],[2]]})";
  const FiniteInstance inst = FiniteInstance::fromJson(text);
  CHECK(inst.space.n() == 3);
  CHECK(inst.space.opens() == std::vector<Bits>{0b000, 0b001, 0b111});
  CHECK(inst.ideal.members() == std::vector<Bits>{0b000, 0b100});
  const FiniteInstance again = FiniteInstance::fromJson(inst.toJson());
  CHECK(again.space == inst.space);
  CHECK(again.ideal == inst.ideal);
}

TEST_CASE("classical operators on the three-point particular point space") {
  // Opens: sets that are empty or contain point 0.
  const FiniteSpace sp(3, {0b000, 0b001, 0b011, 0b101, 0b111});
  CHECK(bfInterior(sp, 0b010) == 0b000);
  CHECK(bfInterior(sp, 0b011) == 0b011);
  CHECK(bfClosure(sp, 0b001) == 0b111);  // the particular point is dense
  CHECK(bfClosure(sp, 0b010) == 0b010);
  CHECK(bfDerived(sp, 0b001) == 0b110);
  CHECK(bfFrontier(sp, 0b001) == 0b110);
}

TEST_CASE("ideal operators on the Sierpinski space with the trivial ideal") {
  const FiniteSpace sp = sierpinski();
  const FiniteIdeal id = trivialIdeal(2);
  // Only clopen sets are I-open here.
  CHECK(bfIsIdealOpen(sp, id, 0b00));
  CHECK(bfIsIdealOpen(sp, id, 0b11));
  CHECK_FALSE(bfIsIdealOpen(sp, id, 0b10));
  CHECK(bfInterior(sp, 0b10) == 0b10);
  CHECK(bfIdealInterior(sp, id, 0b10) == 0b00);
  // {0} is closed but not I-closed: its complement {1} has frontier {0},
  // which is not small, so the only I-closed superset is X.
  CHECK(bfIdealClosure(sp, id, 0b01) == 0b11);
  CHECK(bfIdealClosure(sp, id, 0b10) == 0b11);
  CHECK(bfIdealDerived(sp, id, 0b10) == 0b01);
  CHECK(bfIdealBorder(sp, id, 0b10) == 0b10);
}

TEST_CASE("with the power set ideal the I-operators are classical") {
  for (int n = 1; n <= 3; ++n) {
    const FiniteIdeal full = powerSetIdeal(n);
    for (const FiniteSpace& sp : enumerateTopologies(n)) {
      for (Bits s = 0; s < (Bits{1} << n); ++s) {
        CHECK(bfIdealInterior(sp, full, s) == bfInterior(sp, s));
        CHECK(bfIdealClosure(sp, full, s) == bfClosure(sp, s));
        CHECK(bfIdealDerived(sp, full, s) == bfDerived(sp, s));
      }
      CHECK(bfIsIdealCompact(sp, full));
    }
  }
}

TEST_CASE("bfOperator dispatch") {
  const FiniteSpace sp = sierpinski();
  const FiniteIdeal id = trivialIdeal(2);
  CHECK(std::get<Bits>(bfOperator(sp, id, "intI", {0b10})) == 0b00);
  CHECK(std::get<Bits>(bfOperator(sp, id, "cl", {0b10})) == 0b11);
  CHECK(std::get<bool>(bfOperator(sp, id, "isIOpen", {0b10})) == false);
  CHECK(std::get<bool>(bfOperator(sp, id, "isICompact", {})) == true);
  CHECK_THROWS_AS(bfOperator(sp, id, "nope", {0}), std::invalid_argument);
  CHECK_THROWS_AS(bfOperator(sp, id, "int", {}), std::invalid_argument);
  CHECK_THROWS_AS(bfOperator(sp, id, "int", {0b111}), std::invalid_argument);
}

TEST_CASE("I-compactness") {
  // Every cover of the Sierpinski space must contain X, which is I-open.
  CHECK(bfIsIdealCompact(sierpinski(), trivialIdeal(2)));
  // Opens {0,1} and {0,2} cover the space but neither is clopen, so with the
  // trivial ideal there is no I-open subcover.
  const FiniteSpace sp(3, {0b000, 0b001, 0b011, 0b101, 0b111});
  CHECK_FALSE(bfIsIdealCompact(sp, trivialIdeal(3)));
  CHECK(bfIsIdealCompact(sp, powerSetIdeal(3)));
}

TEST_CASE("operator tables match the single-shot definitional functions") {
  std::mt19937 rng(rngSeed());
  for (int n = 1; n <= 3; ++n) {
    const auto topos = enumerateTopologies(n);
    const auto ideals = enumerateIdeals(n);
    for (int trial = 0; trial < 50; ++trial) {
      const FiniteSpace& sp = topos[rng() % topos.size()];
      const FiniteIdeal& id = ideals[rng() % ideals.size()];
      const OpTables t(sp, id);
      for (Bits s = 0; s < (Bits{1} << n); ++s) {
        CHECK(t.interior[s] == bfInterior(sp, s));
        CHECK(t.closure[s] == bfClosure(sp, s));
        CHECK(t.derived[s] == bfDerived(sp, s));
        CHECK(t.idealInterior[s] == bfIdealInterior(sp, id, s));
        CHECK(t.idealClosure[s] == bfIdealClosure(sp, id, s));
        CHECK(t.idealDerived[s] == bfIdealDerived(sp, id, s));
        CHECK(bool(t.idealOpen[s]) == bfIsIdealOpen(sp, id, s));
      }
    }
  }
}

TEST_CASE("generic identities agree with the definitional route") {
  const char* ops[] = {"intI", "clI", "DI", "BdI", "FrI", "ExtI"};
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSpace& sp : enumerateTopologies(n)) {
      for (const FiniteIdeal& id : enumerateIdeals(n)) {
        for (Bits s = 0; s < (Bits{1} << n); ++s) {
          for (const char* op : ops) {
            CHECK(genericOperator(sp, id, op, s) ==
                  std::get<Bits>(bfOperator(sp, id, op, {s})));
          }
        }
      }
    }
  }
}

TEST_CASE("every registered theorem passes exhaustively at small scale") {
  for (const std::string& id : registeredTheoremIds()) {
    const TheoremReport report = checkTheorem(id, 2);
    INFO(id, ": ", report.counterexamples.empty()
                       ? ""
                       : report.counterexamples.front().detail);
    CHECK(report.pass());
    CHECK(report.instancesChecked > 0);
  }
}

TEST_CASE("selected theorems pass at the full set-level bound") {
  for (const std::string& id :
       {"thm-13p15-i", "thm-union", "thm-13p16-v", "thm-border-vii",
        "thm-exterior-iv"}) {
    const TheoremReport report = checkTheorem(id, 3);
    CHECK(report.pass());
  }
}

TEST_CASE("every registered claim has a finite witness") {
  for (const std::string& id : registeredClaimIds()) {
    INFO(id);
    const auto witness = searchCounterexample(id, 3);
    REQUIRE(witness.has_value());
  }
}

TEST_CASE("the first witness against open implying I-open is Sierpinski") {
  const auto witness = searchCounterexample("claim-open-not-ideal-open", 3);
  REQUIRE(witness.has_value());
  CHECK(witness->space.n() == 2);
  CHECK(witness->space == sierpinski());
  CHECK(witness->ideal == trivialIdeal(2));
  CHECK(witness->sets == std::vector<Bits>{0b10});
}

TEST_CASE("unknown ids and out-of-range bounds are rejected") {
  CHECK_THROWS_AS(checkTheorem("thm-nonsense", 2), std::invalid_argument);
  CHECK_THROWS_AS(searchCounterexample("claim-nonsense", 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(checkTheorem("thm-union", 5), std::out_of_range);
  CHECK_THROWS_AS(checkTheorem("thm-13p6", 4), std::out_of_range);
  CHECK_THROWS_AS(checkTheorem("thm-union", 0), std::out_of_range);
}

TEST_CASE("statements are available for every id") {
  for (const std::string& id : registeredTheoremIds()) {
    CHECK_FALSE(statementFor(id).empty());
  }
  for (const std::string& id : registeredClaimIds()) {
    CHECK_FALSE(statementFor(id).empty());
  }
}
