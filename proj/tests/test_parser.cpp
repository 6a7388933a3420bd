#include <doctest.h>

#include <random>

#include "ctopo/parser.hpp"
#include "random_sets.hpp"

using namespace ctopo;

namespace {

RealSet evalSet(const std::string& src) {
  return std::get<RealSet>(evaluate(parseExpression(src)).value);
}

bool evalFlag(const std::string& src) {
  return std::get<bool>(evaluate(parseExpression(src)).value);
}

}  // namespace

TEST_CASE("literals and constructors") {
  CHECK(evalSet("R") == RealSet::full());
  CHECK(evalSet("Q") == RealSet::rationals());
  CHECK(evalSet("I") == RealSet::irrationals());
  CHECK(evalSet("Z") == RealSet::integers());
  CHECK(evalSet("N") == RealSet::naturals());
  CHECK(evalSet("empty") == RealSet::empty());
  CHECK(evalSet("interval(0,1,o,c)") == RealSet::interval(0, 1, false, true));
  CHECK(evalSet("interval(-inf,2,o,o)") ==
        RealSet::interval(ExtRational::negInf(), 2, false, false));
  CHECK(evalSet("points(1,2,3)") == RealSet::points({1, 2, 3}));
  CHECK(evalSet("points(-1/2)") == RealSet::point(Rational(-1) / 2));
  CHECK(evalSet("prog(0,1)") == RealSet::integers());
  CHECK(evalSet("prog(0,1,up)") ==
        RealSet::progression({0, 1, Progression::Kind::Up}));
  CHECK(evalSet("qtrace(interval(0,1,c,c))") ==
        RealSet::rationals().intersect(RealSet::interval(0, 1, true, true)));
  CHECK(evalSet("itrace(R)") == RealSet::irrationals());
}

TEST_CASE("rational literal forms") {
  CHECK(evalSet("points(1/2)") == evalSet("points(0.5)"));
  CHECK(evalSet("interval(-0.25,3/4,o,o)") ==
        RealSet::interval(Rational(-1) / 4, Rational(3) / 4, false, false));
}

TEST_CASE("set algebra") {
  CHECK(evalSet("union(Q, I)") == RealSet::full());
  CHECK(evalSet("inter(Q, Z)") == RealSet::integers());
  CHECK(evalSet("setminus(R, Z)") == RealSet::integers().complement());
  CHECK(evalSet("compl(Q)") == RealSet::irrationals());
  CHECK(evalSet("union(points(1), points(2), points(3))") ==
        RealSet::points({1, 2, 3}));
}

TEST_CASE("topological and ideal operators with context clauses") {
  CHECK(evalSet("setminus(cl[excluded:I](Q), Q)") == RealSet::irrationals());
  CHECK(evalSet("int[usual](interval(0,1,c,c))") ==
        RealSet::interval(0, 1, false, false));
  CHECK(evalSet("fr[usual](interval(1,2,o,c))") == RealSet::points({1, 2}));
  CHECK(evalSet("D[particular:1/2](setminus(R, points(1/2)))") ==
        RealSet::empty());
  CHECK(evalSet("intC[usual; countable](union(Q, I))") == RealSet::full());
  CHECK(evalSet("FrC[usual; countable](interval(1,2,o,c))") ==
        RealSet::points({1, 2}));
  CHECK(evalSet("BdC[usual; countable](interval(1,2,o,c))") ==
        RealSet::point(2));
  CHECK(evalSet("ExtC[usual; countable](points(2))") ==
        RealSet::point(2).complement());
  CHECK(evalSet("clC[excluded:I; countable](I)") == RealSet::full());
  CHECK(evalSet("DC[usual; countable](inter(interval(1,2,o,o), "
                "interval(2,3,o,o)))") == RealSet::empty());
  CHECK(evalFlag("isCopen[usual; countable](setminus(R,Z))"));
  CHECK_FALSE(evalFlag("isCopen[usual; finite](setminus(R,Z))"));
  CHECK(evalFlag("isCclosed[usual; countable](Z)"));
}

TEST_CASE("cardinality queries") {
  auto card = [](const std::string& src) {
    return std::get<Cardinality>(
        evaluate(parseExpression("card(" + src + ")")).value);
  };
  CHECK(card("points(1,2)") == Cardinality::Finite);
  CHECK(card("Z") == Cardinality::CountablyInfinite);
  CHECK(card("interval(0,1,o,o)") == Cardinality::Uncountable);
}

TEST_CASE("parse errors carry positions") {
  auto columnOf = [](const std::string& src) {
    try {
      parseExpression(src);
    } catch (const ParseError& e) {
      return e.column;
    }
    return std::size_t{0};
  };
  CHECK(columnOf("interval(0,1") == 13);
  CHECK(columnOf("frobnicate(Q)") == 1);
  CHECK(columnOf("union(Q,)") == 9);
  CHECK(columnOf("points()") == 8);
  CHECK(columnOf("union(Q, I) garbage") == 13);
  CHECK(columnOf("prog(0,0)") == 8);     // zero step
  CHECK(columnOf("points(inf)") == 8);   // endpoints only may be infinite
  CHECK(columnOf("interval(0,1,x,c)") == 14);
}

TEST_CASE("context clause validation") {
  // Missing clause entirely.
  CHECK_THROWS_AS(parseExpression("cl(Q)"), ParseError);
  // Ideal operators need both selectors.
  CHECK_THROWS_AS(parseExpression("intC[usual](Q)"), ParseError);
  // Topological operators take a topology only.
  CHECK_THROWS_AS(parseExpression("cl[usual; countable](Q)"), ParseError);
  // Unknown selectors.
  CHECK_THROWS_AS(parseExpression("cl[nonsense](Q)"), ParseError);
  CHECK_THROWS_AS(parseExpression("cl[excluded:Z](Q)"), ParseError);
  CHECK_THROWS_AS(parseExpression("intC[usual; big](Q)"), ParseError);
  // Valid variants parse.
  CHECK_NOTHROW(parseExpression("cl[particular:-3/2](Q)"));
  CHECK_NOTHROW(parseExpression("cl[excluded:Q](I)"));
  CHECK_NOTHROW(parseExpression("intC[overlap; finite](points(0))"));
}

TEST_CASE("domain violations surface as domain errors") {
  CHECK_THROWS_AS(evalSet("int[overlap](interval(0,5,o,o))"),
                  std::domain_error);
}

TEST_CASE("rendering canonical sets") {
  CHECK(renderSet(RealSet::empty()) == "empty");
  CHECK(renderSet(RealSet::full()) == "R");
  CHECK(renderSet(RealSet::rationals()) == "Q");
  CHECK(renderSet(RealSet::irrationals()) == "I");
  CHECK(renderSet(RealSet::points({1, 2})) == "points(1,2)");
  CHECK(renderSet(RealSet::integers()) == "prog(0,1)");
}

TEST_CASE("render round-trip on fixtures") {
  const char* sources[] = {
      "interval(0,1,o,c)",
      "setminus(interval(0,4,c,c), points(1,2))",
      "union(qtrace(interval(0,1,o,o)), itrace(interval(2,3,o,o)))",
      "union(prog(0,2), points(1/3))",
      "setminus(Q, prog(0,1,down))",
      "compl(points(0))",
      "intC[usual; countable](union(Q, I))",
      "fr[overlap](interval(-1,1/2,c,o))",
  };
  for (const char* src : sources) {
    const RealSet value = evalSet(src);
    const std::string rendered = renderSet(value);
    CAPTURE(src);
    CAPTURE(rendered);
    CHECK(evalSet(rendered) == value);
  }
}

TEST_CASE("render round-trip on random sets") {
  std::mt19937 rng(ctopo::testing::defaultSeed());
  for (int i = 0; i < 500; ++i) {
    const RealSet s = ctopo::testing::randomRealSet(rng);
    const std::string rendered = renderSet(s);
    CAPTURE(rendered);
    CHECK(evalSet(rendered) == s);
  }
}

TEST_CASE("bracket interval notation") {
  CHECK(parseBracketInterval("[-1,0.5)") ==
        RealSet::interval(-1, Rational(1) / 2, true, false));
  CHECK(parseBracketInterval("(-0.5,1]") ==
        RealSet::interval(Rational(-1) / 2, 1, false, true));
  CHECK(parseBracketInterval("(-inf,2)") ==
        RealSet::interval(ExtRational::negInf(), 2, false, false));
  CHECK_THROWS_AS(parseBracketInterval("0,1"), ParseError);
  CHECK_THROWS_AS(parseBracketInterval("[0;1]"), ParseError);
}

TEST_CASE("selector helpers reject unknown names") {
  CHECK_THROWS_AS(topologyFromSelector("fancy"), std::invalid_argument);
  CHECK_THROWS_AS(idealFromSelector("huge"), std::invalid_argument);
}
