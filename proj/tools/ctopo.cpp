// Command-line front end: expression evaluation, continuity verdicts, cover
// analysis, the finite-model oracle, and the batch suites.
//
// Exit codes: 0 pass, 1 failure/refutation, 2 usage error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctopo/maps.hpp"
#include "ctopo/oracle.hpp"
#include "ctopo/parser.hpp"
#include "ctopo/suites.hpp"

namespace {

using nlohmann::json;

int runEval(const std::string& expr, bool asJson) {
  const ctopo::EvalResult r = ctopo::evaluate(ctopo::parseExpression(expr));
  if (asJson) {
    json out;
    out["expr"] = expr;
    out["value"] = r.rendered;
    out["type"] = std::holds_alternative<bool>(r.value)   ? "flag"
                  : std::holds_alternative<ctopo::Cardinality>(r.value)
                      ? "cardinality"
                      : "set";
    std::cout << out.dump() << "\n";
  } else {
    std::cout << r.rendered << "\n";
  }
  return 0;
}

ctopo::PiecewiseAffineMap mapFromSelector(const std::string& sel) {
  if (sel == "id") return ctopo::PiecewiseAffineMap::identity();
  const std::size_t colon = sel.find(':');
  if (colon != std::string::npos) {
    const std::string name = sel.substr(0, colon);
    const std::string param = sel.substr(colon + 1);
    if (name == "const") {
      return ctopo::PiecewiseAffineMap::constant(ctopo::parseRational(param));
    }
    if (name == "affine") {
      const std::size_t comma = param.find(',');
      if (comma == std::string::npos) {
        throw std::invalid_argument("affine map needs 'slope,offset'");
      }
      const ctopo::Rational slope =
          ctopo::parseRational(param.substr(0, comma));
      if (slope == 0) {
        throw std::invalid_argument("affine slope must be nonzero; use const");
      }
      return ctopo::PiecewiseAffineMap(
          {ctopo::AffinePiece{ctopo::ExtRational::negInf(),
                              ctopo::ExtRational::posInf(), false, false,
                              slope,
                              ctopo::parseRational(param.substr(comma + 1))}});
    }
  }
  throw std::invalid_argument("unknown map selector '" + sel +
                              "' (expected id, const:<q> or affine:<a>,<b>)");
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string part = text.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!part.empty()) out.push_back(part);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

const char* statusName(ctopo::ContinuityStatus s) {
  switch (s) {
    case ctopo::ContinuityStatus::Continuous: return "continuous";
    case ctopo::ContinuityStatus::IdealContinuous: return "ideal-continuous";
    case ctopo::ContinuityStatus::NotContinuous: return "not-continuous";
    case ctopo::ContinuityStatus::NotIdealContinuous:
      return "not-ideal-continuous";
    case ctopo::ContinuityStatus::PassedOnFamily: return "passed-on-family";
  }
  return "unknown";
}

int runCont(const std::string& mapSel, const std::string& topoSel,
            const std::string& codSel, const std::string& idealSel,
            const std::string& familyText, bool asJson) {
  const ctopo::Topology domT = ctopo::topologyFromSelector(topoSel);
  const ctopo::Topology codT =
      ctopo::topologyFromSelector(codSel.empty() ? topoSel : codSel);
  const ctopo::IdealKind ideal = ctopo::idealFromSelector(idealSel);

  ctopo::ContinuityVerdict v{};
  if (familyText.empty()) {
    if (mapSel != "id") {
      throw std::invalid_argument(
          "without --family only the identity map has a built-in verdict");
    }
    v = ctopo::builtinIdentityVerdict(domT, ideal);
  } else {
    std::vector<ctopo::RealSet> family;
    for (const std::string& part : splitList(familyText)) {
      auto value = ctopo::evaluate(ctopo::parseExpression(part)).value;
      family.push_back(std::get<ctopo::RealSet>(value));
    }
    v = ctopo::continuityVerdict(mapFromSelector(mapSel), domT, codT, ideal,
                                 family);
  }

  const bool refuted = v.status == ctopo::ContinuityStatus::NotContinuous ||
                       v.status == ctopo::ContinuityStatus::NotIdealContinuous;
  if (asJson) {
    json out;
    out["status"] = statusName(v.status);
    if (v.witnessOpen) out["witnessOpen"] = ctopo::renderSet(*v.witnessOpen);
    if (v.witnessPreimage) {
      out["witnessPreimage"] = ctopo::renderSet(*v.witnessPreimage);
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << statusName(v.status);
    if (v.witnessOpen) {
      std::cout << " (witness " << ctopo::renderSet(*v.witnessOpen) << ")";
    }
    std::cout << "\n";
  }
  return refuted ? 1 : 0;
}

int runCover(const std::string& topoSel, const std::string& idealSel,
             const std::string& setsText, bool asJson) {
  const ctopo::Topology t = ctopo::topologyFromSelector(topoSel);
  ctopo::Cover cover{{}, t};
  for (const std::string& part : splitList(setsText)) {
    cover.members.push_back(ctopo::parseBracketInterval(part));
  }
  const ctopo::CoverAnalysis a =
      ctopo::analyzeCover(cover, ctopo::idealFromSelector(idealSel));
  if (asJson) {
    json out;
    out["isCover"] = a.isCover;
    out["idealOpenMembers"] = a.idealOpenMembers;
    out["hasIdealOpenFiniteSubcover"] = a.hasIdealOpenFiniteSubcover;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "cover: " << (a.isCover ? "yes" : "no")
              << ", ideal-open members:";
    for (std::size_t i : a.idealOpenMembers) std::cout << " " << i;
    std::cout << ", ideal-open finite subcover: "
              << (a.hasIdealOpenFiniteSubcover ? "yes" : "no") << "\n";
  }
  return a.isCover && a.hasIdealOpenFiniteSubcover ? 0 : 1;
}

int runOracle(const std::string& theorem, int maxN, bool asJson) {
  std::vector<std::string> ids;
  if (theorem == "all") {
    ids = ctopo::registeredTheoremIds();
  } else {
    ids.push_back(theorem);
  }
  json report = json::array();
  bool allPass = true;
  for (const std::string& id : ids) {
    int bound = maxN;
    ctopo::TheoremReport r;
    for (;; --bound) {
      try {
        r = ctopo::checkTheorem(id, bound);
        break;
      } catch (const std::out_of_range&) {
        // Function-level laws cap at a smaller universe than requested; retry
        // with the next smaller bound unless the user asked for one size only.
        if (theorem != "all" || bound <= 1) throw;
      }
    }
    allPass = allPass && r.pass();
    if (asJson) {
      json j;
      j["theorem"] = r.theoremId;
      j["statement"] = r.statement;
      j["maxN"] = bound;
      j["instancesChecked"] = r.instancesChecked;
      j["pass"] = r.pass();
      j["counterexamples"] = json::array();
      for (const ctopo::OracleWitness& w : r.counterexamples) {
        json cw;
        cw["instance"] =
            json::parse(ctopo::FiniteInstance{w.space, w.ideal}.toJson());
        cw["detail"] = w.detail;
        j["counterexamples"].push_back(cw);
      }
      report.push_back(j);
    } else {
      std::cout << (r.pass() ? "pass" : "FAIL") << "  " << r.theoremId
                << "  (" << r.instancesChecked << " instances, n<=" << bound
                << ")\n";
      if (!r.pass()) {
        std::cout << "      " << r.counterexamples.front().detail << "\n";
      }
    }
  }
  if (asJson) std::cout << report.dump() << "\n";
  return allPass ? 0 : 1;
}

int runSuiteCmd(const std::string& name, int maxN, bool asJson) {
  const std::vector<ctopo::SuiteCheck> checks = ctopo::runSuite(name, maxN);
  bool allPass = true;
  json report = json::array();
  for (const ctopo::SuiteCheck& c : checks) {
    allPass = allPass && c.pass;
    if (asJson) {
      report.push_back({{"name", c.name}, {"pass", c.pass},
                        {"detail", c.detail}});
    } else {
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
      if (!c.pass) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
  }
  if (asJson) {
    std::cout << json{{"suite", name}, {"pass", allPass},
                      {"checks", report}}
                     .dump()
              << "\n";
  } else {
    std::cout << (allPass ? "all checks passed" : "FAILURES present") << "\n";
  }
  return allPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with countable/finite-frontier open sets"};
  app.require_subcommand(1);

  std::string expr, mapSel = "id", topoSel, codSel, idealSel, familyText,
              setsText, theorem, suiteName;
  int maxN = 3;
  bool evalJson = false, contJson = false, coverJson = false,
       oracleJson = false, suiteJson = false;

  CLI::App* evalCmd = app.add_subcommand("eval", "evaluate an expression");
  evalCmd->add_option("--expr", expr, "expression text")->required();
  evalCmd->add_flag("--json", evalJson, "JSON output");

  CLI::App* contCmd =
      app.add_subcommand("cont", "continuity verdict for a map");
  contCmd->add_option("--map", mapSel, "id | const:<q> | affine:<a>,<b>");
  contCmd->add_option("--topology", topoSel, "domain topology selector")
      ->required();
  contCmd->add_option("--cod-topology", codSel,
                      "codomain topology (defaults to --topology)");
  contCmd->add_option("--ideal", idealSel, "finite | countable")->required();
  contCmd->add_option("--family", familyText,
                      "semicolon-separated open sets to test against");
  contCmd->add_flag("--json", contJson, "JSON output");

  CLI::App* coverCmd = app.add_subcommand("cover", "analyze a finite cover");
  coverCmd->add_option("--topology", topoSel, "topology selector")->required();
  coverCmd->add_option("--ideal", idealSel, "finite | countable")->required();
  coverCmd
      ->add_option("--sets", setsText,
                   "semicolon-separated intervals, e.g. \"[-1,0.5);(-0.5,1]\"")
      ->required();
  coverCmd->add_flag("--json", coverJson, "JSON output");

  CLI::App* oracleCmd =
      app.add_subcommand("oracle", "exhaustive finite-model theorem check");
  oracleCmd->add_option("--theorem", theorem, "theorem id or 'all'")
      ->required();
  oracleCmd->add_option("--max-n", maxN, "largest universe size");
  oracleCmd->add_flag("--json", oracleJson, "JSON output");

  CLI::App* suiteCmd = app.add_subcommand("suite", "run a batch suite");
  suiteCmd
      ->add_option("name", suiteName,
                   "paper-examples | theorems | counterexamples")
      ->required();
  suiteCmd->add_option("--max-n", maxN, "largest universe size");
  suiteCmd->add_flag("--json", suiteJson, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (evalCmd->parsed()) return runEval(expr, evalJson);
    if (contCmd->parsed()) {
      return runCont(mapSel, topoSel, codSel, idealSel, familyText, contJson);
    }
    if (coverCmd->parsed()) {
      return runCover(topoSel, idealSel, setsText, coverJson);
    }
    if (oracleCmd->parsed()) return runOracle(theorem, maxN, oracleJson);
    if (suiteCmd->parsed()) return runSuiteCmd(suiteName, maxN, suiteJson);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
