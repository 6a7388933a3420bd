#pragma once

// Batch regression suites: the worked-example fixtures over the real-line
// drivers, the exhaustive finite-model theorem sweep, and the counterexample
// search for every registered strict-inclusion claim.

#include <string>
#include <vector>

namespace ctopo {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // expected/actual or witness description
};

// Suite names: "paper-examples", "theorems", "counterexamples".  maxN bounds
// the finite-model suites (clamped to each law's own limit) and is ignored
// by the fixture suite.  Throws std::invalid_argument for unknown names.
std::vector<SuiteCheck> runSuite(const std::string& name, int maxN);

// The three worked-example fixture groups that make up "paper-examples":
// point-set classification, ideal operator values, and map/cover verdicts.
std::vector<SuiteCheck> classificationFixtures();
std::vector<SuiteCheck> operatorFixtures();
std::vector<SuiteCheck> functionFixtures();

}  // namespace ctopo
