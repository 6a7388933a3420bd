#pragma once

// Exhaustive verification of the operator laws and strict-inclusion claims
// over all finite spaces and ideals up to a given universe size.

#include <optional>
#include <string>
#include <vector>

#include "ctopo/finite_space.hpp"

namespace ctopo {

// One failing (or witnessing) instance: a space, an ideal, the subsets
// involved, and a human-readable account of the two sides that disagree.
struct OracleWitness {
  FiniteSpace space;
  FiniteIdeal ideal;
  std::vector<Bits> sets;
  std::string detail;
};

struct TheoremReport {
  std::string theoremId;
  std::string statement;
  long long instancesChecked = 0;
  std::vector<OracleWitness> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

// Registered law ids, e.g. "thm-complement", "thm-union", "thm-13p15-i",
// "thm-border-iv", "thm-exterior-x", "thm-cont", "thm-13p6".
std::vector<std::string> registeredTheoremIds();

// Registered strict-inclusion / non-reversibility claim ids, e.g.
// "claim-open-not-ideal-open", "claim-DI-not-in-D", "claim-ExtI-union".
std::vector<std::string> registeredClaimIds();

// Human-readable statement for a theorem or claim id.
std::string statementFor(const std::string& id);

// Checks one law over every (space, ideal, subsets) instance — or every
// (space, ideal, space, ideal, function) instance for function-level laws —
// with universe sizes 1..maxN.  Set-level laws allow maxN <= 4, function-level
// laws maxN <= 3.  Throws std::invalid_argument for unknown ids,
// std::out_of_range for maxN out of range.
TheoremReport checkTheorem(const std::string& theoremId, int maxN);

// Searches instances in enumeration order (smallest universe first,
// lexicographic subsets) for a witness refuting the reversed inclusion named
// by claimId.  Returns the first witness found, or nullopt if none exists up
// to maxN.
std::optional<OracleWitness> searchCounterexample(const std::string& claimId,
                                                  int maxN);

}  // namespace ctopo
