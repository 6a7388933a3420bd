#pragma once

// Finite topological spaces and set ideals on universes of up to five points,
// with every operator computed directly from its defining equation by brute
// force.  Subsets are bitmasks over points 0..n-1.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ctopo {

using Bits = std::uint32_t;

// A topology on points 0..n-1, given by its full family of open sets.
// Construction validates the axioms: contains the empty set and the universe,
// and is closed under pairwise union and intersection (which suffices for
// finite families).
class FiniteSpace {
 public:
  FiniteSpace(int n, std::vector<Bits> opens);

  int n() const { return n_; }
  Bits universe() const { return (Bits{1} << n_) - 1; }
  const std::vector<Bits>& opens() const { return opens_; }
  bool isOpen(Bits s) const;
  bool isClosed(Bits s) const;

  bool operator==(const FiniteSpace&) const = default;

 private:
  int n_ = 0;
  std::vector<Bits> opens_;  // sorted, deduplicated
};

// A set ideal on points 0..n-1: a family containing the empty set, closed
// downward and under pairwise union.  Membership is the "small" predicate.
class FiniteIdeal {
 public:
  FiniteIdeal(int n, std::vector<Bits> members);

  int n() const { return n_; }
  const std::vector<Bits>& members() const { return members_; }
  bool small(Bits s) const;
  // Inclusion of ideals: every member of this ideal belongs to the other.
  bool refines(const FiniteIdeal& coarser) const;

  bool operator==(const FiniteIdeal&) const = default;

 private:
  int n_ = 0;
  std::vector<Bits> members_;  // sorted, deduplicated
};

// A (space, ideal) pair with JSON I/O:
//   {"n":3,"opens":[[],[0],[0,1,2]],"ideal":[[],[2]]}
struct FiniteInstance {
  FiniteSpace space;
  FiniteIdeal ideal;

  std::string toJson() const;
  static FiniteInstance fromJson(const std::string& text);
};

// All topologies on n labeled points, each exactly once (1, 4, 29, 355, 6942
// for n = 1..5).  Throws std::out_of_range unless 1 <= n <= 5.
std::vector<FiniteSpace> enumerateTopologies(int n);

// All set ideals on n points, each exactly once.  On a finite universe every
// ideal is the power set of its largest member, so there are 2^n of them.
std::vector<FiniteIdeal> enumerateIdeals(int n);

// ---- Definitional operators (no closed forms, direct enumeration) ----

// Classical operators from the open-set family alone.
Bits bfInterior(const FiniteSpace& sp, Bits s);
Bits bfClosure(const FiniteSpace& sp, Bits s);
Bits bfDerived(const FiniteSpace& sp, Bits s);   // limit points
Bits bfFrontier(const FiniteSpace& sp, Bits s);  // cl(S) \ int(S)

// A set is I-open when it is open and its frontier is small; I-closed when
// its complement is I-open.
bool bfIsIdealOpen(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);
bool bfIsIdealClosed(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);

// I-interior: union of all I-open subsets of S.
Bits bfIdealInterior(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);
// I-closure: intersection of all I-closed supersets of S.
Bits bfIdealClosure(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);
// I-derived set: points x such that every I-open set containing x meets
// S \ {x}.
Bits bfIdealDerived(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);
Bits bfIdealBorder(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);
Bits bfIdealFrontier(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);
Bits bfIdealExterior(const FiniteSpace& sp, const FiniteIdeal& id, Bits s);

// I-compactness: every open cover of the universe contains a subfamily of
// I-open members that still covers the universe.  Checked over all 2^|opens|
// subfamilies; throws std::length_error when the family is too large.
bool bfIsIdealCompact(const FiniteSpace& sp, const FiniteIdeal& id);

// String-dispatched front end over the functions above.  Operator names:
// int, cl, D, Fr, intI, clI, DI, BdI, FrI, ExtI (set-valued, one argument)
// and isIOpen, isIClosed, isICompact (flag-valued; isICompact takes none).
// Throws std::invalid_argument for unknown names or wrong arity.
std::variant<Bits, bool> bfOperator(const FiniteSpace& sp,
                                    const FiniteIdeal& id,
                                    const std::string& op,
                                    const std::vector<Bits>& args);

// The same operators computed by the generic identities used on the real
// line instead of raw definitions: intI and clI through complement duality,
// BdI/FrI/ExtI through their closure identities, DI pointwise through clI.
// Agreement with the bf* route is the oracle cross-check.
Bits genericOperator(const FiniteSpace& sp, const FiniteIdeal& id,
                     const std::string& op, Bits s);

// ---- Precomputed operator tables ----

// All operator values for one (space, ideal) pair, indexed by subset bitmask.
// Built definitionally; used by the exhaustive theorem sweeps.
struct OpTables {
  OpTables(const FiniteSpace& sp, const FiniteIdeal& id);

  Bits universe;
  std::vector<Bits> interior, closure, derived;
  std::vector<Bits> idealInterior, idealClosure, idealDerived;
  std::vector<char> idealOpen, idealClosed;

  Bits frontier(Bits s) const { return closure[s] & ~interior[s]; }
  Bits border(Bits s) const { return s & ~interior[s]; }
  Bits idealFrontier(Bits s) const {
    return idealClosure[s] & ~idealInterior[s];
  }
  Bits idealBorder(Bits s) const { return s & ~idealInterior[s]; }
  Bits idealExterior(Bits s) const {
    return idealInterior[universe & ~s];
  }
  Bits exterior(Bits s) const { return interior[universe & ~s]; }
};

}  // namespace ctopo
