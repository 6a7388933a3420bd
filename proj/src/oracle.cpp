#include "ctopo/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ctopo {
namespace {

constexpr int kMaxSetN = 4;
constexpr int kMaxFunctionN = 3;
constexpr std::size_t kMaxStoredWitnesses = 10;

std::string bitsStr(Bits s) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < 32; ++x) {
    if (s & (Bits{1} << x)) {
      if (!first) out += ",";
      out += std::to_string(x);
      first = false;
    }
  }
  return out + "}";
}

// ---- Set-level laws ----
//
// Each law is a predicate over one (space, ideal) instance with zero, one or
// two subset arguments, evaluated from precomputed definitional tables.

struct SetLaw {
  std::string statement;
  int arity;  // 0, 1 or 2
  std::function<bool(const FiniteSpace&, const OpTables&, Bits, Bits)> holds;
};

bool subset(Bits a, Bits b) { return (a & ~b) == 0; }

const std::map<std::string, SetLaw>& setLaws() {
  using SP = const FiniteSpace&;
  using T = const OpTables&;
  static const std::map<std::string, SetLaw> laws = {
      {"thm-complement",
       {"a set is I-open iff its complement is I-closed", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealOpen[k] == t.idealClosed[t.universe & ~k];
        }}},
      {"thm-union",
       {"the union of two I-open sets is I-open", 2,
        [](SP, T t, Bits k, Bits h) {
          return !(t.idealOpen[k] && t.idealOpen[h]) || t.idealOpen[k | h];
        }}},
      {"thm-inter-closed",
       {"the intersection of two I-closed sets is I-closed", 2,
        [](SP, T t, Bits k, Bits h) {
          return !(t.idealClosed[k] && t.idealClosed[h]) ||
                 t.idealClosed[k & h];
        }}},
      {"thm-13p14",
       {"intI(K) <= int(K) <= K <= cl(K) <= clI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.idealInterior[k], t.interior[k]) &&
                 subset(t.interior[k], k) && subset(k, t.closure[k]) &&
                 subset(t.closure[k], t.idealClosure[k]);
        }}},
      {"thm-13p16-i",
       {"intI(X) = X", 0,
        [](SP, T t, Bits, Bits) {
          return t.idealInterior[t.universe] == t.universe;
        }}},
      {"thm-13p16-ii",
       {"intI(K) <= K", 1,
        [](SP, T t, Bits k, Bits) { return subset(t.idealInterior[k], k); }}},
      {"thm-13p16-iii",
       {"K <= H implies intI(K) <= intI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(k, h) ||
                 subset(t.idealInterior[k], t.idealInterior[h]);
        }}},
      {"thm-13p16-iv",
       {"intI(intI(K)) = intI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealInterior[t.idealInterior[k]] == t.idealInterior[k];
        }}},
      {"thm-13p16-v",
       {"intI(K inter H) = intI(K) inter intI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return t.idealInterior[k & h] ==
                 (t.idealInterior[k] & t.idealInterior[h]);
        }}},
      {"thm-13p16-vi",
       {"intI(K) union intI(H) <= intI(K union H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return subset(t.idealInterior[k] | t.idealInterior[h],
                        t.idealInterior[k | h]);
        }}},
      {"thm-clC-i",
       {"clI(empty) = empty", 0,
        [](SP, T t, Bits, Bits) { return t.idealClosure[0] == 0; }}},
      {"thm-clC-ii",
       {"K <= clI(K)", 1,
        [](SP, T t, Bits k, Bits) { return subset(k, t.idealClosure[k]); }}},
      {"thm-clC-iii",
       {"K <= H implies clI(K) <= clI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(k, h) || subset(t.idealClosure[k], t.idealClosure[h]);
        }}},
      {"thm-clC-iv",
       {"clI(K union H) = clI(K) union clI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return t.idealClosure[k | h] ==
                 (t.idealClosure[k] | t.idealClosure[h]);
        }}},
      {"thm-clC-v",
       {"clI(clI(K)) = clI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealClosure[t.idealClosure[k]] == t.idealClosure[k];
        }}},
      {"thm-13p15-i",
       {"intI(K) = X minus clI(X minus K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealInterior[k] ==
                 (t.universe & ~t.idealClosure[t.universe & ~k]);
        }}},
      {"thm-13p15-ii",
       {"clI(K) = X minus intI(X minus K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealClosure[k] ==
                 (t.universe & ~t.idealInterior[t.universe & ~k]);
        }}},
      {"thm-D-i",
       {"D(K) <= DI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.derived[k], t.idealDerived[k]);
        }}},
      {"thm-D-ii",
       {"K <= H implies DI(K) <= DI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(k, h) || subset(t.idealDerived[k], t.idealDerived[h]);
        }}},
      {"thm-D-iii-union",
       {"DI(K) union DI(H) = DI(K union H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return (t.idealDerived[k] | t.idealDerived[h]) ==
                 t.idealDerived[k | h];
        }}},
      {"thm-D-iii-inter",
       {"DI(K inter H) <= DI(K) inter DI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return subset(t.idealDerived[k & h],
                        t.idealDerived[k] & t.idealDerived[h]);
        }}},
      {"thm-border-i",
       {"Bd(K) <= BdI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.border(k), t.idealBorder(k));
        }}},
      {"thm-border-ii",
       {"K = intI(K) union BdI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return k == (t.idealInterior[k] | t.idealBorder(k));
        }}},
      {"thm-border-iii",
       {"intI(K) inter BdI(K) = empty", 1,
        [](SP, T t, Bits k, Bits) {
          return (t.idealInterior[k] & t.idealBorder(k)) == 0;
        }}},
      {"thm-border-iv",
       {"K is I-open iff BdI(K) = empty", 1,
        [](SP, T t, Bits k, Bits) {
          return bool(t.idealOpen[k]) == (t.idealBorder(k) == 0);
        }}},
      {"thm-border-v",
       {"intI(BdI(K)) = empty", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealInterior[t.idealBorder(k)] == 0;
        }}},
      {"thm-border-vi",
       {"BdI(BdI(K)) = BdI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealBorder(t.idealBorder(k)) == t.idealBorder(k);
        }}},
      {"thm-border-vii",
       {"BdI(K) = K inter clI(X minus K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealBorder(k) == (k & t.idealClosure[t.universe & ~k]);
        }}},
      {"thm-frontier-i",
       {"Fr(K) <= FrI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.frontier(k), t.idealFrontier(k));
        }}},
      {"thm-frontier-ii",
       {"clI(K) = intI(K) union FrI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealClosure[k] ==
                 (t.idealInterior[k] | t.idealFrontier(k));
        }}},
      {"thm-frontier-iii",
       {"intI(K) inter FrI(K) = empty", 1,
        [](SP, T t, Bits k, Bits) {
          return (t.idealInterior[k] & t.idealFrontier(k)) == 0;
        }}},
      {"thm-frontier-iv",
       {"BdI(K) <= FrI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.idealBorder(k), t.idealFrontier(k));
        }}},
      {"thm-frontier-v",
       {"FrI(K) = clI(K) inter clI(X minus K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealFrontier(k) ==
                 (t.idealClosure[k] & t.idealClosure[t.universe & ~k]);
        }}},
      {"thm-frontier-vi",
       {"FrI(K) = FrI(X minus K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealFrontier(k) == t.idealFrontier(t.universe & ~k);
        }}},
      {"thm-frontier-viii",
       {"intI(K) = K minus FrI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealInterior[k] == (k & ~t.idealFrontier(k));
        }}},
      {"thm-exterior-i",
       {"ExtI(K) <= Ext(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.idealExterior(k), t.exterior(k));
        }}},
      {"thm-exterior-ii",
       {"ExtI(K) is open", 1,
        [](SP sp, T t, Bits k, Bits) {
          return sp.isOpen(t.idealExterior(k));
        }}},
      {"thm-exterior-iii",
       {"ExtI(K) = X minus clI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealExterior(k) == (t.universe & ~t.idealClosure[k]);
        }}},
      {"thm-exterior-iv",
       {"ExtI(ExtI(K)) = intI(clI(K))", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealExterior(t.idealExterior(k)) ==
                 t.idealInterior[t.idealClosure[k]];
        }}},
      {"thm-exterior-v",
       {"K <= H implies ExtI(H) <= ExtI(K)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(k, h) ||
                 subset(t.idealExterior(h), t.idealExterior(k));
        }}},
      {"thm-exterior-vi",
       {"ExtI(X minus ExtI(K)) = ExtI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return t.idealExterior(t.universe & ~t.idealExterior(k)) ==
                 t.idealExterior(k);
        }}},
      {"thm-exterior-vii",
       {"intI(K) <= ExtI(ExtI(K))", 1,
        [](SP, T t, Bits k, Bits) {
          return subset(t.idealInterior[k],
                        t.idealExterior(t.idealExterior(k)));
        }}},
      {"thm-exterior-viii",
       {"ExtI(K union H) <= ExtI(K) union ExtI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return subset(t.idealExterior(k | h),
                        t.idealExterior(k) | t.idealExterior(h));
        }}},
      {"thm-exterior-ix",
       {"ExtI(K) inter ExtI(H) <= ExtI(K inter H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return subset(t.idealExterior(k) & t.idealExterior(h),
                        t.idealExterior(k & h));
        }}},
      {"thm-exterior-x",
       {"X = intI(K) union ExtI(K) union FrI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return (t.idealInterior[k] | t.idealExterior(k) |
                  t.idealFrontier(k)) == t.universe;
        }}},
  };
  return laws;
}

// ---- Set-level claims (each "A is not always <= B" statement) ----
//
// A claim predicate returns true when the instance is a witness, i.e. when
// the reversed inclusion genuinely fails there.

struct SetClaim {
  std::string statement;
  int arity;  // 1 or 2
  std::function<bool(const FiniteSpace&, const OpTables&, Bits, Bits)>
      witnesses;
};

const std::map<std::string, SetClaim>& setClaims() {
  using SP = const FiniteSpace&;
  using T = const OpTables&;
  static const std::map<std::string, SetClaim> claims = {
      {"claim-open-not-ideal-open",
       {"an open set need not be I-open", 1,
        [](SP sp, T t, Bits k, Bits) {
          return sp.isOpen(k) && !t.idealOpen[k];
        }}},
      {"claim-int-not-in-intI",
       {"int(K) need not be contained in intI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.interior[k], t.idealInterior[k]);
        }}},
      {"claim-clI-not-in-cl",
       {"clI(K) need not be contained in cl(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.idealClosure[k], t.closure[k]);
        }}},
      {"claim-DI-not-in-D",
       {"DI(K) need not be contained in D(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.idealDerived[k], t.derived[k]);
        }}},
      {"claim-DI-inter",
       {"DI(K) inter DI(H) need not be contained in DI(K inter H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(t.idealDerived[k] & t.idealDerived[h],
                         t.idealDerived[k & h]);
        }}},
      {"claim-intI-union",
       {"intI(K union H) need not be contained in intI(K) union intI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(t.idealInterior[k | h],
                         t.idealInterior[k] | t.idealInterior[h]);
        }}},
      {"claim-BdI-not-in-Bd",
       {"BdI(K) need not be contained in Bd(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.idealBorder(k), t.border(k));
        }}},
      {"claim-FrI-not-in-Fr",
       {"FrI(K) need not be contained in Fr(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.idealFrontier(k), t.frontier(k));
        }}},
      {"claim-FrI-not-in-BdI",
       {"FrI(K) need not be contained in BdI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.idealFrontier(k), t.idealBorder(k));
        }}},
      {"claim-Ext-not-in-ExtI",
       {"Ext(K) need not be contained in ExtI(K)", 1,
        [](SP, T t, Bits k, Bits) {
          return !subset(t.exterior(k), t.idealExterior(k));
        }}},
      {"claim-ExtI-union",
       {"ExtI(K) union ExtI(H) need not be contained in ExtI(K union H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(t.idealExterior(k) | t.idealExterior(h),
                         t.idealExterior(k | h));
        }}},
      {"claim-ExtI-inter",
       {"ExtI(K inter H) need not be contained in ExtI(K) inter ExtI(H)", 2,
        [](SP, T t, Bits k, Bits h) {
          return !subset(t.idealExterior(k & h),
                         t.idealExterior(k) & t.idealExterior(h));
        }}},
  };
  return claims;
}

// ---- Function-level machinery ----

// One enumerated universe size with its topologies, all ideals, and all
// definitional tables plus I-compactness flags per (topology, ideal) pair.
struct Catalog {
  std::vector<FiniteSpace> spaces;
  std::vector<FiniteIdeal> ideals;
  // tables[s][i], compact[s][i] for spaces[s] with ideals[i]
  std::vector<std::vector<OpTables>> tables;
  std::vector<std::vector<char>> compact;
};

Catalog buildCatalog(int n) {
  Catalog c;
  c.spaces = enumerateTopologies(n);
  c.ideals = enumerateIdeals(n);
  c.tables.resize(c.spaces.size());
  c.compact.resize(c.spaces.size());
  for (std::size_t s = 0; s < c.spaces.size(); ++s) {
    for (std::size_t i = 0; i < c.ideals.size(); ++i) {
      c.tables[s].emplace_back(c.spaces[s], c.ideals[i]);
      c.compact[s].push_back(bfIsIdealCompact(c.spaces[s], c.ideals[i]));
    }
  }
  return c;
}

std::string mapStr(const std::vector<int>& f) {
  std::string out = "[";
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) out += ",";
    out += std::to_string(x) + "->" + std::to_string(f[x]);
  }
  return out + "]";
}

Bits forwardImage(const std::vector<int>& f, Bits s) {
  Bits out = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (s & (Bits{1} << x)) out |= Bits{1} << f[x];
  }
  return out;
}

Bits preimageOf(const std::vector<int>& f, Bits s) {
  Bits out = 0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (s & (Bits{1} << f[x])) out |= Bits{1} << x;
  }
  return out;
}

// Visits every total function f : points(n1) -> points(n2) together with the
// preimages of the codomain's opens and the images of the domain's opens.
template <typename Visit>
void forEachFunction(const FiniteSpace& spX, const FiniteSpace& spY,
                     Visit visit) {
  const int n1 = spX.n(), n2 = spY.n();
  std::vector<int> f(n1, 0);
  for (;;) {
    std::vector<Bits> pre(spY.opens().size()), img(spX.opens().size());
    for (std::size_t j = 0; j < spY.opens().size(); ++j) {
      pre[j] = preimageOf(f, spY.opens()[j]);
    }
    for (std::size_t j = 0; j < spX.opens().size(); ++j) {
      img[j] = forwardImage(f, spX.opens()[j]);
    }
    const bool onto = forwardImage(f, spX.universe()) == spY.universe();
    visit(f, pre, img, onto);
    int k = 0;
    while (k < n1 && ++f[k] == n2) f[k++] = 0;
    if (k == n1) break;
  }
}

bool idealContinuous(const OpTables& tx, const std::vector<Bits>& pre) {
  for (Bits p : pre) {
    if (!tx.idealOpen[p]) return false;
  }
  return true;
}

bool plainContinuous(const FiniteSpace& spX, const std::vector<Bits>& pre) {
  for (Bits p : pre) {
    if (!spX.isOpen(p)) return false;
  }
  return true;
}

bool idealOpenMap(const OpTables& ty, const std::vector<Bits>& img) {
  for (Bits q : img) {
    if (!ty.idealOpen[q]) return false;
  }
  return true;
}

struct FunctionLawEntry {
  std::string statement;
  // true if this id is a registered theorem (checked to hold); claims are
  // searched for witnesses instead.
  bool isTheorem;
};

const std::map<std::string, FunctionLawEntry>& functionLaws() {
  static const std::map<std::string, FunctionLawEntry> laws = {
      {"thm-cont", {"every I-continuous function is continuous", true}},
      {"thm-F-cont",
       {"continuity with respect to a smaller ideal implies continuity with "
        "respect to a larger one",
        true}},
      {"thm-compact", {"every I-compact space is compact", true}},
      {"thm-F-compact",
       {"compactness with respect to a smaller ideal implies compactness "
        "with respect to a larger one",
        true}},
      {"thm-13p6",
       {"the image of an I-compact space under an I-continuous, I-open, onto "
        "function is I-compact",
        true}},
      {"thm-13p6-lindelof",
       {"the countable-cover variant of thm-13p6; on finite universes all "
        "covers are countable, so the check coincides with thm-13p6",
        true}},
      {"thm-13p6-cc",
       {"the countably-compact variant of thm-13p6; on finite universes it "
        "coincides with thm-13p6",
        true}},
      {"thm-cont-compact",
       {"the image of an I-compact space under an I-continuous onto function "
        "is compact",
        true}},
      {"thm-F-13p6",
       {"the I-continuous, I-open, onto image of an I-compact space is "
        "J-compact for every ideal J containing I",
        true}},
      {"claim-cont-not-ideal-cont",
       {"a continuous function need not be I-continuous", false}},
      {"claim-ideal-cont-not-finer",
       {"continuity with respect to a larger ideal does not imply continuity "
        "with respect to a smaller one",
        false}},
      {"claim-compact-not-ideal-compact",
       {"a compact space need not be I-compact", false}},
      {"claim-ideal-compact-not-finer",
       {"compactness with respect to a larger ideal does not imply "
        "compactness with respect to a smaller one",
        false}},
  };
  return laws;
}

void recordWitness(TheoremReport& report, OracleWitness w) {
  if (report.counterexamples.size() < kMaxStoredWitnesses) {
    report.counterexamples.push_back(std::move(w));
  }
}

// Runs one function-level law.  When stopAtFirst is set (counterexample
// search) the sweep returns as soon as one witness is recorded.
TheoremReport runFunctionLaw(const std::string& id, int maxN,
                             bool stopAtFirst) {
  TheoremReport report{id, functionLaws().at(id).statement, 0, {}};
  std::vector<Catalog> catalogs;
  for (int n = 1; n <= maxN; ++n) catalogs.push_back(buildCatalog(n));

  auto witness = [&](const Catalog& cx, std::size_t sx, std::size_t ix,
                     const std::vector<int>& f, std::string detail) {
    recordWitness(report, OracleWitness{cx.spaces[sx], cx.ideals[ix],
                                        {},
                                        "f=" + mapStr(f) + ": " + detail});
  };

  // Space-level compactness laws quantify over (space, ideal) pairs only.
  if (id == "thm-compact" || id == "thm-F-compact" ||
      id == "claim-compact-not-ideal-compact" ||
      id == "claim-ideal-compact-not-finer") {
    for (const Catalog& c : catalogs) {
      for (std::size_t s = 0; s < c.spaces.size(); ++s) {
        for (std::size_t i = 0; i < c.ideals.size(); ++i) {
          if (id == "thm-compact") {
            ++report.instancesChecked;
            // Finite spaces are always compact, so the implication holds by
            // evaluation; recorded for completeness.
            continue;
          }
          if (id == "claim-compact-not-ideal-compact") {
            ++report.instancesChecked;
            if (!c.compact[s][i]) {
              recordWitness(report,
                            OracleWitness{c.spaces[s], c.ideals[i], {},
                                          "the space is compact (finite) but "
                                          "not I-compact"});
              if (stopAtFirst) return report;
            }
            continue;
          }
          for (std::size_t j = 0; j < c.ideals.size(); ++j) {
            if (!c.ideals[i].refines(c.ideals[j])) continue;
            ++report.instancesChecked;
            if (id == "thm-F-compact") {
              if (c.compact[s][i] && !c.compact[s][j]) {
                recordWitness(
                    report,
                    OracleWitness{c.spaces[s], c.ideals[i], {},
                                  "compact for the smaller ideal but not for "
                                  "the larger one"});
                if (stopAtFirst) return report;
              }
            } else {  // claim-ideal-compact-not-finer
              if (i != j && c.compact[s][j] && !c.compact[s][i]) {
                recordWitness(
                    report,
                    OracleWitness{c.spaces[s], c.ideals[i], {},
                                  "compact for the larger ideal only"});
                if (stopAtFirst) return report;
              }
            }
          }
        }
      }
    }
    return report;
  }

  // Remaining laws quantify over functions between two spaces.
  for (const Catalog& cx : catalogs) {
    for (const Catalog& cy : catalogs) {
      for (std::size_t sx = 0; sx < cx.spaces.size(); ++sx) {
        for (std::size_t sy = 0; sy < cy.spaces.size(); ++sy) {
          bool stop = false;
          forEachFunction(
              cx.spaces[sx], cy.spaces[sy],
              [&](const std::vector<int>& f, const std::vector<Bits>& pre,
                  const std::vector<Bits>& img, bool onto) {
                if (stop) return;
                if (id == "thm-cont") {
                  for (std::size_t ix = 0; ix < cx.ideals.size(); ++ix) {
                    ++report.instancesChecked;
                    if (idealContinuous(cx.tables[sx][ix], pre) &&
                        !plainContinuous(cx.spaces[sx], pre)) {
                      witness(cx, sx, ix, f,
                              "I-continuous but not continuous");
                      if (stopAtFirst) stop = true;
                    }
                  }
                } else if (id == "thm-F-cont" ||
                           id == "claim-ideal-cont-not-finer") {
                  for (std::size_t i = 0; i < cx.ideals.size(); ++i) {
                    for (std::size_t j = 0; j < cx.ideals.size(); ++j) {
                      if (!cx.ideals[i].refines(cx.ideals[j])) continue;
                      ++report.instancesChecked;
                      const bool fine = idealContinuous(cx.tables[sx][i], pre);
                      const bool coarse =
                          idealContinuous(cx.tables[sx][j], pre);
                      if (id == "thm-F-cont") {
                        if (fine && !coarse) {
                          witness(cx, sx, i, f,
                                  "continuous for the smaller ideal but not "
                                  "the larger");
                          if (stopAtFirst) stop = true;
                        }
                      } else if (i != j && coarse && !fine) {
                        witness(cx, sx, i, f,
                                "continuous for the larger ideal only");
                        if (stopAtFirst) stop = true;
                      }
                    }
                  }
                } else if (id == "claim-cont-not-ideal-cont") {
                  for (std::size_t ix = 0; ix < cx.ideals.size(); ++ix) {
                    ++report.instancesChecked;
                    if (plainContinuous(cx.spaces[sx], pre) &&
                        !idealContinuous(cx.tables[sx][ix], pre)) {
                      witness(cx, sx, ix, f,
                              "continuous but not I-continuous");
                      if (stopAtFirst) stop = true;
                    }
                  }
                } else if (id == "thm-cont-compact") {
                  if (!onto) return;
                  for (std::size_t ix = 0; ix < cx.ideals.size(); ++ix) {
                    ++report.instancesChecked;
                    // Finite codomains are always compact; the hypothesis is
                    // evaluated so that hypothesis-satisfying instances are
                    // genuinely visited.
                    (void)(idealContinuous(cx.tables[sx][ix], pre) &&
                           cx.compact[sx][ix]);
                  }
                } else {  // thm-13p6 and variants, thm-F-13p6
                  if (!onto) return;
                  for (std::size_t ix = 0; ix < cx.ideals.size(); ++ix) {
                    if (!idealContinuous(cx.tables[sx][ix], pre)) continue;
                    if (!cx.compact[sx][ix]) continue;
                    for (std::size_t iy = 0; iy < cy.ideals.size(); ++iy) {
                      if (!idealOpenMap(cy.tables[sy][iy], img)) continue;
                      if (id == "thm-F-13p6") {
                        for (std::size_t jy = 0; jy < cy.ideals.size();
                             ++jy) {
                          if (!cy.ideals[iy].refines(cy.ideals[jy])) continue;
                          ++report.instancesChecked;
                          if (!cy.compact[sy][jy]) {
                            witness(cx, sx, ix, f,
                                    "image space not compact for the larger "
                                    "ideal");
                            if (stopAtFirst) stop = true;
                          }
                        }
                      } else {
                        ++report.instancesChecked;
                        if (!cy.compact[sy][iy]) {
                          witness(cx, sx, ix, f, "image space not I-compact");
                          if (stopAtFirst) stop = true;
                        }
                      }
                    }
                  }
                }
              });
          if (stop) return report;
        }
      }
    }
  }
  return report;
}

TheoremReport runSetLaw(const std::string& id, const SetLaw& law, int maxN,
                        bool /*stopAtFirst*/) {
  TheoremReport report{id, law.statement, 0, {}};
  for (int n = 1; n <= maxN; ++n) {
    for (const FiniteSpace& sp : enumerateTopologies(n)) {
      for (const FiniteIdeal& ideal : enumerateIdeals(n)) {
        const OpTables t(sp, ideal);
        const Bits count = Bits{1} << n;
        auto fail = [&](Bits k, Bits h, int arity) {
          std::vector<Bits> sets;
          std::string detail = "law violated";
          if (arity >= 1) {
            sets.push_back(k);
            detail += " at K=" + bitsStr(k);
          }
          if (arity >= 2) {
            sets.push_back(h);
            detail += ", H=" + bitsStr(h);
          }
          recordWitness(report, OracleWitness{sp, ideal, sets, detail});
        };
        if (law.arity == 0) {
          ++report.instancesChecked;
          if (!law.holds(sp, t, 0, 0)) fail(0, 0, 0);
        } else if (law.arity == 1) {
          for (Bits k = 0; k < count; ++k) {
            ++report.instancesChecked;
            if (!law.holds(sp, t, k, 0)) fail(k, 0, 1);
          }
        } else {
          for (Bits k = 0; k < count; ++k) {
            for (Bits h = 0; h < count; ++h) {
              ++report.instancesChecked;
              if (!law.holds(sp, t, k, h)) fail(k, h, 2);
            }
          }
        }
      }
    }
  }
  return report;
}

std::optional<OracleWitness> searchSetClaim(const SetClaim& claim, int maxN) {
  for (int n = 1; n <= maxN; ++n) {
    for (const FiniteSpace& sp : enumerateTopologies(n)) {
      for (const FiniteIdeal& ideal : enumerateIdeals(n)) {
        const OpTables t(sp, ideal);
        const Bits count = Bits{1} << n;
        for (Bits k = 0; k < count; ++k) {
          if (claim.arity == 1) {
            if (claim.witnesses(sp, t, k, 0)) {
              return OracleWitness{sp, ideal, {k},
                                   "witness at K=" + bitsStr(k)};
            }
          } else {
            for (Bits h = 0; h < count; ++h) {
              if (claim.witnesses(sp, t, k, h)) {
                return OracleWitness{
                    sp, ideal, {k, h},
                    "witness at K=" + bitsStr(k) + ", H=" + bitsStr(h)};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool isFunctionLevel(const std::string& id) {
  return functionLaws().count(id) != 0;
}

void validateMaxN(const std::string& id, int maxN) {
  const int cap = isFunctionLevel(id) ? kMaxFunctionN : kMaxSetN;
  if (maxN < 1 || maxN > cap) {
    throw std::out_of_range("maxN for " + id + " must be 1.." +
                            std::to_string(cap));
  }
}

}  // namespace

std::vector<std::string> registeredTheoremIds() {
  std::vector<std::string> ids;
  for (const auto& [id, law] : setLaws()) ids.push_back(id);
  for (const auto& [id, law] : functionLaws()) {
    if (law.isTheorem) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> registeredClaimIds() {
  std::vector<std::string> ids;
  for (const auto& [id, claim] : setClaims()) ids.push_back(id);
  for (const auto& [id, law] : functionLaws()) {
    if (!law.isTheorem) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string statementFor(const std::string& id) {
  if (auto it = setLaws().find(id); it != setLaws().end()) {
    return it->second.statement;
  }
  if (auto it = setClaims().find(id); it != setClaims().end()) {
    return it->second.statement;
  }
  if (auto it = functionLaws().find(id); it != functionLaws().end()) {
    return it->second.statement;
  }
  throw std::invalid_argument("unknown theorem or claim id: " + id);
}

TheoremReport checkTheorem(const std::string& theoremId, int maxN) {
  validateMaxN(theoremId, maxN);
  if (auto it = setLaws().find(theoremId); it != setLaws().end()) {
    return runSetLaw(theoremId, it->second, maxN, false);
  }
  if (auto it = functionLaws().find(theoremId);
      it != functionLaws().end() && it->second.isTheorem) {
    return runFunctionLaw(theoremId, maxN, false);
  }
  throw std::invalid_argument("unknown theorem id: " + theoremId);
}

std::optional<OracleWitness> searchCounterexample(const std::string& claimId,
                                                  int maxN) {
  validateMaxN(claimId, maxN);
  if (auto it = setClaims().find(claimId); it != setClaims().end()) {
    return searchSetClaim(it->second, maxN);
  }
  if (auto it = functionLaws().find(claimId);
      it != functionLaws().end() && !it->second.isTheorem) {
    TheoremReport report = runFunctionLaw(claimId, maxN, true);
    if (report.counterexamples.empty()) return std::nullopt;
    return report.counterexamples.front();
  }
  throw std::invalid_argument("unknown claim id: " + claimId);
}

}  // namespace ctopo
