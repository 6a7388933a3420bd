#include "ctopo/finite_space.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace ctopo {
namespace {

std::vector<Bits> sortedUnique(std::vector<Bits> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void checkUniverseSize(int n) {
  if (n < 1 || n > 5) throw std::out_of_range("universe size must be 1..5");
}

}  // namespace

FiniteSpace::FiniteSpace(int n, std::vector<Bits> opens)
    : n_(n), opens_(sortedUnique(std::move(opens))) {
  checkUniverseSize(n);
  const Bits full = universe();
  for (Bits u : opens_) {
    if (u & ~full) throw std::invalid_argument("open set outside universe");
  }
  auto has = [&](Bits s) {
    return std::binary_search(opens_.begin(), opens_.end(), s);
  };
  if (!has(0) || !has(full)) {
    throw std::invalid_argument("topology must contain empty set and universe");
  }
  for (Bits u : opens_) {
    for (Bits v : opens_) {
      if (!has(u | v) || !has(u & v)) {
        throw std::invalid_argument(
            "topology must be closed under union and intersection");
      }
    }
  }
}

bool FiniteSpace::isOpen(Bits s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

bool FiniteSpace::isClosed(Bits s) const { return isOpen(universe() & ~s); }

FiniteIdeal::FiniteIdeal(int n, std::vector<Bits> members)
    : n_(n), members_(sortedUnique(std::move(members))) {
  checkUniverseSize(n);
  const Bits full = (Bits{1} << n_) - 1;
  for (Bits m : members_) {
    if (m & ~full) throw std::invalid_argument("ideal member outside universe");
  }
  if (members_.empty() || members_.front() != 0) {
    throw std::invalid_argument("ideal must contain the empty set");
  }
  for (Bits m : members_) {
    // Downward closure: every subset of a member is a member.
    for (Bits t = m; ; t = (t - 1) & m) {
      if (!small(t)) throw std::invalid_argument("ideal not downward closed");
      if (t == 0) break;
    }
    for (Bits k : members_) {
      if (!small(m | k)) {
        throw std::invalid_argument("ideal not closed under union");
      }
    }
  }
}

bool FiniteIdeal::small(Bits s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool FiniteIdeal::refines(const FiniteIdeal& coarser) const {
  for (Bits m : members_) {
    if (!coarser.small(m)) return false;
  }
  return true;
}

namespace {

nlohmann::json bitsToJson(Bits s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int x = 0; x < 32; ++x) {
    if (s & (Bits{1} << x)) arr.push_back(x);
  }
  return arr;
}

Bits bitsFromJson(const nlohmann::json& arr, int n) {
  Bits s = 0;
  for (const auto& e : arr) {
    const int x = e.get<int>();
    if (x < 0 || x >= n) throw std::invalid_argument("point out of range");
    s |= Bits{1} << x;
  }
  return s;
}

}  // namespace

std::string FiniteInstance::toJson() const {
  nlohmann::json j;
  j["n"] = space.n();
  j["opens"] = nlohmann::json::array();
  for (Bits u : space.opens()) j["opens"].push_back(bitsToJson(u));
  j["ideal"] = nlohmann::json::array();
  for (Bits m : ideal.members()) j["ideal"].push_back(bitsToJson(m));
  return j.dump();
}

FiniteInstance FiniteInstance::fromJson(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  std::vector<Bits> opens, members;
  for (const auto& arr : j.at("opens")) opens.push_back(bitsFromJson(arr, n));
  for (const auto& arr : j.at("ideal")) members.push_back(bitsFromJson(arr, n));
  return FiniteInstance{FiniteSpace(n, std::move(opens)),
                        FiniteIdeal(n, std::move(members))};
}

std::vector<FiniteSpace> enumerateTopologies(int n) {
  checkUniverseSize(n);
  // Finite topologies correspond one-to-one with preorders: x <= y iff every
  // open set containing x contains y; the open sets are the up-closed sets.
  // Enumerate reflexive relations by their off-diagonal bits and keep the
  // transitive ones.
  std::vector<FiniteSpace> out;
  const int offDiag = n * n - n;
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) slots.emplace_back(x, y);
    }
  }
  for (std::uint32_t rel = 0; rel < (std::uint32_t{1} << offDiag); ++rel) {
    Bits row[5] = {};
    for (int x = 0; x < n; ++x) row[x] = Bits{1} << x;
    for (int i = 0; i < offDiag; ++i) {
      if (rel & (std::uint32_t{1} << i)) {
        row[slots[i].first] |= Bits{1} << slots[i].second;
      }
    }
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x) {
      Bits reach = 0;
      for (int y = 0; y < n; ++y) {
        if (row[x] & (Bits{1} << y)) reach |= row[y];
      }
      transitive = (reach & ~row[x]) == 0;
    }
    if (!transitive) continue;
    std::vector<Bits> opens;
    for (Bits s = 0; s < (Bits{1} << n); ++s) {
      bool up = true;
      for (int x = 0; x < n && up; ++x) {
        if (s & (Bits{1} << x)) up = (row[x] & ~s) == 0;
      }
      if (up) opens.push_back(s);
    }
    out.emplace_back(n, std::move(opens));
  }
  return out;
}

std::vector<FiniteIdeal> enumerateIdeals(int n) {
  checkUniverseSize(n);
  // An ideal on a finite universe is closed under finite unions, so it equals
  // the power set of its largest member: one ideal per subset of the universe.
  std::vector<FiniteIdeal> out;
  for (Bits top = 0; top < (Bits{1} << n); ++top) {
    std::vector<Bits> members;
    for (Bits t = top; ; t = (t - 1) & top) {
      members.push_back(t);
      if (t == 0) break;
    }
    out.emplace_back(n, std::move(members));
  }
  return out;
}

Bits bfInterior(const FiniteSpace& sp, Bits s) {
  Bits acc = 0;
  for (Bits u : sp.opens()) {
    if ((u & ~s) == 0) acc |= u;
  }
  return acc;
}

Bits bfClosure(const FiniteSpace& sp, Bits s) {
  Bits acc = sp.universe();
  for (Bits u : sp.opens()) {
    const Bits closed = sp.universe() & ~u;
    if ((s & ~closed) == 0) acc &= closed;
  }
  return acc;
}

Bits bfDerived(const FiniteSpace& sp, Bits s) {
  Bits acc = 0;
  for (int x = 0; x < sp.n(); ++x) {
    const Bits px = Bits{1} << x;
    bool limit = true;
    for (Bits u : sp.opens()) {
      if ((u & px) && (u & s & ~px) == 0) {
        limit = false;
        break;
      }
    }
    if (limit) acc |= px;
  }
  return acc;
}

Bits bfFrontier(const FiniteSpace& sp, Bits s) {
  return bfClosure(sp, s) & ~bfInterior(sp, s);
}

bool bfIsIdealOpen(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  return sp.isOpen(s) && id.small(bfFrontier(sp, s));
}

bool bfIsIdealClosed(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  return bfIsIdealOpen(sp, id, sp.universe() & ~s);
}

Bits bfIdealInterior(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  Bits acc = 0;
  for (Bits u : sp.opens()) {
    if ((u & ~s) == 0 && bfIsIdealOpen(sp, id, u)) acc |= u;
  }
  return acc;
}

Bits bfIdealClosure(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  Bits acc = sp.universe();
  for (Bits u : sp.opens()) {
    const Bits closed = sp.universe() & ~u;
    if ((s & ~closed) == 0 && bfIsIdealClosed(sp, id, closed)) acc &= closed;
  }
  return acc;
}

Bits bfIdealDerived(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  Bits acc = 0;
  for (int x = 0; x < sp.n(); ++x) {
    const Bits px = Bits{1} << x;
    bool limit = true;
    for (Bits u : sp.opens()) {
      if ((u & px) && (u & s & ~px) == 0 && bfIsIdealOpen(sp, id, u)) {
        limit = false;
        break;
      }
    }
    if (limit) acc |= px;
  }
  return acc;
}

Bits bfIdealBorder(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  return s & ~bfIdealInterior(sp, id, s);
}

Bits bfIdealFrontier(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  return bfIdealClosure(sp, id, s) & ~bfIdealInterior(sp, id, s);
}

Bits bfIdealExterior(const FiniteSpace& sp, const FiniteIdeal& id, Bits s) {
  return bfIdealInterior(sp, id, sp.universe() & ~s);
}

bool bfIsIdealCompact(const FiniteSpace& sp, const FiniteIdeal& id) {
  const auto& opens = sp.opens();
  if (opens.size() > 20) {
    throw std::length_error("open family too large for cover enumeration");
  }
  const Bits full = sp.universe();
  std::vector<char> iOpen(opens.size());
  for (std::size_t i = 0; i < opens.size(); ++i) {
    iOpen[i] = bfIsIdealOpen(sp, id, opens[i]);
  }
  for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << opens.size());
       ++fam) {
    Bits all = 0, good = 0;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (fam & (std::uint32_t{1} << i)) {
        all |= opens[i];
        if (iOpen[i]) good |= opens[i];
      }
    }
    if (all == full && good != full) return false;
  }
  return true;
}

std::variant<Bits, bool> bfOperator(const FiniteSpace& sp,
                                    const FiniteIdeal& id,
                                    const std::string& op,
                                    const std::vector<Bits>& args) {
  auto arg = [&]() -> Bits {
    if (args.size() != 1) throw std::invalid_argument("expected one subset");
    if (args[0] & ~sp.universe()) {
      throw std::invalid_argument("subset outside universe");
    }
    return args[0];
  };
  if (op == "isICompact") {
    if (!args.empty()) throw std::invalid_argument("expected no subset");
    return bfIsIdealCompact(sp, id);
  }
  if (op == "int") return bfInterior(sp, arg());
  if (op == "cl") return bfClosure(sp, arg());
  if (op == "D") return bfDerived(sp, arg());
  if (op == "Fr") return bfFrontier(sp, arg());
  if (op == "intI") return bfIdealInterior(sp, id, arg());
  if (op == "clI") return bfIdealClosure(sp, id, arg());
  if (op == "DI") return bfIdealDerived(sp, id, arg());
  if (op == "BdI") return bfIdealBorder(sp, id, arg());
  if (op == "FrI") return bfIdealFrontier(sp, id, arg());
  if (op == "ExtI") return bfIdealExterior(sp, id, arg());
  if (op == "isIOpen") return bfIsIdealOpen(sp, id, arg());
  if (op == "isIClosed") return bfIsIdealClosed(sp, id, arg());
  throw std::invalid_argument("unknown operator: " + op);
}

Bits genericOperator(const FiniteSpace& sp, const FiniteIdeal& id,
                     const std::string& op, Bits s) {
  const Bits full = sp.universe();
  // Each operator is routed through a different identity than the one its
  // bf* counterpart evaluates, so agreement is a genuine cross-check.
  if (op == "intI") return full & ~bfIdealClosure(sp, id, full & ~s);
  if (op == "clI") return full & ~bfIdealInterior(sp, id, full & ~s);
  if (op == "BdI") return s & genericOperator(sp, id, "clI", full & ~s);
  if (op == "FrI") {
    return genericOperator(sp, id, "clI", s) &
           genericOperator(sp, id, "clI", full & ~s);
  }
  if (op == "ExtI") return full & ~genericOperator(sp, id, "clI", s);
  if (op == "DI") {
    Bits acc = 0;
    for (int x = 0; x < sp.n(); ++x) {
      const Bits px = Bits{1} << x;
      if (genericOperator(sp, id, "clI", s & ~px) & px) acc |= px;
    }
    return acc;
  }
  throw std::invalid_argument("unknown operator: " + op);
}

OpTables::OpTables(const FiniteSpace& sp, const FiniteIdeal& id)
    : universe(sp.universe()) {
  const std::size_t count = std::size_t{1} << sp.n();
  interior.resize(count);
  closure.resize(count);
  derived.resize(count);
  idealInterior.resize(count);
  idealClosure.resize(count);
  idealDerived.resize(count);
  idealOpen.resize(count);
  idealClosed.resize(count);
  // Stage the computation so later tables reuse earlier ones; every entry
  // still comes from the defining equation of its operator.
  for (Bits s = 0; s < count; ++s) {
    interior[s] = bfInterior(sp, s);
    closure[s] = bfClosure(sp, s);
    derived[s] = bfDerived(sp, s);
  }
  for (Bits s = 0; s < count; ++s) {
    idealOpen[s] = sp.isOpen(s) && id.small(closure[s] & ~interior[s]);
  }
  for (Bits s = 0; s < count; ++s) {
    idealClosed[s] = idealOpen[universe & ~s];
  }
  for (Bits s = 0; s < count; ++s) {
    Bits intI = 0, clI = universe;
    for (Bits u : sp.opens()) {
      if (idealOpen[u] && (u & ~s) == 0) intI |= u;
      const Bits closed = universe & ~u;
      if (idealClosed[closed] && (s & ~closed) == 0) clI &= closed;
    }
    idealInterior[s] = intI;
    idealClosure[s] = clI;
  }
  for (Bits s = 0; s < count; ++s) {
    Bits di = 0;
    for (int x = 0; x < sp.n(); ++x) {
      const Bits px = Bits{1} << x;
      bool limit = true;
      for (Bits u : sp.opens()) {
        if ((u & px) && idealOpen[u] && (u & s & ~px) == 0) {
          limit = false;
          break;
        }
      }
      if (limit) di |= px;
    }
    idealDerived[s] = di;
  }
}

}  // namespace ctopo
