#include "ctopo/discrete_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ctopo {

namespace {

constexpr long kMaxPeriodUnits = 1000000;
constexpr long kMaxEnumerated = 200000;
constexpr long kMaxWalkSteps = 10000000;

[[noreturn]] void tooComplex(const char* what) {
  throw std::runtime_error(std::string("discrete set too complex: ") + what);
}

long toLong(const Int& v, const char* what) {
  if (v > kMaxPeriodUnits || v < -kMaxPeriodUnits) tooComplex(what);
  return static_cast<long>(v);
}

// Integer-lattice view of one progression.
struct IProg {
  Int anchor;
  long step;
  Progression::Kind kind;

  bool contains(const Int& x) const {
    Int d = x - anchor;
    if (kind == Progression::Kind::Up && d < 0) return false;
    if (kind == Progression::Kind::Down && d > 0) return false;
    return d % step == 0;
  }
};

long posMod(const Int& x, long m) {
  Int r = x % m;
  if (r < 0) r += m;
  return static_cast<long>(r);
}

std::vector<long> divisorsOf(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool periodic(const std::vector<bool>& classes, long d) {
  long D = static_cast<long>(classes.size());
  for (long r = 0; r < D; ++r) {
    if (classes[r] != classes[(r + d) % D]) return false;
  }
  return true;
}

bool progLess(const Progression& a, const Progression& b) {
  if (a.step != b.step) return a.step < b.step;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.anchor < b.anchor;
}

}  // namespace

bool Progression::contains(const Rational& q) const {
  Rational d = q - anchor;
  if (kind == Kind::Up && d < 0) return false;
  if (kind == Kind::Down && d > 0) return false;
  Rational ratio = d / step;
  return denom(ratio) == 1;
}

DiscreteSet DiscreteSet::ofPoints(std::vector<Rational> pts) {
  return fromComponents({}, std::move(pts));
}

DiscreteSet DiscreteSet::ofProgression(Progression p) {
  return fromComponents({std::move(p)}, {});
}

bool DiscreteSet::contains(const Rational& q) const {
  for (const auto& p : progs_) {
    if (p.contains(q)) return true;
  }
  return std::binary_search(points_.begin(), points_.end(), q);
}

// The semantic normal form.  Everything is mapped onto the common lattice
// x0 + g*Z; per residue class the set is eventually periodic at both ends, so
// it decomposes uniquely into maximal up/down/full rays at the minimal
// eventual period plus finitely many leftover points.
DiscreteSet DiscreteSet::fromComponents(std::vector<Progression> progs, std::vector<Rational> pts) {
  for (const auto& p : progs) {
    if (p.step <= 0) throw std::invalid_argument("progression step must be positive");
  }
  DiscreteSet out;
  if (progs.empty()) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out.points_ = std::move(pts);
    return out;
  }

  // Common lattice.
  Rational x0 = progs[0].anchor;
  Rational g = progs[0].step;
  for (const auto& p : progs) {
    g = ratGcd(g, p.step);
    if (p.anchor != x0) g = ratGcd(g, boost::multiprecision::abs(p.anchor - x0));
  }
  for (const auto& q : pts) {
    if (q != x0) g = ratGcd(g, boost::multiprecision::abs(q - x0));
  }

  auto toUnits = [&](const Rational& q) -> Int {
    Rational u = (q - x0) / g;
    return numer(u);  // exact by construction of g
  };

  std::vector<IProg> iprogs;
  long lcmSteps = 1;
  for (const auto& p : progs) {
    long s = toLong(numer(p.step / g), "step lcm");
    iprogs.push_back(IProg{toUnits(p.anchor), s, p.kind});
    lcmSteps = lcmSteps / std::gcd(lcmSteps, s) * s;
    if (lcmSteps > kMaxPeriodUnits) tooComplex("step lcm");
  }
  std::vector<Int> ipts;
  for (const auto& q : pts) ipts.push_back(toUnits(q));
  const long D = lcmSteps;

  auto member = [&](const Int& x) {
    for (const auto& p : iprogs) {
      if (p.contains(x)) return true;
    }
    for (const auto& q : ipts) {
      if (q == x) return true;
    }
    return false;
  };

  Int maxAll = iprogs[0].anchor, minAll = iprogs[0].anchor;
  for (const auto& p : iprogs) {
    maxAll = std::max(maxAll, p.anchor);
    minAll = std::min(minAll, p.anchor);
  }
  for (const auto& q : ipts) {
    maxAll = std::max(maxAll, q);
    minAll = std::min(minAll, q);
  }
  const Int floorB = minAll - 2 * D;
  const Int ceilB = maxAll + 2 * D;

  std::vector<bool> upClasses(D, false), downClasses(D, false);
  for (const auto& p : iprogs) {
    long r0 = posMod(p.anchor, p.step);
    for (long r = r0; r < D; r += p.step) {
      if (p.kind != Progression::Kind::Down) upClasses[r] = true;
      if (p.kind != Progression::Kind::Up) downClasses[r] = true;
    }
  }

  struct IRay {
    Int bound;  // start for Up, end for Down, residue for Full
    long step;
    Progression::Kind kind;
    bool contains(const Int& x) const {
      Int d = x - bound;
      if (kind == Progression::Kind::Up && d < 0) return false;
      if (kind == Progression::Kind::Down && d > 0) return false;
      return d % step == 0;
    }
  };
  std::vector<IRay> emitted;
  auto inEmitted = [&](const Int& x) {
    for (const auto& r : emitted) {
      if (r.contains(x)) return true;
    }
    return false;
  };

  // Maximal upward rays at the minimal eventual period.
  long dPlus = D;
  for (long d : divisorsOf(D)) {
    if (periodic(upClasses, d)) {
      dPlus = d;
      break;
    }
  }
  for (long rho = 0; rho < dPlus; ++rho) {
    if (!upClasses[rho]) continue;
    Int f = maxAll + 1;
    f += posMod(Int(rho) - f, dPlus);
    long steps = 0;
    bool full = false;
    while (member(f - dPlus)) {
      f -= dPlus;
      if (f < floorB) {
        full = true;
        break;
      }
      if (++steps > kMaxWalkSteps) tooComplex("ray walk");
    }
    if (full) {
      emitted.push_back(IRay{Int(rho), dPlus, Progression::Kind::Full});
      for (long r = rho; r < D; r += dPlus) downClasses[r] = false;
    } else {
      emitted.push_back(IRay{f, dPlus, Progression::Kind::Up});
    }
  }

  auto residual = [&](const Int& x) { return member(x) && !inEmitted(x); };

  // Downward rays start below every emitted upward ray, so the ascent finds
  // the maximal contiguous run of the residual set.
  Int lowStart = minAll - 1;
  for (const auto& r : emitted) {
    if (r.kind == Progression::Kind::Up) lowStart = std::min(lowStart, Int(r.bound - 1));
  }

  // Maximal downward rays on what is left.
  long dMinus = D;
  for (long d : divisorsOf(D)) {
    if (periodic(downClasses, d)) {
      dMinus = d;
      break;
    }
  }
  for (long rho = 0; rho < dMinus; ++rho) {
    if (!downClasses[rho]) continue;
    Int l = lowStart;
    l -= posMod(l - Int(rho), dMinus);
    long steps = 0;
    while (residual(l + dMinus)) {
      l += dMinus;
      if (l > ceilB + D) throw std::logic_error("downward ray escaped upward");
      if (++steps > kMaxWalkSteps) tooComplex("ray walk");
    }
    emitted.push_back(IRay{l, dMinus, Progression::Kind::Down});
  }

  // Leftover isolated members between the rays.
  std::set<Int> leftover;
  auto consider = [&](const Int& x) {
    if (member(x) && !inEmitted(x)) leftover.insert(x);
  };
  for (const auto& q : ipts) consider(q);
  for (const auto& p : iprogs) {
    Int from = std::max(floorB, p.kind == Progression::Kind::Up ? p.anchor : floorB);
    Int to = std::min(ceilB, p.kind == Progression::Kind::Down ? p.anchor : ceilB);
    if (from > to) continue;
    Int start = from + posMod(p.anchor - from, p.step);
    if ((to - start) / p.step > kMaxEnumerated) tooComplex("point enumeration");
    for (Int x = start; x <= to; x += p.step) consider(x);
  }

  auto fromUnits = [&](const Int& u) { return x0 + Rational(u) * g; };
  for (const auto& r : emitted) {
    Rational step = Rational(r.step) * g;
    Rational anchor = fromUnits(r.bound);
    if (r.kind == Progression::Kind::Full) anchor = ratMod(anchor, step);
    out.progs_.push_back(Progression{anchor, step, r.kind});
  }
  for (const auto& u : leftover) out.points_.push_back(fromUnits(u));
  std::sort(out.progs_.begin(), out.progs_.end(), progLess);
  std::sort(out.points_.begin(), out.points_.end());
  return out;
}

DiscreteSet DiscreteSet::unionWith(const DiscreteSet& o) const {
  std::vector<Progression> progs = progs_;
  progs.insert(progs.end(), o.progs_.begin(), o.progs_.end());
  std::vector<Rational> pts = points_;
  pts.insert(pts.end(), o.points_.begin(), o.points_.end());
  return fromComponents(std::move(progs), std::move(pts));
}

DiscreteSet DiscreteSet::intersect(const DiscreteSet& o) const {
  return filter([&](const Rational& q) { return o.contains(q); }, o.steps(), o.breakpoints());
}

DiscreteSet DiscreteSet::minus(const DiscreteSet& o) const {
  return filter([&](const Rational& q) { return !o.contains(q); }, o.steps(), o.breakpoints());
}

std::vector<Rational> DiscreteSet::steps() const {
  std::vector<Rational> out;
  for (const auto& p : progs_) out.push_back(p.step);
  return out;
}

std::vector<Rational> DiscreteSet::breakpoints() const {
  std::vector<Rational> out;
  for (const auto& p : progs_) out.push_back(p.anchor);
  for (const auto& q : points_) out.push_back(q);
  return out;
}

namespace {

std::vector<Rational> simpleBreakpoints(const SimpleSet& s) {
  std::vector<Rational> out;
  for (const auto& c : s.components()) {
    if (c.lo.isFinite()) out.push_back(c.lo.value());
    if (c.hi.isFinite()) out.push_back(c.hi.value());
  }
  return out;
}

}  // namespace

DiscreteSet DiscreteSet::restrictTo(const SimpleSet& s) const {
  return filter([&](const Rational& q) { return s.contains(q); }, {}, simpleBreakpoints(s));
}

DiscreteSet DiscreteSet::minusSimple(const SimpleSet& s) const {
  return filter([&](const Rational& q) { return !s.contains(q); }, {}, simpleBreakpoints(s));
}

DiscreteSet DiscreteSet::filter(const std::function<bool(const Rational&)>& pred,
                                const std::vector<Rational>& predSteps,
                                const std::vector<Rational>& predBreakpoints) const {
  std::vector<Progression> rawProgs;
  std::vector<Rational> rawPts;
  for (const auto& q : points_) {
    if (pred(q)) rawPts.push_back(q);
  }
  for (const auto& p : progs_) {
    Rational L = p.step;
    for (const auto& s : predSteps) L = ratLcm(L, s);
    Int reps = numer(L / p.step);
    if (reps > kMaxEnumerated) tooComplex("filter period");

    Rational hiB = p.anchor, loB = p.anchor;
    for (const auto& b : predBreakpoints) {
      hiB = std::max(hiB, b);
      loB = std::min(loB, b);
    }

    bool upTail = p.kind != Progression::Kind::Down;
    bool downTail = p.kind != Progression::Kind::Up;

    if (upTail) {
      // First element strictly above every breakpoint.
      Rational x0 = p.anchor + (Rational(ratFloor((hiB - p.anchor) / p.step)) + 1) * p.step;
      while (x0 <= hiB) x0 += p.step;
      for (Int j = 0; j < reps; ++j) {
        Rational rep = x0 + Rational(j) * p.step;
        if (pred(rep)) rawProgs.push_back(Progression{rep, L, Progression::Kind::Up});
      }
    }
    if (downTail) {
      Rational x1 = p.anchor - (Rational(ratFloor((p.anchor - loB) / p.step)) + 1) * p.step;
      while (x1 >= loB) x1 -= p.step;
      for (Int j = 0; j < reps; ++j) {
        Rational rep = x1 - Rational(j) * p.step;
        if (pred(rep)) rawProgs.push_back(Progression{rep, L, Progression::Kind::Down});
      }
    }

    // Bounded middle, element by element.
    Rational from = downTail ? Rational(loB - L) : std::max(p.anchor, Rational(loB - L));
    Rational to = upTail ? Rational(hiB + L) : std::min(p.anchor, Rational(hiB + L));
    if (from <= to) {
      Rational start = p.anchor + Rational(ratFloor((from - p.anchor) / p.step)) * p.step;
      while (start < from) start += p.step;
      if (numer((to - start) / p.step) / denom((to - start) / p.step) > kMaxEnumerated) {
        tooComplex("filter enumeration");
      }
      for (Rational x = start; x <= to; x += p.step) {
        bool inRange = true;
        if (p.kind == Progression::Kind::Up && x < p.anchor) inRange = false;
        if (p.kind == Progression::Kind::Down && x > p.anchor) inRange = false;
        if (inRange && pred(x)) rawPts.push_back(x);
      }
    }
  }
  return fromComponents(std::move(rawProgs), std::move(rawPts));
}

DiscreteSet DiscreteSet::affine(const Rational& slope, const Rational& offset) const {
  if (slope == 0) throw std::invalid_argument("affine: zero slope");
  std::vector<Progression> progs;
  for (const auto& p : progs_) {
    Progression q;
    q.anchor = slope * p.anchor + offset;
    q.step = boost::multiprecision::abs(slope) * p.step;
    q.kind = p.kind;
    if (slope < 0) {
      if (p.kind == Progression::Kind::Up) q.kind = Progression::Kind::Down;
      if (p.kind == Progression::Kind::Down) q.kind = Progression::Kind::Up;
    }
    progs.push_back(q);
  }
  std::vector<Rational> pts;
  for (const auto& q : points_) pts.push_back(slope * q + offset);
  return fromComponents(std::move(progs), std::move(pts));
}

std::string DiscreteSet::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& p : progs_) {
    if (!first) os << ", ";
    first = false;
    const char* k = p.kind == Progression::Kind::Full ? "full"
                    : p.kind == Progression::Kind::Up ? "up"
                                                      : "down";
    os << "prog(" << toString(p.anchor) << "," << toString(p.step) << "," << k << ")";
  }
  for (const auto& q : points_) {
    if (!first) os << ", ";
    first = false;
    os << toString(q);
  }
  os << "}";
  return os.str();
}

}  // namespace ctopo
