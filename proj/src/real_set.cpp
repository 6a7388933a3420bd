#include "ctopo/real_set.hpp"

#include <algorithm>
#include <sstream>

namespace ctopo {

namespace {

// Irrational-trace normal form: open intervals, merged whenever two pieces
// share an endpoint (the endpoint is rational, so irrationals cannot tell the
// difference).
SimpleSet iNormalize(const SimpleSet& s) {
  SimpleSet t = s.interiorLine();
  std::vector<Component> out;
  for (const auto& c : t.components()) {
    if (!out.empty() && out.back().hi == c.lo) {
      out.back().hi = c.hi;
    } else {
      out.push_back(c);
    }
  }
  return SimpleSet(std::move(out));
}

ExtRational affineExt(const ExtRational& e, const Rational& slope, const Rational& offset) {
  if (e.isFinite()) return ExtRational(slope * e.value() + offset);
  bool pos = e.isPosInf() == (slope > 0);
  return pos ? ExtRational::posInf() : ExtRational::negInf();
}

SimpleSet affineSimple(const SimpleSet& s, const Rational& slope, const Rational& offset) {
  std::vector<Component> out;
  for (const auto& c : s.components()) {
    Component d;
    if (slope > 0) {
      d = Component{affineExt(c.lo, slope, offset), affineExt(c.hi, slope, offset), c.loClosed,
                    c.hiClosed};
    } else {
      d = Component{affineExt(c.hi, slope, offset), affineExt(c.lo, slope, offset), c.hiClosed,
                    c.loClosed};
    }
    out.push_back(d);
  }
  return SimpleSet(std::move(out));
}

}  // namespace

RealSet RealSet::make(SimpleSet q, DiscreteSet m, DiscreteSet p, SimpleSet i) {
  RealSet r;
  r.q_ = std::move(q);
  r.m_ = std::move(m);
  r.p_ = std::move(p);
  r.i_ = std::move(i);
  r.normalize();
  return r;
}

RealSet RealSet::full() { return make(SimpleSet::full(), {}, {}, SimpleSet::full()); }
RealSet RealSet::rationals() { return make(SimpleSet::full(), {}, {}, {}); }
RealSet RealSet::irrationals() { return make({}, {}, {}, SimpleSet::full()); }

RealSet RealSet::integers() {
  return make({}, {}, DiscreteSet::ofProgression({0, 1, Progression::Kind::Full}), {});
}

RealSet RealSet::naturals() {
  return make({}, {}, DiscreteSet::ofProgression({1, 1, Progression::Kind::Up}), {});
}

RealSet RealSet::interval(ExtRational lo, ExtRational hi, bool lc, bool hc) {
  SimpleSet s = SimpleSet::interval(std::move(lo), std::move(hi), lc, hc);
  return make(s, {}, {}, s);
}

RealSet RealSet::point(Rational q) { return points({std::move(q)}); }

RealSet RealSet::points(std::vector<Rational> pts) {
  return make({}, {}, DiscreteSet::ofPoints(std::move(pts)), {});
}

RealSet RealSet::progression(Progression p) {
  return make({}, {}, DiscreteSet::ofProgression(std::move(p)), {});
}

RealSet RealSet::qTrace(SimpleSet s) { return make(std::move(s), {}, {}, {}); }
RealSet RealSet::iTrace(SimpleSet s) { return make({}, {}, {}, std::move(s)); }

void RealSet::normalize() {
  // Punctures live inside the rational carrier and are never shadowed by
  // plus points.
  m_ = m_.restrictTo(q_);
  m_ = m_.minus(p_);

  // Plus points already in the carrier trace are redundant.
  {
    std::vector<Rational> steps = m_.steps();
    std::vector<Rational> breaks = m_.breakpoints();
    for (const auto& c : q_.components()) {
      if (c.lo.isFinite()) breaks.push_back(c.lo.value());
      if (c.hi.isFinite()) breaks.push_back(c.hi.value());
    }
    p_ = p_.filter([this](const Rational& x) { return !(q_.contains(x) && !m_.contains(x)); },
                   steps, breaks);
  }

  // Structural pass over the carrier components.
  std::vector<Component> comps;
  std::vector<Rational> mRemovals, pRemovals, promotions;
  for (const auto& c0 : q_.components()) {
    if (c0.isPoint()) {
      Rational v = c0.lo.value();
      if (m_.contains(v)) {
        mRemovals.push_back(v);  // punctured point component vanishes
      } else {
        promotions.push_back(v);
      }
      continue;
    }
    Component c = c0;
    if (c.loClosed && m_.contains(c.lo.value())) {
      c.loClosed = false;
      mRemovals.push_back(c.lo.value());
    }
    if (c.hiClosed && m_.contains(c.hi.value())) {
      c.hiClosed = false;
      mRemovals.push_back(c.hi.value());
    }
    if (!c.loClosed && c.lo.isFinite() && p_.contains(c.lo.value())) {
      c.loClosed = true;
      pRemovals.push_back(c.lo.value());
    }
    if (!c.hiClosed && c.hi.isFinite() && p_.contains(c.hi.value())) {
      c.hiClosed = true;
      pRemovals.push_back(c.hi.value());
    }
    comps.push_back(c);
  }
  if (!mRemovals.empty()) m_ = m_.minus(DiscreteSet::ofPoints(mRemovals));
  if (!pRemovals.empty()) p_ = p_.minus(DiscreteSet::ofPoints(pRemovals));
  if (!promotions.empty()) p_ = p_.unionWith(DiscreteSet::ofPoints(promotions));
  q_ = SimpleSet(std::move(comps));

  // Open components meeting in a point belonging to neither side merge, with
  // the meeting point turned into a puncture.
  std::vector<Component> merged;
  std::vector<Rational> mAdds;
  for (const auto& c : q_.components()) {
    if (!merged.empty() && merged.back().hi == c.lo && !merged.back().hiClosed && !c.loClosed) {
      mAdds.push_back(c.lo.value());
      merged.back().hi = c.hi;
      merged.back().hiClosed = c.hiClosed;
    } else {
      merged.push_back(c);
    }
  }
  if (!mAdds.empty()) {
    q_ = SimpleSet(std::move(merged));
    m_ = m_.unionWith(DiscreteSet::ofPoints(mAdds));
  }

  i_ = iNormalize(i_);
}

bool RealSet::isEmpty() const {
  return q_.isEmpty() && m_.isEmpty() && p_.isEmpty() && i_.isEmpty();
}

bool RealSet::isFull() const {
  return q_.isFull() && m_.isEmpty() && p_.isEmpty() && i_.isFull();
}

bool RealSet::containsRational(const Rational& q) const {
  return (q_.contains(q) && !m_.contains(q)) || p_.contains(q);
}

Cardinality RealSet::cardinality() const {
  if (!i_.isEmpty()) return Cardinality::Uncountable;
  if (!q_.isEmpty() || p_.hasProgression()) return Cardinality::CountablyInfinite;
  return Cardinality::Finite;
}

std::optional<std::size_t> RealSet::finiteCount() const {
  if (!isFinite()) return std::nullopt;
  return p_.points().size();
}

std::optional<Rational> RealSet::onlyPoint() const {
  if (q_.isEmpty() && i_.isEmpty() && !p_.hasProgression() && p_.points().size() == 1) {
    return p_.points()[0];
  }
  return std::nullopt;
}

RealSet RealSet::complement() const {
  RealSet r;
  r.q_ = q_.complement();
  r.m_ = p_;
  r.p_ = m_;
  r.i_ = i_.complement();
  r.normalize();
  return r;
}

std::vector<Rational> RealSet::ratSteps() const {
  std::vector<Rational> out = m_.steps();
  for (const auto& s : p_.steps()) out.push_back(s);
  return out;
}

std::vector<Rational> RealSet::ratBreakpoints() const {
  std::vector<Rational> out = m_.breakpoints();
  for (const auto& b : p_.breakpoints()) out.push_back(b);
  for (const auto& c : q_.components()) {
    if (c.lo.isFinite()) out.push_back(c.lo.value());
    if (c.hi.isFinite()) out.push_back(c.hi.value());
  }
  return out;
}

RealSet RealSet::unionWith(const RealSet& o) const {
  RealSet r;
  r.q_ = q_.unionWith(o.q_);
  DiscreteSet m1 = m_.filter([&o](const Rational& x) { return !o.containsRational(x); },
                             o.ratSteps(), o.ratBreakpoints());
  DiscreteSet m2 = o.m_.filter([this](const Rational& x) { return !containsRational(x); },
                               ratSteps(), ratBreakpoints());
  r.m_ = m1.unionWith(m2);
  r.p_ = p_.unionWith(o.p_);
  r.i_ = i_.unionWith(o.i_);
  r.normalize();
  return r;
}

RealSet RealSet::intersect(const RealSet& o) const {
  return complement().unionWith(o.complement()).complement();
}

RealSet RealSet::affine(const Rational& slope, const Rational& offset) const {
  if (slope == 0) throw std::invalid_argument("affine: zero slope");
  RealSet r;
  r.q_ = affineSimple(q_, slope, offset);
  r.m_ = m_.affine(slope, offset);
  r.p_ = p_.affine(slope, offset);
  r.i_ = affineSimple(i_, slope, offset);
  r.normalize();
  return r;
}

std::string RealSet::str() const {
  if (isEmpty()) return "{}";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " u ";
    first = false;
  };
  if (!q_.isEmpty()) {
    sep();
    os << "Q&" << q_.str();
    if (!m_.isEmpty()) os << "\\" << m_.str();
  }
  if (!p_.isEmpty()) {
    sep();
    os << p_.str();
  }
  if (!i_.isEmpty()) {
    sep();
    os << "I&" << i_.str();
  }
  return os.str();
}

}  // namespace ctopo
