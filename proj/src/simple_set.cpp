#include "ctopo/simple_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ctopo {

namespace {

// Order of lower boundaries: position, then closed-before-open.
bool loLess(const Component& a, const Component& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.loClosed && !b.loClosed;
}

// True when b starts inside or immediately adjacent to a (a.lo <= b.lo).
bool connected(const Component& a, const Component& b) {
  if (b.lo < a.hi) return true;
  if (b.lo == a.hi) return a.hiClosed || b.loClosed;
  return false;
}

void validate(const Component& c) {
  if (c.lo > c.hi) throw std::invalid_argument("component with lo > hi");
  if (c.lo == c.hi) {
    if (!c.lo.isFinite()) throw std::invalid_argument("point at infinity");
    if (!c.loClosed || !c.hiClosed) throw std::invalid_argument("degenerate open interval");
  }
  if (!c.lo.isFinite() && c.loClosed) throw std::invalid_argument("closed flag on infinite end");
  if (!c.hi.isFinite() && c.hiClosed) throw std::invalid_argument("closed flag on infinite end");
}

}  // namespace

bool Component::contains(const Rational& q) const {
  ExtRational e{q};
  if (e < lo || e > hi) return false;
  if (e == lo && !loClosed) return false;
  if (e == hi && !hiClosed) return false;
  return true;
}

SimpleSet::SimpleSet(std::vector<Component> comps) : comps_(std::move(comps)) { normalize(); }

SimpleSet SimpleSet::full() {
  return SimpleSet({Component::interval(ExtRational::negInf(), ExtRational::posInf(), false, false)});
}

SimpleSet SimpleSet::interval(ExtRational lo, ExtRational hi, bool lc, bool hc) {
  return SimpleSet({Component::interval(std::move(lo), std::move(hi), lc, hc)});
}

void SimpleSet::normalize() {
  for (const auto& c : comps_) validate(c);
  std::sort(comps_.begin(), comps_.end(), loLess);
  std::vector<Component> out;
  for (const auto& c : comps_) {
    if (!out.empty() && connected(out.back(), c)) {
      Component& a = out.back();
      if (c.hi > a.hi) {
        a.hi = c.hi;
        a.hiClosed = c.hiClosed;
      } else if (c.hi == a.hi) {
        a.hiClosed = a.hiClosed || c.hiClosed;
      }
    } else {
      out.push_back(c);
    }
  }
  comps_ = std::move(out);
}

bool SimpleSet::isFull() const {
  return comps_.size() == 1 && comps_[0].lo.isNegInf() && comps_[0].hi.isPosInf();
}

bool SimpleSet::contains(const Rational& q) const {
  for (const auto& c : comps_) {
    if (c.contains(q)) return true;
  }
  return false;
}

SimpleSet SimpleSet::unionWith(const SimpleSet& o) const {
  std::vector<Component> all = comps_;
  all.insert(all.end(), o.comps_.begin(), o.comps_.end());
  return SimpleSet(std::move(all));
}

SimpleSet SimpleSet::complement() const {
  if (comps_.empty()) return full();
  std::vector<Component> out;
  const Component& first = comps_.front();
  if (!first.lo.isNegInf()) {
    out.push_back(Component::interval(ExtRational::negInf(), first.lo, false, !first.loClosed));
  }
  for (size_t i = 0; i + 1 < comps_.size(); ++i) {
    ExtRational lo = comps_[i].hi, hi = comps_[i + 1].lo;
    bool lc = !comps_[i].hiClosed, hc = !comps_[i + 1].loClosed;
    if (lo < hi) {
      out.push_back(Component::interval(lo, hi, lc, hc));
    } else if (lo == hi && lc && hc) {
      out.push_back(Component::point(lo.value()));
    }
  }
  const Component& last = comps_.back();
  if (!last.hi.isPosInf()) {
    out.push_back(Component::interval(last.hi, ExtRational::posInf(), !last.hiClosed, false));
  }
  return SimpleSet(std::move(out));
}

SimpleSet SimpleSet::intersect(const SimpleSet& o) const {
  return complement().unionWith(o.complement()).complement();
}

SimpleSet SimpleSet::interiorLine() const {
  std::vector<Component> out;
  for (const auto& c : comps_) {
    if (c.isPoint()) continue;
    out.push_back(Component::interval(c.lo, c.hi, false, false));
  }
  return SimpleSet(std::move(out));
}

SimpleSet SimpleSet::closureLine() const {
  std::vector<Component> out;
  for (auto c : comps_) {
    if (c.lo.isFinite()) c.loClosed = true;
    if (c.hi.isFinite()) c.hiClosed = true;
    out.push_back(c);
  }
  return SimpleSet(std::move(out));
}

SimpleSet SimpleSet::intervalHull() const {
  std::vector<Component> out;
  for (const auto& c : comps_) {
    if (!c.isPoint()) out.push_back(c);
  }
  return SimpleSet(std::move(out));
}

std::string SimpleSet::str() const {
  if (comps_.empty()) return "{}";
  std::ostringstream os;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << " u ";
    const auto& c = comps_[i];
    if (c.isPoint()) {
      os << "{" << c.lo.str() << "}";
    } else {
      os << (c.loClosed ? "[" : "(") << c.lo.str() << "," << c.hi.str()
         << (c.hiClosed ? "]" : ")");
    }
  }
  return os.str();
}

}  // namespace ctopo
