#include "qschur/element.hpp"

#include <sstream>

namespace qschur {

void Element::add(const Cell& c, const Laurent& x) {
  if (x.is_zero()) return;
  auto it = t_.find(c);
  if (it == t_.end()) {
    t_.emplace(c, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) t_.erase(it);
}

Laurent Element::coeff(const Cell& c) const {
  auto it = t_.find(c);
  return it == t_.end() ? Laurent() : it->second;
}

Element& Element::operator+=(const Element& o) {
  for (auto& [c, x] : o.t_) add(c, x);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (auto& [c, x] : o.t_) add(c, -x);
  return *this;
}

Element Element::operator-() const {
  Element r;
  for (auto& [c, x] : t_) r.t_.emplace(c, -x);
  return r;
}

Element operator*(const Laurent& c, const Element& e) {
  Element r;
  if (c.is_zero()) return r;
  for (auto& [k, x] : e.t_) r.t_.emplace(k, c * x);
  return r;
}

void Element::add_scaled(const Element& e, const Laurent& c) {
  if (c.is_zero()) return;
  for (auto& [k, x] : e.t_) add(k, c * x);
}

Element Element::coeff_bar() const {
  Element r;
  for (auto& [k, x] : t_) r.t_.emplace(k, x.bar());
  return r;
}

bool Element::nonneg() const {
  for (auto& [k, x] : t_)
    if (!x.nonneg()) return false;
  return true;
}

std::string Element::str(const char* open, const char* close) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, x] : t_) {
    if (!first) os << " + ";
    first = false;
    if (!x.is_one()) os << "(" << x.str() << ")*";
    os << open << k.str() << close;
  }
  return os.str();
}

}  // namespace qschur
