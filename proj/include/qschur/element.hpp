#pragma once

#include "qschur/cell.hpp"
#include "qschur/laurent.hpp"

#include <map>
#include <string>

namespace qschur {

/// Finite Laurent-combination of cells. Which basis the cells refer to is up
/// to the caller.
class Element {
 public:
  using Map = std::map<Cell, Laurent>;

  Element() = default;
  explicit Element(const Cell& c, const Laurent& x = 1) { add(c, x); }

  void add(const Cell& c, const Laurent& x);
  Laurent coeff(const Cell& c) const;
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const Map& terms() const { return t_; }
  auto begin() const { return t_.begin(); }
  auto end() const { return t_.end(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Laurent& c, const Element& e);
  friend bool operator==(const Element& a, const Element& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  void add_scaled(const Element& e, const Laurent& c);
  Element coeff_bar() const;  // bar on coefficients only
  bool nonneg() const;        // every coefficient in N[v,v^-1]

  std::string str(const char* open = "[", const char* close = "]") const;

 private:
  Map t_;
};

}  // namespace qschur
