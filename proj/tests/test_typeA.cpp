#include "qschur/typeA.hpp"

#include <doctest.h>

using namespace qschur;

TEST_CASE("generator products in the rank two limit") {
  TypeA K(2);
  // E * 1_(l1,l2) moves one unit up
  Cell one = Cell::diag({2, -1});
  Element r = K.gen_mul({'E', 0, 1}, one);
  CHECK(r == Element(Cell({{2, 1}, {0, -2}})));
  CHECK(K.gen_mul({'E', 0, 1}, Cell::diag({1, 1})).coeff(Cell({{1, 1}, {0, 0}})) == 1);
}

TEST_CASE("divided powers multiply as [a+b choose a]") {
  TypeA S(2, 4);
  // E [E] on 1_(0,4): E * E = [2] E^(2)
  Element e1 = S.gen_mul({'E', 0, 1}, Cell::diag({0, 4}));
  Element e2 = S.apply(Gen{'E', 0, 1}, e1);
  CHECK(e2 == q::qint(2).shift(-1) * S.gen_mul({'E', 0, 2}, Cell::diag({0, 4})));
}

TEST_CASE("transfer sends idempotents to idempotents") {
  TypeA src(2, 4), dst(2, 2);
  TransferA phi(src, dst);
  CHECK(phi(Element(Cell::diag({3, 1}))) == Element(Cell::diag({2, 0})));
  CHECK(phi(Element(Cell::diag({0, 4}))).is_zero());
  phi.check_consistency(Cell({{1, 1}, {1, 1}}));
}

TEST_CASE("sign character") {
  TypeA S(2, 2);
  CHECK(chi(S.canonical(Cell::identity(2))) == 1);
  CHECK(chi(S.canonical(Cell({{0, 1}, {1, 0}}))).is_zero());
}

TEST_CASE("class canonical element of the negative example") {
  TypeA K(2);
  auto s = sl_canonical_a(K, Cell({{0, 1}, {1, -3}}));
  CHECK(s.shift >= 1);
  CHECK(K.bar(s.element) == s.element);
}

TEST_CASE("gl2 module action") {
  Gl2Module V(2, 0);
  CHECK(V.dim() == 3);
  Gl2Module::Vec top{{0, 1}};
  auto x = V.act({'F', 0, 1}, top);
  auto y = V.act({'E', 0, 1}, x);
  CHECK(y.size() == 1);
  CHECK(y.at(0) == q::qint(2).shift(-1));
}
