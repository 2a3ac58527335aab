#include "qschur/coideal.hpp"

#include <doctest.h>

using namespace qschur;

TEST_CASE("rank one gamma at i = 1") {
  for (int a = 0; a <= 10; ++a) CHECK(rank1_gamma(a, 1) == vpow(-a - 1));
  for (int a = 0; a <= 6; ++a)
    for (int i = 0; i <= 6; ++i) CHECK(rank1_gamma(a, i) == rank1_gamma_rec(a, i));
}

TEST_CASE("rank one closed forms agree with the engine") {
  for (int d = 1; d <= 8; ++d) {
    JSchur S(3, d, true);
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      const Cell A = rank1_cell(a, b);
      CHECK(S.bar_std(A) == rank1_bar(a, b));
      CHECK(S.canonical(A) == rank1_canonical(a, b));
    }
  }
}

TEST_CASE("jSchur canonical elements are bar invariant") {
  JSchur S(3, 2);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b)
      for (int c = 0; a + b + c <= 2; ++c) {
        // rows (a, b, c), middle (b', 2m+1, b'), mirrored
        for (int x = 0; x <= 2; ++x) {
          const int mid = 5 - 2 * (a + b + c) - 2 * x;
          if (mid < 1 || mid % 2 == 0) continue;
          Cell A({{a, b, c}, {x, mid, x}, {c, b, a}});
          if (!S.member(A)) continue;
          const Element& k = S.canonical(A);
          CHECK(S.bar(k) == k);
          CHECK(k.coeff(A) == 1);
        }
      }
}

TEST_CASE("coideal generators through the type A realization") {
  JSchur S(3, 1);
  Cell one = Cell::diag({0, 3, 0});
  Element e = S.gen_mul({'e', 0, 1}, one);
  CHECK(!e.is_zero());
  CHECK(e.size() == 1);
  CHECK(e.begin()->first.ro() == std::vector<int>{1, 1, 1});
}

TEST_CASE("t on the rank one cells") {
  // t [A_{a,0}] = [A_{a-1,1}] + ... in the limit
  Element x = t_multiply(rank1_cell(2, 0), true);
  CHECK(x.coeff(rank1_cell(1, 1)) == 1);
}

TEST_CASE("transfer in rank one") {
  JSchur src(3, 5, true), dst(3, 3, true);
  Rank1Hom phi(src, dst, -2);
  CHECK(phi.on_std(rank1_cell(5, 0)) == Element(rank1_cell(3, 0)));
  CHECK(dst.to_canonical(phi(src.canonical(rank1_cell(3, 2)))) == Element(rank1_cell(1, 2)));
}

TEST_CASE("shift in the limit jSchur algebra") {
  JSchur K = JSchur::limit(3);
  XiJ xi(K, -2);
  Cell A({{1, 2, 0}, {1, 3, 1}, {0, 2, 1}});
  CHECK(xi.on_std(Cell::diag({2, 5, 2})) == Element(Cell::diag({0, 3, 0})));
  auto b = sl_canonical_j(K, Cell({{-1, 2, 0}, {1, 1, 1}, {0, 2, -1}}));
  CHECK(b.element.coeff(A) == 1);
  CHECK(b.shift == 2);
}
