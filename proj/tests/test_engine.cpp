#include "qschur/engine.hpp"
#include "qschur/typeA.hpp"

#include <doctest.h>

using namespace qschur;

namespace {

std::vector<Cell> schur_cells2(int d) {
  std::vector<Cell> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) out.push_back(Cell({{a, b}, {c, d - a - b - c}}));
  return out;
}

bool off_leading_negative(const Element& x, const Cell& A) {
  for (auto& [C, k] : x) {
    if (C == A) {
      if (!k.is_one()) return false;
    } else if (!k.is_zero() && k.max_exp() >= 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("canonical basis of S(2,d) is bar invariant and triangular") {
  for (int d = 1; d <= 4; ++d) {
    TypeA S(2, d);
    for (auto& A : schur_cells2(d)) {
      const Element& c = S.canonical(A);
      CHECK(S.bar(c) == c);
      CHECK(off_leading_negative(c, A));
      for (auto& [C, k] : c) CHECK(preceq(C, A));
    }
  }
}

TEST_CASE("bar is an involution and a ring map") {
  TypeA S(2, 3);
  auto cells = schur_cells2(3);
  for (auto& A : cells) CHECK(S.bar(S.bar(Element(A))) == Element(A));
  for (auto& A : cells)
    for (auto& B : cells) {
      if (A.co() != B.ro()) continue;
      CHECK(S.bar(S.product(A, B)) == S.multiply(S.bar(Element(A)), S.bar(Element(B))));
    }
}

TEST_CASE("products are associative") {
  TypeA S(3, 2);
  std::vector<Cell> cells;
  for (int m = 0; m < (1 << 18); m += 37) {
    // walk a sparse sample of 3x3 cells with |A| = 2
    std::vector<std::vector<int>> r(3, std::vector<int>(3));
    int t = m, tot = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) tot += r[i][j] = t % 3, t /= 3;
    if (tot == 2) cells.push_back(Cell(r));
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  int n = 0;
  for (auto& A : cells)
    for (auto& B : cells)
      for (auto& C : cells) {
        if (A.co() != B.ro() || B.co() != C.ro()) continue;
        ++n;
        CHECK(S.multiply(S.product(A, B), Element(C)) == S.multiply(Element(A), S.product(B, C)));
      }
  CHECK(n > 0);
}

TEST_CASE("polynomial fits in u = v^-p") {
  // p -> 1 + v^-p + v^-2p
  std::vector<std::pair<int, Laurent>> s;
  for (int p = 0; p <= 8; p += 2) s.push_back({p, 1 + vpow(-p) + vpow(-2 * p)});
  UFit f(s);
  CHECK(f.degree() == 2);
  CHECK(f.eval(20) == 1 + vpow(-20) + vpow(-40));
  std::vector<std::pair<int, Laurent>> bad{{0, 1}, {2, vpow(5)}, {4, 3}, {6, vpow(-1)}};
  CHECK_THROWS_AS(UFit{bad}, FitUnstable);
}
