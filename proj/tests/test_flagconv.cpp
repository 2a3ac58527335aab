#include "qschur/coideal.hpp"
#include "qschur/flagconv.hpp"
#include "qschur/typeA.hpp"

#include <doctest.h>

#include <filesystem>

using namespace qschur;

namespace {
std::vector<Cell> cells2(int d) {
  std::vector<Cell> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) out.push_back(Cell({{a, b}, {c, d - a - b - c}}));
  return out;
}
}  // namespace

TEST_CASE("flag counts match the formula products in S(2,2)") {
  flag::Oracle o(flag::Family::A);
  TypeA S(2, 2);
  for (auto& A : cells2(2))
    for (auto& B : cells2(2)) {
      if (A.co() != B.ro()) continue;
      CHECK(o.multiply(A, B) == S.product(A, B));
    }
}

TEST_CASE("fiber sizes are Gaussian binomials") {
  flag::Oracle o(flag::Family::A);
  // subspaces of dimension 1 in F_q^2 with a fixed complement pattern: q + 1 lines
  CHECK(o.fiber(Cell({{1, 0}, {0, 1}}), 3) == 1);
  CHECK(o.fiber(Cell({{0, 1}, {1, 0}}), 3) == 3);
}

TEST_CASE("recount at a held out prime and the cache") {
  const auto dir = std::filesystem::temp_directory_path() / "qschur_test_cache";
  std::filesystem::remove_all(dir);
  Cell A({{1, 1}, {0, 1}}), B({{1, 0}, {1, 1}});
  Element first;
  {
    flag::Oracle o(flag::Family::A);
    o.set_cache_dir(dir.string());
    first = o.multiply(A, B);
    CHECK(o.recheck(A, B, 29));
  }
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  flag::Oracle again(flag::Family::A);
  again.set_cache_dir(dir.string());
  CHECK(again.multiply(A, B) == first);
  std::filesystem::remove_all(dir);
}

TEST_CASE("type B/C counts against the coideal formulas") {
  flag::Oracle o(flag::Family::BC);
  JSchur S(3, 1);
  Cell A({{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}), B({{0, 0, 0}, {1, 1, 1}, {0, 0, 0}});
  CHECK(o.multiply(A, B) == S.product(A, B));
}
