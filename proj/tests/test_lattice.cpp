#include "qschur/cell.hpp"
#include "qschur/typeA.hpp"

#include <doctest.h>

using namespace qschur;

TEST_CASE("cells round trip through text") {
  Cell A = Cell::parse("[[0,1],[1,-3]]");
  CHECK(A.n() == 2);
  CHECK(A(1, 1) == -3);
  CHECK(A.str() == "[[0,1],[1,-3]]");
  CHECK(A.ro() == std::vector<int>{1, -2});
  CHECK(A.co() == std::vector<int>{1, -2});
  CHECK_THROWS(Cell::parse("[[1,2],[3]]"));
}

TEST_CASE("context descriptors") {
  for (std::string s : {"schurA:3:4", "limitA:2", "schurJ:3:2", "limitJ:5", "schurI:2:5", "limitI:4"})
    CHECK(Context::parse(s).name() == s);
  CHECK(Context::parse("schurI:2:5").n == 3);
  CHECK_THROWS(Context::parse("schurJ:4:2"));
  CHECK_THROWS(Context::parse("limitA"));
  CHECK_THROWS(Context::parse("nope:2"));
}

TEST_CASE("index set membership") {
  auto A2 = Context::parse("schurA:2:3");
  CHECK(violation(Cell::parse("[[1,1],[0,1]]"), A2).empty());
  CHECK(!violation(Cell::parse("[[1,1],[0,2]]"), A2).empty());
  CHECK(!violation(Cell::parse("[[1,-1],[0,3]]"), A2).empty());
  CHECK(violation(Cell::parse("[[0,1],[1,-3]]"), Context::parse("limitA:2")).empty());
  auto J = Context::parse("schurJ:3:2");
  CHECK(violation(Cell::parse("[[1,1,0],[0,1,0],[0,1,1]]"), J).empty());
  CHECK(!violation(Cell::parse("[[1,1,0],[0,1,0],[0,0,2]]"), J).empty());  // not centro-symmetric
  auto I = Context::parse("schurI:2:3");
  CHECK(violation(Cell::parse("[[1,0,2],[0,1,0],[2,0,1]]"), I).empty());
  CHECK(!violation(Cell::parse("[[1,1,1],[0,1,0],[1,1,1]]"), I).empty());
}

TEST_CASE("shifts and classes") {
  Cell A = Cell::parse("[[-1,2,0],[1,1,1],[0,2,-1]]");
  CHECK(shift(A, 2) == Cell::parse("[[1,2,0],[1,3,1],[0,2,1]]"));
  CHECK(shift(Cell::parse("[[0,0,1],[0,1,0],[1,0,0]]"), 2, Unit::IotaI) == Cell::parse("[[2,0,1],[0,1,0],[1,0,2]]"));
  CHECK(class_of(A, ClassFamily::XiHat) == class_of(shift(A, 4), ClassFamily::XiHat));
  CHECK_THROWS(class_of(shift(A, 1), ClassFamily::XiHat));
  CHECK(!(class_of(A, ClassFamily::XiHat) == class_of(Cell::parse("[[-1,1,0],[2,1,2],[0,1,-1]]"), ClassFamily::XiHat)));
  CHECK(theta_bar_rep(shift(Cell::parse("[[0,1],[1,-3]]"), 5)) == theta_bar_rep(Cell::parse("[[0,1],[1,-3]]")));
}

TEST_CASE("partial order") {
  Cell D = Cell::parse("[[2,0],[0,1]]"), E = Cell::parse("[[1,1],[1,0]]");
  CHECK(preceq(D, E));
  CHECK(!preceq(E, D));
  CHECK(corner_total(D) < corner_total(E));
}

TEST_CASE("embeddings") {
  Cell A = Cell::parse("[[1,2],[0,3]]");
  Cell B = embed_iota(A, 3, 1);
  CHECK(B == Cell::parse("[[1,2,0],[0,3,0],[0,0,1]]"));
}
