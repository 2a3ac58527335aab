#include "qschur/laurent.hpp"

#include <doctest.h>

using namespace qschur;

TEST_CASE("laurent text form is descending") {
  Laurent x = vpow(2) + 2 + vpow(-2);
  CHECK(x.str() == "v^2 + 2 + v^-2");
  CHECK(Laurent::parse(x.str()) == x);
  Laurent y = Laurent::mono(3, -4) + vpow(-1);
  CHECK(Laurent::parse(y.str()) == y);
  CHECK(Laurent().str() == "0");
}

TEST_CASE("arithmetic and bar") {
  Laurent a = vpow(2) + vpow(-1);
  CHECK(a.bar() == vpow(-2) + vpow(1));
  CHECK((a * a.bar()).bar_invariant());
  CHECK((a - a).is_zero());
  CHECK(a.shift(3) == vpow(5) + vpow(2));
  CHECK((vpow(2) + 3).eval(2) == 7);
}

TEST_CASE("exact division") {
  Laurent num = vpow(4) - 1, den = vpow(2) - 1;
  CHECK(num.div_exact(den) == vpow(2) + 1);
  CHECK_THROWS_AS(vpow(4).div_exact(vpow(2) + 1), NonExactDivision);
}

TEST_CASE("quantum integers and binomials") {
  CHECK(q::qint(3) == vpow(4) + vpow(2) + 1);
  CHECK(q::qint(0).is_zero());
  CHECK(q::binom(4, 2) == vpow(8) + vpow(6) + 2 * vpow(4) + vpow(2) + 1);
  for (long m = -4; m <= 6; ++m)
    for (long b = 0; b <= 4; ++b) CHECK(q::binom(m, b).bar() == q::binom(m, b).shift(static_cast<int>(2 * b * (b - m))));
  CHECK(q::lemma_sum1(3, 2));
  CHECK(q::lemma_sum1b(5));
}

TEST_CASE("big coefficients survive") {
  Laurent x = 1 + vpow(1);
  Laurent p = 1;
  for (int k = 0; k < 80; ++k) p *= x;
  CHECK(p.coeff(40) > BigInt(1) << 70);
  CHECK(p.eval(1) == BigInt(1) << 80);
}
