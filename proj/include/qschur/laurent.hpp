#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in v with integer coefficients.
/// Stored as (exponent, coefficient) pairs sorted by exponent, zeros never stored.
class Laurent {
 public:
  using Term = std::pair<int, BigInt>;

  Laurent() = default;
  Laurent(long c);  // NOLINT: constants convert implicitly
  Laurent(const BigInt& c);  // NOLINT

  static Laurent mono(int e, const BigInt& c = 1);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  int min_exp() const;
  int max_exp() const;
  BigInt coeff(int e) const;
  const std::vector<Term>& terms() const { return t_; }

  Laurent bar() const;
  Laurent shift(int k) const;       // v^k * x
  Laurent subs_power(int k) const;  // v -> v^k (k != 0)
  Laurent negative_part() const;    // terms with exponent < 0
  bool nonneg() const;              // all coefficients >= 0
  bool bar_invariant() const { return *this == bar(); }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.t_ < b.t_; }

  // a += c * v^k * b, the hot loop of every product
  void add_scaled(const Laurent& b, const Laurent& c);

  /// exact quotient; throws NonExactDivision
  Laurent div_exact(const Laurent& d) const;
  /// evaluate at v = x (integer)
  BigInt eval(const BigInt& x) const;

  std::string str() const;
  static Laurent parse(const std::string& s);

 private:
  std::vector<Term> t_;
  void normalize();
};

inline Laurent vpow(int e) { return Laurent::mono(e); }

/// Quantum combinatorics in v.
namespace q {
Laurent qint(long m);                 // [m] = (v^{2m}-1)/(v^2-1)
Laurent qint_bar(long m);
Laurent binom(long m, long b);        // prod_{i=1}^b (v^{2(m-i+1)}-1)/(v^{2i}-1)
Laurent binom_bar(long m, long b);
Laurent v2binom(long m, long b);      // binom with v replaced by v^2
long beta(long a, long i);            // a i - i(i+1)/2

bool lemma_sum1(long a, long p);
bool lemma_sum1b(long m);
}  // namespace q

}  // namespace qschur
