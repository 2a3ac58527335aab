#pragma once

#include "qschur/cell.hpp"
#include "qschur/element.hpp"
#include "qschur/laurent.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur::flag {

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EvenField : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InterpolationUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPolynomialFiber : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { A, BC };

using Vec = std::vector<uint8_t>;

/// Subspace of F_q^N kept in reduced row echelon form.
struct Subspace {
  std::vector<Vec> rows;
  int dim() const { return static_cast<int>(rows.size()); }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows < b.rows; }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows == b.rows; }
};

/// Chain V_1 <= ... <= V_n (V_n the ambient space).
using Flag = std::vector<Subspace>;

class Field {
 public:
  explicit Field(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return a * b % q_; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }

  Subspace rref(std::vector<Vec> rows) const;
  int rank(std::vector<Vec> rows) const;
  /// anti-diagonal form x_i y_{N-1-i}
  int form(const Vec& x, const Vec& y) const;
  Subspace perp(const Subspace& V, int N) const;

 private:
  int q_;
  std::vector<int> inv_;
};

class FlagSpace {
 public:
  /// type A: steps sum to d = N; BC: centro-symmetric steps summing to 2d+1
  static FlagSpace enumerate(Family fam, const std::vector<int>& steps, int q, long budget = 5'000'000);

  Family family() const { return fam_; }
  int q() const { return field_.q(); }
  int ambient() const { return N_; }
  const std::vector<int>& steps() const { return steps_; }
  size_t size() const { return flags_.size(); }
  const Flag& operator[](size_t i) const { return flags_[i]; }
  const Field& field() const { return field_; }

 private:
  FlagSpace(Family fam, std::vector<int> steps, int q);
  Family fam_;
  std::vector<int> steps_;
  Field field_;
  int N_ = 0;
  std::vector<Flag> flags_;
};

/// relative position matrix of (f, g)
Cell orbit_invariant(const Field& F, const Flag& f, const Flag& g);

/// A polynomial in q with integer coefficients (index = power of q).
struct StructurePolynomial {
  std::vector<BigInt> coeffs;
  std::vector<int> primes;  // fitting nodes
  int held_out = 0;
  std::vector<BigInt> counts;  // raw counts at primes, then held_out
  BigInt eval(const BigInt& q) const;
  /// q = v^2
  Laurent in_v() const;
  bool is_zero() const;
};

/// Newton interpolation through (q_i, N_i), integer exact; nullopt when a
/// divided difference is not integral
std::optional<std::vector<BigInt>> interpolate(const std::vector<int>& qs, const std::vector<BigInt>& vals);

const std::vector<int>& default_primes();

/// Convolution counts with per-prime flag spaces and result caches.
class Oracle {
 public:
  explicit Oracle(Family fam, std::vector<int> primes = default_primes());

  Family family() const { return fam_; }

  /// #{f'' : (f,f'') in O_A, (f'',f') in O_B} for a fixed (f,f') in O_C,
  /// for every C reached, at one prime
  std::map<Cell, BigInt> counts(const Cell& A, const Cell& B, int q);
  /// #{f' : (f,f') in O_A} at one prime
  BigInt fiber(const Cell& A, int q);

  StructurePolynomial structure_poly(const Cell& A, const Cell& B, const Cell& C);
  /// q-degree of the fiber count; asserts a monic polynomial
  int normalization_exponent(const Cell& A);
  /// [A][B] = sum_C v^{e_C - e_A - e_B} N_C(v^2) [C]
  Element multiply(const Cell& A, const Cell& B);

  /// recount one product at a prime outside the fitting set
  bool recheck(const Cell& A, const Cell& B, int q);

  void set_cache_dir(const std::string& dir) { cache_dir_ = dir; }
  void set_budget(long b) { budget_ = b; }

 private:
  Family fam_;
  std::vector<int> primes_;
  long budget_ = 5'000'000;
  std::string cache_dir_;
  std::map<std::pair<std::vector<int>, int>, std::shared_ptr<FlagSpace>> spaces_;
  std::map<std::tuple<Cell, Cell, int>, std::map<Cell, BigInt>> count_cache_;
  std::map<std::pair<Cell, int>, BigInt> fiber_cache_;
  std::map<Cell, int> norm_cache_;
  std::map<std::pair<Cell, Cell>, Element> prod_cache_;

  const FlagSpace& space(const std::vector<int>& steps, int q);
  std::vector<int> steps_of(const std::vector<int>& sums) const;
  std::string cache_path(const Cell& A, const Cell& B) const;
};

}  // namespace qschur::flag
