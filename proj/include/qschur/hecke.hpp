#pragma once

#include "qschur/cell.hpp"
#include "qschur/element.hpp"
#include "qschur/laurent.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace qschur {

/// Parabolic permutation module of the Hecke algebra of type A_{d-1} (words of
/// length d) or B_d (first halves of centro-symmetric words of length 2d+1).
/// Coefficients are Laurent polynomials in v with q = v^2.
class PermModule {
 public:
  using Word = std::string;  // letters stored as chars 0..n-1

  /// content: type A, letter multiplicities of the d-word; type B, the
  /// centro-symmetric content of the full word (sum 2d+1).
  PermModule(bool type_b, int n, int d, std::vector<int> content);

  bool type_b() const { return type_b_; }
  int n() const { return n_; }
  int d() const { return d_; }
  int gens() const { return type_b_ ? d_ : d_ - 1; }
  const std::vector<int>& content() const { return content_; }
  size_t size() const { return words_.size(); }
  const Word& word(size_t i) const { return words_[i]; }
  int length(size_t i) const { return len_[i]; }
  long index(const Word& w) const;

  Word act(const Word& w, int s) const;
  /// x T_s on a coefficient vector
  std::vector<Laurent> right_T(const std::vector<Laurent>& x, int s) const;
  /// reduced path of generators from the sorted word to word i
  std::vector<int> path(size_t i) const;

  /// full word (type B: length 2d+1)
  std::vector<int> full(const Word& w) const;
  /// relative position matrix of w against the sorted word of content mu
  Cell relative(const Word& w, const std::vector<int>& mu) const;

 private:
  bool type_b_;
  int n_, d_;
  std::vector<int> content_;
  std::vector<Word> words_;
  std::unordered_map<Word, size_t> index_;
  std::vector<int> len_;
  std::vector<long> parent_;
  std::vector<int> parent_gen_;
};

/// Structure constants of the unnormalized orbit basis: e_A * e_B = sum_C N_C e_C,
/// N_C returned as a polynomial in q written in v (q = v^2).
class HeckeOracle {
 public:
  explicit HeckeOracle(bool type_b) : type_b_(type_b) {}

  std::map<Cell, Laurent> product(const Cell& A, const Cell& B);
  /// sum over the orbit of q^{length}: number of first flags over a fixed second flag
  Laurent fiber_over_second(const Cell& A);
  /// number of second flags over a fixed first flag
  Laurent fiber_over_first(const Cell& A);

  /// Restriction of the type B orbit element e_A to the type A block of the
  /// first-half content nu; returns type A cells (rows, columns = nu) with
  /// unnormalized coefficients.
  std::map<Cell, Laurent> restrict_to_block(const Cell& A, const std::vector<int>& nu);

  const PermModule& module(const std::vector<int>& content, int n, int d);

 private:
  bool type_b_;
  std::map<std::vector<int>, std::unique_ptr<PermModule>> mods_;
  int degree_of(const Cell& A) const;
};

}  // namespace qschur
