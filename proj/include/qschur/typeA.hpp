#pragma once

#include "qschur/blm.hpp"
#include "qschur/engine.hpp"

#include <map>
#include <vector>

namespace qschur {

/// S(n,d) (finite) or the limit algebra K(n) (all integer diagonals).
class TypeA : public Algebra {
 public:
  TypeA(int n, int d) : n_(n), d_(d), limit_(false) {}
  explicit TypeA(int n) : n_(n), d_(0), limit_(true) {}

  std::string name() const override;
  int size() const override { return n_; }
  bool member(const Cell& A) const override;
  Word word(const Cell& A) const override;

  bool limit() const { return limit_; }
  int d() const { return d_; }
  Context context() const;

 protected:
  Element gen_mul_raw(const Gen& g, const Cell& B) override;

 private:
  int n_, d_;
  bool limit_;
};

/// E-word building an upper triangular cell U from 1_{co(U)}.
Word upper_word(const Cell& U);
/// F-word building a lower triangular cell L from 1_{co(L)}.
Word lower_word(const Cell& L);

/// Phi_d: keep the cells of Theta_d.
Element truncate_to_schur(const Element& x, int d);

/// xi_p on the limit algebra, through monomial words.
class XiShift {
 public:
  XiShift(TypeA& K, int p);
  Element operator()(const Element& x) { return hom_(x); }

 private:
  WordHom hom_;
};

/// The transfer map S(n,d+n) -> S(n,d).
class TransferA {
 public:
  TransferA(TypeA& src, TypeA& dst);
  Element operator()(const Element& x) { return hom_(x); }
  /// re-derives [A] through the lower-first word and compares
  void check_consistency(const Cell& A);

 private:
  TypeA& src_;
  TypeA& dst_;
  WordHom hom_;
};

/// chi([A]) = v^{-d_A} det(A) on S(n,n).
Laurent chi(const Element& x);

/// Irreducible gl_2 module of highest weight (l1, l2), basis F^(k) u+.
class Gl2Module {
 public:
  Gl2Module(int l1, int l2);
  int dim() const { return m_ + 1; }
  std::vector<int> weight(int k) const { return {l1_ - k, l2_ + k}; }

  using Vec = std::map<int, Laurent>;  // k -> coefficient
  Vec act(const Gen& g, const Vec& x) const;
  /// action of the standard cell [A] of K(2)
  Vec act_std(TypeA& K, const Cell& A, const Vec& x);
  Vec act_element(TypeA& K, const Element& a, const Vec& x);

 private:
  int l1_, l2_, m_;
  std::map<Cell, std::map<int, Vec>> cache_;
};

/// b_A for the class of A, stored at the level of A: xi_{-p}({A + pI}) for
/// the first p >= 1 where p and p + 1 agree. Throws NotStabilized past pmax.
struct SlCanonicalA {
  Element element;
  int shift = 0;
};
SlCanonicalA sl_canonical_a(TypeA& K, const Cell& A, int pmax = 20);
/// B_pos element of A: the class element transported to the level of A
Element positive_basis(TypeA& K, const Cell& A);

/// v^{-b(m-b)} times the quantum binomial: the bar-invariant binomial.
Laurent binom_sym(long m, long b);

/// Class of A modulo Z I with |A| in [0, n).
Cell theta_bar_rep(const Cell& A);

}  // namespace qschur
