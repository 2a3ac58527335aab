#pragma once

#include "qschur/engine.hpp"
#include "qschur/typeA.hpp"

#include <map>
#include <vector>

namespace qschur {

/// Type B/C statistic: the degree of the fiber over the second flag.
long dj_stat(const Cell& A);

/// Restriction of [A] (A in Xi_d, n odd) to the first-half type A block.
Element j_restrict(const Cell& A);
/// Inverse of j_restrict on its image; reads one representative per cell.
Element j_decode(const Element& x, int n);
/// e_h^(a) or f_h^(a) times [B] in S^j(n,d), through the type A realization.
Element j_gen_mul(const Gen& g, const Cell& B);

/// Cell of e_h^(a) 1_lambda (kind 'e') or f_h^(a) 1_lambda.
Cell j_gen_cell(const Gen& g, const std::vector<int>& lambda);

/// S^j(n,d), S^i(n-1,d) and their limit algebras. The iota versions keep the
/// cells whose middle row and column are the unit pattern.
class JSchur : public Algebra {
 public:
  JSchur(int n, int d, bool iota = false);
  static JSchur limit(int n, bool iota = false);
  /// limit family with even middle entries, reached through odd shifts
  static JSchur limit_even_middle(int n);

  std::string name() const override;
  int size() const override { return n_; }
  bool member(const Cell& A) const override;
  bool symmetric() const override { return true; }
  Word word(const Cell& A) const override;

  Context context() const;
  bool is_limit() const { return limit_; }
  bool even_middle() const { return even_middle_; }
  bool iota() const { return iota_; }
  int d() const { return d_; }

  /// first even shift used for stabilizing g * [B]
  static int stable_shift(const Gen& g, const Cell& B, bool odd = false);
  Element finalize_public(Element x) const { return finalize(std::move(x)); }

 protected:
  Element gen_mul_raw(const Gen& g, const Cell& B) override;
  Element finalize(Element x) const override;

 private:
  JSchur(int n, int d, bool iota, bool limit);
  int n_, d_;
  bool iota_, limit_;
  bool even_middle_ = false;
};

// ---- rank one, n = 3 iota cells A_{a,b} = [[a,0,b],[0,1,0],[b,0,a]]

Cell rank1_cell(int a, int b);
/// M_{a,r}: the closed monomial expansion
Element rank1_monomial(int a, int r);
/// b^i_a, the coefficient of [A_{a+i,r-i}] in bar[A_{a,r}]
Laurent rank1_b(int i, int a);
Element rank1_bar(int a, int r);
/// gamma_a(i) by the parity-split closed form (a >= 0; the recursion otherwise)
Laurent rank1_gamma(int a, int i);
/// gamma_a(i) from gamma_a(r) = sum_i bar(gamma_a(i)) b^{r-i}_{a+i}
Laurent rank1_gamma_rec(int a, int i);
Element rank1_canonical(int a, int r);

// ---- the t generator (iota, rows r-1 and r+1)

/// X with X - E^theta_{r-1,r+1} diagonal and co(X) = lambda
Cell t_cell(const std::vector<int>& lambda);
/// t * [A] by the closed formula; in the finite case cells with a negative
/// entry drop out
Element t_multiply(const Cell& A, bool limit);
/// t * x by the engine: {X} * x, or x where X is not an index; in the limit
/// the stable value of the finite products
Element t_multiply(JSchur& S, const Element& x);

// ---- homomorphisms

/// phi^j: S^j(n,d+n) -> S^j(n,d), generators [A] -> [A - 2I]
class TransferJ {
 public:
  TransferJ(JSchur& src, JSchur& dst);
  Element operator()(const Element& x) { return hom_(x); }
  const Element& on_std(const Cell& A) { return hom_.on_std(A); }
  /// phi(g [A]) = g phi([A]) for every generator g of size <= amax
  /// matching ro(A); throws InconsistentHom
  void check_consistency(const Cell& A, int amax = 2);

 private:
  JSchur& src_;
  JSchur& dst_;
  WordHom hom_;
};

/// xi^j_p on the limit algebra, p even
class XiJ {
 public:
  XiJ(JSchur& K, int p);
  Element operator()(const Element& x) { return hom_(x); }
  const Element& on_std(const Cell& A) { return hom_.on_std(A); }

 private:
  WordHom hom_;
};

/// Homomorphism out of the rank one iota algebra fixed by an idempotent
/// shift and t -> t: the transfer map (shift -2, finite to finite) and
/// xi^i_p (limit to limit). [A_{a,b}] is reached from [A_{a+b,0}] by the
/// t-recursion with exact division.
class Rank1Hom {
 public:
  Rank1Hom(JSchur& src, JSchur& dst, int shift);
  const Element& on_std(const Cell& A);
  Element operator()(const Element& x);

 private:
  JSchur& src_;
  JSchur& dst_;
  int shift_;
  std::map<Cell, Element> cache_;
};

/// Hybrid monomial: jSchur word with each twin f^(a) e^(a) (middle index)
/// replaced by {E^theta_{r-1,r+1}(a)}.
Element hybrid_monomial(JSchur& S, const Cell& A);
/// the factors, for traces: generators and twin replacements in order
std::vector<std::string> hybrid_trace(const Cell& A);

/// Phi^j_d: keep the cells of Xi_d (or Xi^i_d)
Element truncate_to_jschur(const Element& x, int d, bool iota = false);
/// Psi^j_d: the sl-level element x, stored at the level of its cells, moved
/// to degree d by xi and truncated. Zero unless every cell has
/// total = 2d + 1 mod 2n.
Element psi_j(JSchur& K, const Element& x, int d);

/// b_A for the class of A, stored at the level of A + shift I: {A + pI} for
/// the first even p >= 0 with a nonnegative diagonal and
/// xi_{-2}({A + (p+2)I}) = {A + pI}. Throws NotStabilized past pmax.
struct SlCanonical {
  Element element;
  int shift = 0;
};
SlCanonical sl_canonical_j(JSchur& K, const Cell& A, int pmax = 20);

/// tau^k_{m,n}: blockdiag(A, 2kI + eps, J A J)
Element tau_embed(const Element& x, int n, int k);

}  // namespace qschur
