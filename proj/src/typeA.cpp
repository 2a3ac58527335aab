#include "qschur/typeA.hpp"

#include <algorithm>

namespace qschur {

std::string TypeA::name() const { return context().name(); }

Context TypeA::context() const { return limit_ ? Context{Kind::ThetaTilde, n_, 0} : Context{Kind::ThetaD, n_, d_}; }

bool TypeA::member(const Cell& A) const {
  if (A.n() != n_) return false;
  if (limit_) return A.offdiag_nonneg();
  return A.nonneg() && A.total() == d_;
}

Element TypeA::gen_mul_raw(const Gen& g, const Cell& B) {
  if (g.h < 0 || g.h + 1 >= n_) throw WeightMismatch("generator index out of range");
  if (g.kind == 'E') return blm_E(g.h, g.a, B, limit_);
  if (g.kind == 'F') return blm_F(g.h, g.a, B, limit_);
  throw WeightMismatch(std::string("type A algebra has no generator ") + g.kind);
}

Word upper_word(const Cell& U) {
  const int n = U.n();
  Word w;
  for (int i = 0; i + 1 < n; ++i)
    for (int h = n - 2; h >= i; --h) {
      int a = 0;
      for (int j = h + 1; j < n; ++j) a += U(i, j);
      if (a) w.push_back({'E', h, a});
    }
  return w;
}

Word lower_word(const Cell& L) {
  Word w = upper_word(L.transpose());
  std::reverse(w.begin(), w.end());
  for (auto& g : w) g.kind = 'F';
  return w;
}

Word TypeA::word(const Cell& A) const {
  const int n = A.n();
  Cell U(n), L(n);
  auto ro = A.ro(), co = A.co();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) U.set(i, j, A(i, j));
      if (i > j) L.set(i, j, A(i, j));
    }
  auto ru = U.ro(), cl = L.co();
  for (int i = 0; i < n; ++i) {
    U.set(i, i, ro[static_cast<size_t>(i)] - ru[static_cast<size_t>(i)]);
    L.set(i, i, co[static_cast<size_t>(i)] - cl[static_cast<size_t>(i)]);
  }
  Word w = lower_word(L);
  Word u = upper_word(U);
  w.insert(w.end(), u.begin(), u.end());
  return w;
}

Element truncate_to_schur(const Element& x, int d) {
  Element r;
  for (auto& [c, k] : x)
    if (c.nonneg() && c.total() == d) r.add(c, k);
  return r;
}

namespace {

Element word_on_weight(TypeA& alg, const Word& w, const std::vector<int>& co) {
  if (!alg.limit())
    for (int x : co)
      if (x < 0) return {};
  return alg.apply(w, Element(Cell::diag(co)));
}

std::vector<int> plus(std::vector<int> v, int p) {
  for (auto& x : v) x += p;
  return v;
}

}  // namespace

XiShift::XiShift(TypeA& K, int p)
    : hom_(K, [&K, p](const Cell& A, const Word& w) { return word_on_weight(K, w, plus(A.co(), p)); }) {
  if (!K.limit()) throw std::invalid_argument("xi_p is defined on the limit algebra");
}

TransferA::TransferA(TypeA& src, TypeA& dst)
    : src_(src), dst_(dst), hom_(src, [&dst](const Cell& A, const Word& w) { return word_on_weight(dst, w, plus(A.co(), -1)); }) {
  if (src.limit() || dst.limit() || src.size() != dst.size() || src.d() != dst.d() + src.size())
    throw std::invalid_argument("transfer needs S(n,d+n) -> S(n,d)");
}

void TransferA::check_consistency(const Cell& A) {
  // second route: through the word of the transpose, then transposed back,
  // i.e. the anti-automorphism; here simply the upper-first order
  const int n = A.n();
  Cell U(n), L(n);
  auto ro = A.ro(), co = A.co();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) U.set(i, j, A(i, j));
      if (i > j) L.set(i, j, A(i, j));
    }
  // M' = M(L') M(U') with L' built on ro(A) and U' on co(A)
  auto cu = U.co(), rl = L.ro();
  Cell U2 = U, L2 = L;
  for (int i = 0; i < n; ++i) {
    L2.set(i, i, ro[static_cast<size_t>(i)] - rl[static_cast<size_t>(i)]);
    U2.set(i, i, co[static_cast<size_t>(i)] - cu[static_cast<size_t>(i)]);
  }
  Word w = upper_word(U2);
  Word l = lower_word(L2);
  w.insert(w.end(), l.begin(), l.end());
  Element m = src_.apply(w, Element(Cell::diag(co)));
  if (!m.coeff(A).is_one()) return;  // not a monomial for A; nothing to compare
  for (auto& [c, k] : m)
    if (c != A && !preceq_full(c, A)) return;
  Element img = word_on_weight(dst_, w, plus(co, -1));
  for (auto& [c, k] : m)
    if (c != A) img.add_scaled(hom_.on_std(c), -k);
  if (img != hom_.on_std(A))
    throw InconsistentHom("transfer of " + A.str() + " differs between monomial words");
}

Laurent chi(const Element& x) {
  Laurent r;
  for (auto& [c, k] : x) {
    const int n = c.n();
    if (c.total() != n) throw WeightMismatch("chi is defined on S(n,n)");
    // permutation cells only carry a nonzero determinant
    std::vector<int> perm(static_cast<size_t>(n), -1);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        if (c(i, j) == 1 && perm[static_cast<size_t>(i)] < 0) perm[static_cast<size_t>(i)] = j;
        else if (c(i, j) != 0) ok = false;
      }
    for (int i = 0; i < n && ok; ++i)
      if (perm[static_cast<size_t>(i)] < 0) ok = false;
    if (!ok) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
    Laurent t = Laurent::mono(static_cast<int>(-d_stat(c)));
    r += (inv % 2 ? -t : t) * k;
  }
  return r;
}

Laurent binom_sym(long m, long b) { return q::binom(m, b).shift(static_cast<int>(-b * (m - b))); }

Gl2Module::Gl2Module(int l1, int l2) : l1_(l1), l2_(l2), m_(l1 - l2) {
  if (l1 < l2) throw std::invalid_argument("highest weight must be dominant");
}

Gl2Module::Vec Gl2Module::act(const Gen& g, const Vec& x) const {
  Vec r;
  for (auto& [k, c] : x) {
    if (g.kind == 'E') {
      int k2 = k - g.a;
      if (k2 < 0) continue;
      r[k2] += c * binom_sym(m_ - k + g.a, g.a);
    } else if (g.kind == 'F') {
      int k2 = k + g.a;
      if (k2 > m_) continue;
      r[k2] += c * binom_sym(k + g.a, g.a);
    } else {
      throw WeightMismatch("gl2 module: bad generator");
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

Gl2Module::Vec Gl2Module::act_std(TypeA& K, const Cell& A, const Vec& x) {
  if (!K.limit() || K.size() != 2) throw WeightMismatch("gl2 module needs K(2)");
  Vec r;
  for (auto& [k, c] : x) {
    if (weight(k) != A.co()) continue;
    auto& slot = cache_[A];
    auto it = slot.find(k);
    if (it == slot.end()) {
      Vec img = {{k, Laurent(1)}};
      for (const Gen& g : K.word(A)) img = act(g, img);
      for (auto& [b, mb] : K.monomial(A)) {
        if (b == A) continue;
        for (auto& [k2, c2] : act_std(K, b, {{k, Laurent(1)}})) img[k2] -= mb * c2;
      }
      for (auto it2 = img.begin(); it2 != img.end();)
        it2 = it2->second.is_zero() ? img.erase(it2) : std::next(it2);
      it = cache_[A].emplace(k, img).first;
    }
    for (auto& [k2, c2] : it->second) r[k2] += c * c2;
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

Gl2Module::Vec Gl2Module::act_element(TypeA& K, const Element& a, const Vec& x) {
  Vec r;
  for (auto& [c, k] : a)
    for (auto& [k2, c2] : act_std(K, c, x)) r[k2] += k * c2;
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

SlCanonicalA sl_canonical_a(TypeA& K, const Cell& A, int pmax) {
  if (!K.limit()) throw WeightMismatch("class elements live in the limit algebra");
  Element prev;
  int pprev = -1;
  for (int p = 1; p <= pmax; ++p) {
    XiShift xi(K, -p);
    Element cur = xi(K.canonical(shift(A, p)));
    if (pprev >= 0 && cur == prev) return {cur, pprev};
    prev = std::move(cur);
    pprev = p;
  }
  throw NotStabilized("b of " + A.str() + " not stable by shift " + std::to_string(pmax));
}

Element positive_basis(TypeA& K, const Cell& A) { return sl_canonical_a(K, A).element; }

Cell theta_bar_rep(const Cell& A) {
  const int n = A.n();
  long t = A.total();
  long p = t >= 0 ? -(t / n) : (-t + n - 1) / n;
  return shift(A, static_cast<int>(p));
}

}  // namespace qschur
