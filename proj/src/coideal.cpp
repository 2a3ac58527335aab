#include "qschur/coideal.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <tuple>

namespace qschur {

long dj_stat(const Cell& A) {
  const int n = A.n(), r = n / 2;
  long t = 0;
  for (int i = r; i < n; ++i)
    for (int j = 0; j < r; ++j) t += A(i, j);
  return (d_stat(A) - t) / 2;
}

Element j_restrict(const Cell& A) {
  const int n = A.n(), r = n / 2;
  Cell C(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) C.set(i, j, A(i, j));
  C.set(r, r, (A(r, r) - 1) / 2);
  const long dA = dj_stat(A);
  Element out;
  // split a_{i,r} between rows i and n-1-i
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      out.add(C, Laurent::mono(static_cast<int>(d_stat(C) - dA)));
      return;
    }
    for (int x = 0; x <= A(i, r); ++x) {
      C.set(i, r, x);
      C.set(n - 1 - i, r, A(i, r) - x);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

Element j_decode(const Element& x, int n) {
  const int r = n / 2;
  Element out;
  for (auto& [C, k] : x) {
    bool rep = true;
    for (int i = r + 1; i < n && rep; ++i)
      if (C(i, r) != 0) rep = false;
    if (!rep) continue;
    Cell A(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) {
        A.set(i, j, C(i, j));
        A.set(n - 1 - i, n - 1 - j, C(i, j));
      }
    for (int i = 0; i < r; ++i) {
      A.set(i, r, C(i, r));
      A.set(n - 1 - i, r, C(i, r));
    }
    A.set(r, r, 2 * C(r, r) + 1);
    out.add(A, k.shift(static_cast<int>(dj_stat(A) - d_stat(C))));
  }
  return out;
}

namespace {

// one application of e_h or f_h on the type A side
Element j_image_step(char kind, int h, const Element& x, int n) {
  const int r = n / 2;
  Element out;
  for (auto& [C, c] : x) {
    const auto nu = C.ro();
    auto N = [&](int i) { return nu[static_cast<size_t>(i)]; };
    if (kind == 'e') {
      out.add_scaled(blm_E(h, 1, C, false), c * Laurent::mono(N(n - 1 - h)));
      out.add_scaled(blm_F(n - 2 - h, 1, C, false), c * Laurent::mono(-N(h)));
    } else {
      const int del = h == r - 1 ? 1 : 0;
      out.add_scaled(blm_E(n - 2 - h, 1, C, false), c * Laurent::mono(N(h + 1) + del));
      out.add_scaled(blm_F(h, 1, C, false), c * Laurent::mono(-N(n - 2 - h) - del));
    }
  }
  return out;
}

Laurent sym_factorial(int a) {
  Laurent f = 1;
  for (int t = 1; t <= a; ++t) f = f * q::qint(t).shift(-(t - 1));
  return f;
}

}  // namespace

Element j_gen_mul(const Gen& g, const Cell& B) {
  const int n = B.n(), r = n / 2;
  if (g.h < 0 || g.h >= r) throw WeightMismatch("coideal generator index out of range");
  if (g.kind != 'e' && g.kind != 'f') throw WeightMismatch(std::string("no coideal generator ") + g.kind);
  Element x = j_restrict(B);
  for (int t = 0; t < g.a && !x.is_zero(); ++t) x = j_image_step(g.kind, g.h, x, n);
  if (g.a > 1) {
    const Laurent f = sym_factorial(g.a);
    Element y;
    for (auto& [c, k] : x) y.add(c, k.div_exact(f));
    x = std::move(y);
  }
  return j_decode(x, n);
}

Cell j_gen_cell(const Gen& g, const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size()), h = g.h, a = g.a;
  Cell G = Cell::diag(lambda);
  if (g.kind == 'e') {
    G.add(h, h + 1, a);
    G.add(n - 1 - h, n - 2 - h, a);
    G.add(h + 1, h + 1, -a);
    G.add(n - 2 - h, n - 2 - h, -a);
  } else {
    G.add(h + 1, h, a);
    G.add(n - 2 - h, n - 1 - h, a);
    G.add(h, h, -a);
    G.add(n - 1 - h, n - 1 - h, -a);
  }
  return G;
}

JSchur::JSchur(int n, int d, bool iota, bool limit) : n_(n), d_(d), iota_(iota), limit_(limit) {
  if (n % 2 == 0 || n < 1 || n > kMaxN) throw std::invalid_argument("coideal Schur algebras need odd n <= 7");
}

JSchur::JSchur(int n, int d, bool iota) : JSchur(n, d, iota, false) {}

JSchur JSchur::limit(int n, bool iota) { return JSchur(n, 0, iota, true); }

JSchur JSchur::limit_even_middle(int n) {
  JSchur K(n, 0, false, true);
  K.even_middle_ = true;
  return K;
}

Context JSchur::context() const {
  if (limit_) return {iota_ ? Kind::XiIotaTilde : Kind::XiTilde, n_, 0};
  return {iota_ ? Kind::XiIotaD : Kind::XiD, n_, d_};
}

std::string JSchur::name() const { return context().name() + (even_middle_ ? ":even" : ""); }

bool JSchur::member(const Cell& A) const {
  if (!even_middle_) return violation(A, context()).empty();
  const int r = n_ / 2;
  return A.n() == n_ && A.offdiag_nonneg() && A.centro_symmetric() && A(r, r) % 2 == 0;
}

Word JSchur::word(const Cell& A) const {
  const int n = A.n(), r = n / 2;
  Cell U(n);
  auto ro = A.ro();
  for (int i = 0; i < n; ++i) {
    long s = 0;
    for (int j = i + 1; j < n; ++j) {
      U.set(i, j, A(i, j));
      s += A(i, j);
    }
    U.set(i, i, static_cast<int>(ro[static_cast<size_t>(i)] - s));
  }
  Word w = upper_word(U);
  for (auto& g : w) {
    if (g.h <= r - 1) {
      g.kind = 'e';
    } else {
      g.kind = 'f';
      g.h = n - 2 - g.h;
    }
  }
  return w;
}

int JSchur::stable_shift(const Gen& g, const Cell& B, bool odd) {
  const int n = B.n();
  long off = 0;
  int mind = B(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) mind = std::min(mind, B(i, i));
      else off += B(i, j);
    }
  int p = odd ? 1 : 2;
  // at the middle index the middle entry moves by 2a
  while (mind + p < 2 * g.a + off + 2) p += 2;
  return p;
}

Element JSchur::gen_mul_raw(const Gen& g, const Cell& B) {
  if (!limit_) {
    // words pass through non-iota cells, so only the jSchur conditions apply
    if (!violation(B, {Kind::XiD, n_, d_}).empty()) throw WeightMismatch(name() + ": " + B.str() + " is not an index");
    return j_gen_mul(g, B);
  }
  auto sample = [&](int p) {
    Element out;
    for (auto& [c, k] : j_gen_mul(g, shift(B, p))) out.add(shift(c, -p), k);
    return out;
  };
  try {
    return stabilize(sample, stable_shift(g, B, even_middle_)).eval(0);
  } catch (const FitUnstable& e) {
    throw FitUnstable(std::string(e.what()) + " for " + g.str() + " * " + B.str());
  }
}

Element JSchur::finalize(Element x) const {
  if (!(limit_ && iota_)) return x;
  Element r;
  for (auto& [c, k] : x)
    if (member(c)) r.add(c, k);
  return r;
}

}  // namespace qschur

namespace qschur {

// ---- rank one

Cell rank1_cell(int a, int b) { return Cell({{a, 0, b}, {0, 1, 0}, {b, 0, a}}); }

Element rank1_monomial(int a, int r) {
  Element M(rank1_cell(a, r));
  for (int i = 1; i <= r; ++i) M.add(rank1_cell(a + i, r - i), q::binom(a + i, i).bar().shift(static_cast<int>(q::beta(a, i))));
  return M;
}

Laurent rank1_b(int i, int a) {
  Laurent num = 1, den = 1;
  for (int k = 1; k <= i; ++k) num *= Laurent::mono(-a - k) - Laurent::mono(a + k);
  for (int k = 1; k <= i / 2; ++k) den *= Laurent(1) - Laurent::mono(4 * k);
  return num.div_exact(den);
}

Element rank1_bar(int a, int r) {
  Element B;
  for (int i = 0; i <= r; ++i) B.add(rank1_cell(a + i, r - i), rank1_b(i, a));
  return B;
}

Laurent rank1_gamma(int a, int i) {
  if (a < 0) return rank1_gamma_rec(a, i);
  const int s = i / 2;
  const bool odd_a = (a % 2 + 2) % 2 == 1;
  Laurent num = 1, den = 1;
  for (int k = 1; k <= s; ++k) {
    num *= Laurent(1) - Laurent::mono(odd_a ? -2 * a - 4 * k - 2 : -2 * a - 4 * k);
    den *= Laurent(1) - Laurent::mono(-4 * k);
  }
  int e;
  if (!odd_a) e = i % 2 == 0 ? -2 * s * s - s : -a - 2 * s * s - 3 * s - 1;
  else e = i % 2 == 0 ? -2 * s * s + s : -a - 2 * s * s - s - 1;
  return num.div_exact(den).shift(e);
}

Laurent rank1_gamma_rec(int a, int i) {
  std::vector<Laurent> g{Laurent(1)};
  for (int k = 1; k <= i; ++k) {
    Laurent s;
    for (int j = 0; j < k; ++j) s += g[static_cast<size_t>(j)].bar() * rank1_b(k - j, a + j);
    // gamma - bar(gamma) = s, gamma in v^-1 Z[v^-1]
    g.push_back(s.negative_part());
  }
  return g[static_cast<size_t>(i)];
}

Element rank1_canonical(int a, int r) {
  Element C;
  for (int i = 0; i <= r; ++i) C.add(rank1_cell(a + i, r - i), rank1_gamma(a, i));
  return C;
}

// ---- t

Cell t_cell(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size()), r = n / 2;
  Cell X = Cell::diag(lambda) + Cell::theta_unit(n, r - 1, r + 1);
  X.add(r - 1, r - 1, -1);
  X.add(r + 1, r + 1, -1);
  return X;
}

Element t_multiply(const Cell& A, bool limit) {
  const int n = A.n(), r = n / 2, lo = r - 1, hi = r + 1;
  Element out;
  long s_hi = 0, s_lo = 0;
  for (int j = 0; j < n; ++j) {
    s_hi += A(hi, j);
    Cell C = A - Cell::theta_unit(n, lo, j) + Cell::theta_unit(n, hi, j);
    const bool ok = limit ? C.offdiag_nonneg() : C.nonneg();
    if (ok) {
      const int e = static_cast<int>(s_hi - s_lo) - (j > r ? 1 : 0);
      out.add(C, q::qint_bar(A(hi, j) + 1).shift(e));
    }
    s_lo += A(lo, j);
  }
  return out;
}

namespace {

// t 1_lambda in a finite algebra: {X}, or 1_lambda when X is not an index
Element t_finite(JSchur& S, const Cell& A) {
  const Cell X = t_cell(A.ro());
  if (!S.member(X)) return Element(A);
  return S.multiply(S.canonical(X), Element(A));
}

JSchur& finite_at(int n, int d, bool iota) {
  static std::map<std::tuple<int, int, bool>, std::unique_ptr<JSchur>> pool;
  auto& p = pool[{n, d, iota}];
  if (!p) p = std::make_unique<JSchur>(n, d, iota);
  return *p;
}

}  // namespace

Element t_multiply(JSchur& S, const Element& x) {
  Element out;
  for (auto& [c, k] : x) {
    if (!S.is_limit()) {
      out.add_scaled(t_finite(S, c), k);
      continue;
    }
    // the limit t is the stable value of the finite ones
    const Cell B = c;
    const int n = B.n();
    auto sample = [&](int p) {
      const Cell Bp = S.iota() ? shift(B, p, Unit::IotaI) : shift(B, p);
      JSchur& F = finite_at(n, static_cast<int>((Bp.total() - 1) / 2), S.iota());
      Element r;
      for (auto& [C, v] : t_finite(F, Bp)) r.add(S.iota() ? shift(C, -p, Unit::IotaI) : shift(C, -p), v);
      return r;
    };
    out.add_scaled(S.finalize_public(stabilize(sample, JSchur::stable_shift(Gen{'e', 0, 2}, B)).eval(0)), k);
  }
  return out;
}

// ---- homomorphisms

namespace {

std::vector<int> plus(std::vector<int> v, int p) {
  for (auto& x : v) x += p;
  return v;
}

Element word_image(JSchur& dst, const Word& w, const std::vector<int>& lambda) {
  const Cell D = Cell::diag(lambda);
  if (!dst.member(D)) return {};
  return dst.apply(w, Element(D));
}

}  // namespace

TransferJ::TransferJ(JSchur& src, JSchur& dst)
    : src_(src), dst_(dst), hom_(src, [this](const Cell& A, const Word& w) {
        return word_image(dst_, w, plus(A.co(), -2));
      }) {
  if (src.is_limit() || dst.is_limit() || src.size() != dst.size() || src.d() != dst.d() + src.size())
    throw std::invalid_argument("transfer needs S^j(n, d + n) -> S^j(n, d)");
}

void TransferJ::check_consistency(const Cell& A, int amax) {
  const int n = A.n();
  const auto lam = A.ro();
  const auto lam2 = plus(lam, -2);
  for (char kind : {'e', 'f'})
    for (int h = 0; h < n / 2; ++h)
      for (int a = 1; a <= amax; ++a) {
        const Gen g{kind, h, a};
        const Cell G = j_gen_cell(g, lam);
        if (!src_.member(G)) continue;
        const Element lhs = hom_(src_.multiply(Element(G), Element(A)));
        const Element rhs = dst_.apply(g, on_std(A));
        // g acting on weight lam2 is [G - 2I] when that is an index
        const Cell G2 = j_gen_cell(g, lam2);
        const Element rhs2 = dst_.member(G2) ? dst_.multiply(Element(G2), on_std(A)) : Element();
        if (lhs != rhs || lhs != rhs2)
          throw InconsistentHom("transfer: " + g.str() + " times " + A.str() + " gives " + lhs.str() + " vs " +
                                rhs.str());
      }
}

XiJ::XiJ(JSchur& K, int p)
    : hom_(K, [&K, p](const Cell& A, const Word& w) { return word_image(K, w, plus(A.co(), p)); }) {
  if (!K.is_limit() || K.iota()) throw std::invalid_argument("xi^j acts on the limit coideal algebra");
  if (p % 2 != 0 && !K.even_middle()) throw ParityError("xi^j needs an even shift");
}

Rank1Hom::Rank1Hom(JSchur& src, JSchur& dst, int shift) : src_(src), dst_(dst), shift_(shift) {
  if (!src.iota() || !dst.iota() || src.size() != 3 || dst.size() != 3)
    throw std::invalid_argument("rank one homomorphisms act on the 3 x 3 iota algebras");
}

const Element& Rank1Hom::on_std(const Cell& A) {
  auto it = cache_.find(A);
  if (it != cache_.end()) return it->second;
  if (!src_.member(A)) throw InvalidCell(A.str() + " is not an index of " + src_.name());
  const int a = A(0, 0), b = A(0, 2);
  Element r;
  if (b == 0) {
    const Cell D = rank1_cell(a + shift_, 0);
    if (dst_.member(D)) r = Element(D);
  } else {
    // t [A_{a+1,b-1}] = c [A_{a,b}] + lower terms
    const Cell B = rank1_cell(a + 1, b - 1);
    const Element tB = t_multiply(src_, Element(B));
    const Laurent c = tB.coeff(A);
    Element num = t_multiply(dst_, on_std(B));
    for (auto& [C, k] : tB)
      if (C != A) num.add_scaled(on_std(C), -k);
    for (auto& [C, k] : num) r.add(C, k.div_exact(c));
  }
  return cache_.emplace(A, std::move(r)).first->second;
}

Element Rank1Hom::operator()(const Element& x) {
  Element r;
  for (auto& [c, k] : x) r.add_scaled(on_std(c), k);
  return r;
}

Element hybrid_monomial(JSchur& S, const Cell& A) {
  const int n = A.n(), r = n / 2;
  const Word w = S.word(A);
  Element x(Cell::diag(A.co()));
  for (size_t i = 0; i < w.size() && !x.is_zero(); ++i) {
    const Gen& g = w[i];
    if (g.kind == 'f' && g.h == r - 1 && i + 1 < w.size() && w[i + 1] == Gen{'e', r - 1, g.a}) {
      const auto lam = x.begin()->first.ro();
      Cell X = Cell::diag(lam) + Cell::theta_unit(n, r - 1, r + 1).scaled(g.a);
      X.add(r - 1, r - 1, -g.a);
      X.add(r + 1, r + 1, -g.a);
      x = S.multiply(S.canonical(X), x);
      ++i;
    } else {
      x = S.apply(g, x);
    }
  }
  Element out;
  for (auto& [c, k] : x)
    if (S.member(c)) out.add(c, k);
  return out;
}

std::vector<std::string> hybrid_trace(const Cell& A) {
  const int r = A.n() / 2;
  JSchur S = JSchur::limit(A.n(), true);
  const Word w = S.word(A);
  std::vector<std::string> out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].kind == 'f' && w[i].h == r - 1 && i + 1 < w.size() && w[i + 1] == Gen{'e', r - 1, w[i].a}) {
      out.push_back("{t^(" + std::to_string(w[i].a) + ")}");
      ++i;
    } else {
      out.push_back(w[i].str());
    }
  }
  return out;
}

Element truncate_to_jschur(const Element& x, int d, bool iota) {
  Element out;
  for (auto& [c, k] : x)
    if (violation(c, {iota ? Kind::XiIotaD : Kind::XiD, c.n(), d}).empty()) out.add(c, k);
  return out;
}

Element psi_j(JSchur& K, const Element& x, int d) {
  Element out;
  std::map<int, Element> by_shift;
  for (auto& [c, k] : x) {
    const int n = c.n();
    const long diff = 2L * d + 1 - c.total();
    if (diff % (2L * n) != 0) continue;
    by_shift[static_cast<int>(diff / n)].add(c, k);
  }
  for (auto& [p, part] : by_shift) {
    if (p == 0) {
      out += truncate_to_jschur(part, d);
    } else {
      XiJ xi(K, p);
      out += truncate_to_jschur(xi(part), d);
    }
  }
  return out;
}

namespace {
int min_diag(const Cell& A) {
  int m = A(0, 0);
  for (int i = 1; i < A.n(); ++i) m = std::min(m, A(i, i));
  return m;
}
}  // namespace

SlCanonical sl_canonical_j(JSchur& K, const Cell& A, int pmax) {
  int p = 0;
  while (min_diag(shift(A, p)) < 0) p += 2;
  XiJ xi(K, -2);
  for (; p <= pmax; p += 2) {
    Element low = K.canonical(shift(A, p));
    if (xi(K.canonical(shift(A, p + 2))) == low) return {low, p};
  }
  throw NotStabilized("b of " + A.str() + " not stable by shift " + std::to_string(pmax));
}

Element tau_embed(const Element& x, int n, int k) {
  Element out;
  for (auto& [c, v] : x) out.add(embed_tau(c, n, k), v);
  return out;
}

}  // namespace qschur
