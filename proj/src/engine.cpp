#include "qschur/engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qschur {

std::string Gen::str() const {
  std::ostringstream os;
  os << kind << h;
  if (a != 1) os << "^(" << a << ")";
  return os.str();
}

std::string word_str(const Word& w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += it->str();
  }
  return s.empty() ? "1" : s;
}

namespace {

long lower_corner(const Cell& A, int i, int j) {
  long s = 0;
  for (int r = i; r < A.n(); ++r)
    for (int c = 0; c <= j; ++c) s += A(r, c);
  return s;
}

}  // namespace

bool preceq_full(const Cell& A, const Cell& B) {
  if (A.n() != B.n()) throw ShapeMismatch("order comparison of different sizes");
  const int n = A.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j && corner(A, i, j) > corner(B, i, j)) return false;
      if (i > j && lower_corner(A, i, j) > lower_corner(B, i, j)) return false;
    }
  return true;
}

long rank_full(const Cell& A) {
  long s = 0;
  const int n = A.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) s += corner(A, i, j);
      if (i > j) s += lower_corner(A, i, j);
    }
  return s;
}

Element Algebra::gen_mul(const Gen& g, const Cell& B) {
  auto key = std::make_pair(g, B);
  auto it = gen_cache_.find(key);
  if (it != gen_cache_.end()) return it->second;
  Element r = gen_mul_raw(g, B);
  gen_cache_.emplace(key, r);
  return r;
}

Element Algebra::apply(const Gen& g, const Element& x) {
  Element out;
  for (auto& [c, k] : x) out.add_scaled(gen_mul(g, c), k);
  return out;
}

Element Algebra::apply(const Word& w, const Element& x) {
  Element cur = x;
  for (const Gen& g : w) cur = apply(g, cur);
  return cur;
}

const Element& Algebra::monomial(const Cell& A) {
  auto it = mono_cache_.find(A);
  if (it != mono_cache_.end()) return it->second;
  Word w = word(A);
  Element m = finalize(apply(w, Element(Cell::diag(A.co()))));
  if (!m.coeff(A).is_one())
    throw TriangularityFailure(name() + ": monomial " + word_str(w) + " has leading coefficient " + m.coeff(A).str() +
                               " at " + A.str());
  for (auto& [c, k] : m)
    if (c != A && !(preceq_full(c, A) && c.ro() == A.ro() && c.co() == A.co()))
      throw TriangularityFailure(name() + ": monomial " + word_str(w) + " of " + A.str() + " contains " + c.str());
  return mono_cache_.emplace(A, std::move(m)).first->second;
}

const std::vector<Cell>& Algebra::down_set(const Cell& A) {
  auto it = down_cache_.find(A);
  if (it != down_cache_.end()) return it->second;
  const int n = A.n();
  const auto ro = A.ro(), co = A.co();
  std::vector<std::pair<int, int>> free;
  std::vector<long> bound;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (symmetric() && i > j) continue;
      free.emplace_back(i, j);
      bound.push_back(i < j ? corner(A, i, j) : lower_corner(A, i, j));
    }
  std::vector<Cell> out;
  Cell B(n);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == free.size()) {
      Cell C = B;
      for (int i = 0; i < n; ++i) {
        long s = 0;
        for (int j = 0; j < n; ++j)
          if (j != i) s += C(i, j);
        C.set(i, i, static_cast<int>(ro[static_cast<size_t>(i)] - s));
      }
      if (C.co() != co || !member(C) || !preceq_full(C, A)) return;
      out.push_back(C);
      return;
    }
    auto [i, j] = free[k];
    for (long x = 0; x <= bound[k]; ++x) {
      B.set(i, j, static_cast<int>(x));
      if (symmetric()) B.set(n - 1 - i, n - 1 - j, static_cast<int>(x));
      // partial corner check on the entries fixed so far
      if (i < j && corner(B, i, j) > corner(A, i, j)) break;
      rec(k + 1);
    }
    B.set(i, j, 0);
    if (symmetric()) B.set(n - 1 - i, n - 1 - j, 0);
  };
  rec(0);
  std::stable_sort(out.begin(), out.end(), [](const Cell& x, const Cell& y) { return rank_full(x) > rank_full(y); });
  if (out.empty() || out.front() != A) throw TriangularityFailure(name() + ": " + A.str() + " is not in the index set");
  return down_cache_.emplace(A, std::move(out)).first->second;
}

const Element& Algebra::bar_std(const Cell& A) {
  auto it = bar_cache_.find(A);
  if (it != bar_cache_.end()) return it->second;
  const Element& m = monomial(A);
  Element r = m;
  for (auto& [c, k] : m) {
    if (c == A) continue;
    r.add_scaled(bar_std(c), -k.bar());
  }
  return bar_cache_.emplace(A, std::move(r)).first->second;
}

Element Algebra::bar(const Element& x) {
  Element r;
  for (auto& [c, k] : x) r.add_scaled(bar_std(c), k.bar());
  return r;
}

const Element& Algebra::canonical(const Cell& A) {
  auto it = can_cache_.find(A);
  if (it != can_cache_.end()) return it->second;
  const auto& ds = down_set(A);
  // acc[C] = sum over processed B of bar(p_B) r_{C,B}
  Element acc;
  Element p;
  for (const Cell& C : ds) {
    Laurent pc;
    if (C == A) {
      pc = 1;
    } else {
      Laurent c = acc.coeff(C);
      if (!c.coeff(0).is_zero() || !(c + c.bar()).is_zero())
        throw NoSolution(name() + ": canonical recursion at " + C.str() + " under " + A.str() + " has c = " + c.str());
      pc = c.negative_part();
    }
    if (pc.is_zero()) continue;
    p.add(C, pc);
    const Element& b = bar_std(C);
    Laurent pb = pc.bar();
    for (auto& [c2, k] : b)
      if (c2 != C) acc.add(c2, pb * k);
  }
  return can_cache_.emplace(A, std::move(p)).first->second;
}

const Element& Algebra::product(const Cell& A, const Cell& B) {
  auto key = std::make_pair(A, B);
  auto it = prod_cache_.find(key);
  if (it != prod_cache_.end()) return it->second;
  Element r;
  if (A.co() == B.ro()) {
    r = apply(word(A), Element(B));
    for (auto& [c, k] : monomial(A)) {
      if (c == A) continue;
      r.add_scaled(product(c, B), -k);
    }
    r = finalize(std::move(r));
  }
  return prod_cache_.emplace(key, std::move(r)).first->second;
}

Element Algebra::multiply(const Element& x, const Element& y) {
  Element r;
  for (auto& [a, ka] : x)
    for (auto& [b, kb] : y) {
      if (a.co() != b.ro()) continue;
      r.add_scaled(product(a, b), ka * kb);
    }
  return r;
}

Element Algebra::to_canonical(const Element& x) {
  Element rest = x, out;
  while (!rest.is_zero()) {
    const Cell* top = nullptr;
    long best = 0;
    for (auto& [c, k] : rest) {
      long r = rank_full(c);
      if (!top || r > best) {
        top = &c;
        best = r;
      }
    }
    Cell C = *top;
    Laurent k = rest.coeff(C);
    out.add(C, k);
    rest.add_scaled(canonical(C), -k);
  }
  return out;
}

Element Algebra::from_canonical(const Element& x) {
  Element r;
  for (auto& [c, k] : x) r.add_scaled(canonical(c), k);
  return r;
}

Element Algebra::cb_product(const Cell& A, const Cell& B) {
  return to_canonical(multiply(canonical(A), canonical(B)));
}

const Element& WordHom::on_std(const Cell& A) {
  auto it = cache_.find(A);
  if (it != cache_.end()) return it->second;
  Element r = image_(A, src_.word(A));
  for (auto& [c, k] : src_.monomial(A)) {
    if (c == A) continue;
    r.add_scaled(on_std(c), -k);
  }
  return cache_.emplace(A, std::move(r)).first->second;
}

Element WordHom::operator()(const Element& x) {
  Element r;
  for (auto& [c, k] : x) r.add_scaled(on_std(c), k);
  return r;
}

UFit::UFit(const std::vector<std::pair<int, Laurent>>& samples) {
  const size_t N = samples.size();
  if (N < 2) throw FitUnstable("need at least two samples");
  for (auto& s : samples) {
    nodes_.push_back(s.first);
    diffs_.push_back(s.second);
  }
  for (size_t k = 1; k < N; ++k)
    for (size_t j = N - 1; j >= k; --j) {
      Laurent num = diffs_[j] - diffs_[j - 1];
      Laurent den = Laurent::mono(-nodes_[j]) - Laurent::mono(-nodes_[j - k]);
      try {
        diffs_[j] = num.div_exact(den);
      } catch (const NonExactDivision&) {
        throw FitUnstable("samples are not polynomial in u");
      }
    }
  degree_ = -1;
  for (size_t k = 0; k < N; ++k)
    if (!diffs_[k].is_zero()) degree_ = static_cast<int>(k);
  if (degree_ > static_cast<int>(N) - 2) throw FitUnstable("fit degree reaches the sample count");
}

Laurent UFit::eval(int p) const {
  if (degree_ < 0) return {};
  Laurent u = Laurent::mono(-p);
  Laurent r = diffs_[static_cast<size_t>(degree_)];
  for (int k = degree_ - 1; k >= 0; --k) r = r * (u - Laurent::mono(-nodes_[static_cast<size_t>(k)])) + diffs_[static_cast<size_t>(k)];
  return r;
}

Element StabilizedFamily::eval(int p) const {
  Element r;
  for (auto& [c, f] : fits) {
    Laurent x = f.eval(p);
    try {
      r.add(c, den.is_one() ? x : x.div_exact(den));
    } catch (const NonExactDivision&) {
      throw FitUnstable("fitted value at p = " + std::to_string(p) + " is not a Laurent polynomial");
    }
  }
  return r;
}

StabilizedFamily stabilize(const std::function<Element(int)>& sample, int p0, int max_degree, int max_den) {
  std::vector<int> shifts;
  std::vector<Element> vals;
  for (int D = 4; D <= max_degree; D *= 2) {
    while (static_cast<int>(shifts.size()) < D + 2) {
      int p = p0 + 2 * static_cast<int>(shifts.size());
      shifts.push_back(p);
      vals.push_back(sample(p));
    }
    std::map<Cell, std::vector<std::pair<int, Laurent>>> per;
    for (size_t k = 0; k < shifts.size(); ++k)
      for (auto& [c, x] : vals[k]) per[c];
    Laurent den = 1;
    for (int m = 0; m <= max_den; ++m) {
      if (m > 0) den = den * (Laurent(1) - Laurent::mono(-2 * m));
      StabilizedFamily fam;
      fam.shifts = shifts;
      fam.den = den;
      try {
        for (auto& [c, s0] : per) {
          std::vector<std::pair<int, Laurent>> s;
          for (size_t k = 0; k < shifts.size(); ++k) s.emplace_back(shifts[k], vals[k].coeff(c) * den);
          UFit f(s);
          fam.max_degree = std::max(fam.max_degree, f.degree());
          fam.fits.emplace(c, std::move(f));
        }
        return fam;
      } catch (const FitUnstable&) {
      }
    }
  }
  throw FitUnstable("no stable fit up to u-degree " + std::to_string(max_degree));
}

}  // namespace qschur
