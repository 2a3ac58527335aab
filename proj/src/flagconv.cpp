#include "qschur/flagconv.hpp"

#include "qschur/coideal.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qschur::flag {

Field::Field(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("field order must be prime");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("field order must be prime");
  inv_.assign(static_cast<size_t>(q), 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (a * b % q == 1) inv_[static_cast<size_t>(a)] = b;
}

Subspace Field::rref(std::vector<Vec> m) const {
  if (m.empty()) return {};
  const size_t N = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < N && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const int s = inv(m[r][c]);
    for (auto& x : m[r]) x = static_cast<uint8_t>(mul(x, s));
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int f = m[i][c];
      for (size_t j = 0; j < N; ++j) m[i][j] = static_cast<uint8_t>(sub(m[i][j], mul(f, m[r][j])));
    }
    ++r;
  }
  m.resize(r);
  return {std::move(m)};
}

int Field::rank(std::vector<Vec> m) const { return rref(std::move(m)).dim(); }

int Field::form(const Vec& x, const Vec& y) const {
  const size_t N = x.size();
  int s = 0;
  for (size_t i = 0; i < N; ++i) s = add(s, mul(x[i], y[N - 1 - i]));
  return s;
}

Subspace Field::perp(const Subspace& V, int N) const {
  // solve B(v_k, y) = 0: rows w_k with (w_k)_j = (v_k)_{N-1-j}
  std::vector<Vec> eq;
  for (auto& v : V.rows) {
    Vec w(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) w[static_cast<size_t>(j)] = v[static_cast<size_t>(N - 1 - j)];
    eq.push_back(w);
  }
  Subspace E = rref(eq);
  std::vector<int> piv;
  for (auto& r : E.rows) piv.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](uint8_t x) { return x != 0; }) - r.begin()));
  std::vector<Vec> basis;
  for (int f = 0; f < N; ++f) {
    if (std::find(piv.begin(), piv.end(), f) != piv.end()) continue;
    Vec y(static_cast<size_t>(N), 0);
    y[static_cast<size_t>(f)] = 1;
    for (size_t k = 0; k < E.rows.size(); ++k)
      y[static_cast<size_t>(piv[k])] = static_cast<uint8_t>(sub(0, E.rows[k][static_cast<size_t>(f)]));
    basis.push_back(y);
  }
  return rref(basis);
}

namespace {

std::vector<int> pivots(const Subspace& V) {
  std::vector<int> p;
  for (auto& r : V.rows) p.push_back(static_cast<int>(std::find_if(r.begin(), r.end(), [](uint8_t x) { return x != 0; }) - r.begin()));
  return p;
}

// all k-dimensional subspaces of span(basis), as coordinate RREFs lifted
void subspaces_in(const Field& F, const std::vector<Vec>& basis, int k, const std::function<void(std::vector<Vec>)>& emit,
                  long& nodes, long budget) {
  const int m = static_cast<int>(basis.size());
  if (k > m || k < 0) return;
  const size_t N = basis.empty() ? 0 : basis[0].size();
  std::vector<int> piv(static_cast<size_t>(k));
  std::function<void(int, int)> choose = [&](int i, int from) {
    if (i == k) {
      // free entries: row t, columns c > piv[t] not pivots
      std::vector<std::pair<int, int>> fr;
      for (int t = 0; t < k; ++t)
        for (int c = piv[static_cast<size_t>(t)] + 1; c < m; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) fr.emplace_back(t, c);
      std::vector<int> val(fr.size(), 0);
      while (true) {
        if (++nodes > budget) throw TooLarge("flag enumeration exceeds the node budget");
        std::vector<Vec> rows;
        for (int t = 0; t < k; ++t) {
          std::vector<int> coord(static_cast<size_t>(m), 0);
          coord[static_cast<size_t>(piv[static_cast<size_t>(t)])] = 1;
          for (size_t u = 0; u < fr.size(); ++u)
            if (fr[u].first == t) coord[static_cast<size_t>(fr[u].second)] = val[u];
          Vec v(N, 0);
          for (int c = 0; c < m; ++c)
            if (coord[static_cast<size_t>(c)])
              for (size_t j = 0; j < N; ++j)
                v[j] = static_cast<uint8_t>(F.add(v[j], F.mul(coord[static_cast<size_t>(c)], basis[static_cast<size_t>(c)][j])));
          rows.push_back(v);
        }
        emit(std::move(rows));
        size_t u = 0;
        while (u < val.size() && ++val[u] == F.q()) val[u++] = 0;
        if (u == val.size()) break;
      }
      return;
    }
    for (int c = from; c < m; ++c) {
      piv[static_cast<size_t>(i)] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
}

// basis of a complement of V inside W (V <= W)
std::vector<Vec> complement(const Field& F, const Subspace& V, const Subspace& W) {
  std::vector<Vec> cur = V.rows, out;
  int r = V.dim();
  for (auto& w : W.rows) {
    auto t = cur;
    t.push_back(w);
    if (F.rank(t) > r) {
      cur = std::move(t);
      out.push_back(w);
      ++r;
    }
  }
  return out;
}

Subspace ambient(int N) {
  Subspace S;
  for (int i = 0; i < N; ++i) {
    Vec v(static_cast<size_t>(N), 0);
    v[static_cast<size_t>(i)] = 1;
    S.rows.push_back(v);
  }
  return S;
}

}  // namespace

FlagSpace::FlagSpace(Family fam, std::vector<int> steps, int q) : fam_(fam), steps_(std::move(steps)), field_(q) {}

FlagSpace FlagSpace::enumerate(Family fam, const std::vector<int>& steps, int q, long budget) {
  for (int s : steps)
    if (s < 0) throw std::invalid_argument("negative flag step");
  if (fam == Family::BC && q == 2) throw EvenField("isotropic flags need odd q");
  FlagSpace S(fam, steps, q);
  const Field& F = S.field_;
  const int n = static_cast<int>(steps.size());
  int N = 0;
  for (int s : steps) N += s;
  S.N_ = N;
  long nodes = 0;
  const Subspace full = flag::ambient(N);
  if (fam == Family::A) {
    Flag cur;
    std::function<void(int, const Subspace&)> rec = [&](int i, const Subspace& V) {
      if (i == n - 1) {
        cur.push_back(full);
        S.flags_.push_back(cur);
        cur.pop_back();
        return;
      }
      const auto comp = complement(F, V, full);
      subspaces_in(F, comp, steps[static_cast<size_t>(i)], [&](std::vector<Vec> add) {
        auto rows = V.rows;
        for (auto& a : add) rows.push_back(std::move(a));
        Subspace W = F.rref(rows);
        cur.push_back(W);
        rec(i + 1, W);
        cur.pop_back();
      }, nodes, budget);
    };
    if (n == 0) return S;
    rec(0, Subspace{});
    return S;
  }
  // BC: isotropic lower half, the upper half by perpendicularity
  if (n % 2 == 0) throw std::invalid_argument("isotropic flags need an odd number of steps");
  for (int i = 0; i < n; ++i)
    if (steps[static_cast<size_t>(i)] != steps[static_cast<size_t>(n - 1 - i)])
      throw std::invalid_argument("isotropic flag steps must be centro-symmetric");
  if (steps[static_cast<size_t>(n / 2)] % 2 == 0) throw std::invalid_argument("middle step must be odd");
  const int r = n / 2;
  // isotropic supersets of V of dimension k, one vector at a time
  auto supers = [&](const Subspace& V, int k) {
    std::set<Subspace> layer{V};
    for (int t = V.dim(); t < k; ++t) {
      std::set<Subspace> next;
      for (auto& W : layer) {
        const auto comp = complement(F, W, F.perp(W, N));
        subspaces_in(F, comp, 1, [&](std::vector<Vec> u) {
          if (F.form(u[0], u[0]) != 0) return;
          auto rows = W.rows;
          rows.push_back(u[0]);
          next.insert(F.rref(rows));
        }, nodes, budget);
      }
      layer = std::move(next);
    }
    return std::vector<Subspace>(layer.begin(), layer.end());
  };
  Flag cur;
  std::function<void(int, const Subspace&)> rec = [&](int i, const Subspace& V) {
    if (i == r) {
      Flag f = cur;
      for (int j = r - 1; j >= 0; --j) f.push_back(F.perp(cur[static_cast<size_t>(j)], N));
      f.push_back(full);
      S.flags_.push_back(std::move(f));
      return;
    }
    for (auto& W : supers(V, V.dim() + steps[static_cast<size_t>(i)])) {
      cur.push_back(W);
      rec(i + 1, W);
      cur.pop_back();
    }
  };
  rec(0, Subspace{});
  return S;
}

Cell orbit_invariant(const Field& F, const Flag& f, const Flag& g) {
  const int n = static_cast<int>(f.size());
  std::vector<std::vector<int>> D(static_cast<size_t>(n + 1), std::vector<int>(static_cast<size_t>(n + 1), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Subspace& V = f[static_cast<size_t>(i - 1)];
      const Subspace& W = g[static_cast<size_t>(j - 1)];
      auto rows = V.rows;
      rows.insert(rows.end(), W.rows.begin(), W.rows.end());
      D[static_cast<size_t>(i)][static_cast<size_t>(j)] = V.dim() + W.dim() - F.rank(rows);
    }
  Cell C(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto at = [&](int a, int b) { return D[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
      C.set(i - 1, j - 1, at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1));
    }
  return C;
}

BigInt StructurePolynomial::eval(const BigInt& q) const {
  BigInt s = 0;
  for (size_t k = coeffs.size(); k-- > 0;) s = s * q + coeffs[k];
  return s;
}

Laurent StructurePolynomial::in_v() const {
  Laurent r;
  for (size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) r += Laurent::mono(2 * static_cast<int>(k), coeffs[k]);
  return r;
}

bool StructurePolynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; });
}

std::optional<std::vector<BigInt>> interpolate(const std::vector<int>& qs, const std::vector<BigInt>& vals) {
  const size_t K = qs.size();
  std::vector<BigInt> dd = vals;
  for (size_t k = 1; k < K; ++k)
    for (size_t j = K - 1; j >= k; --j) {
      BigInt num = dd[j] - dd[j - 1];
      BigInt den = qs[j] - qs[j - k];
      if (num % den != 0) return std::nullopt;
      dd[j] = num / den;
    }
  // Newton form to monomials
  std::vector<BigInt> c(K, 0);
  for (size_t k = K; k-- > 0;) {
    // c = c * (q - qs[k]) + dd[k]
    std::vector<BigInt> nc(K, 0);
    for (size_t i = 0; i < K; ++i) {
      if (c[i] == 0) continue;
      if (i + 1 < K) nc[i + 1] += c[i];
      nc[i] -= c[i] * qs[k];
    }
    nc[0] += dd[k];
    c = std::move(nc);
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

const std::vector<int>& default_primes() {
  static const std::vector<int> p{3, 5, 7, 11, 13, 17, 19, 23};
  return p;
}

Oracle::Oracle(Family fam, std::vector<int> primes) : fam_(fam), primes_(std::move(primes)) {
  if (const char* env = std::getenv("QSCHUR_CACHE")) cache_dir_ = env;
}

const FlagSpace& Oracle::space(const std::vector<int>& steps, int q) {
  auto& p = spaces_[{steps, q}];
  if (!p) p = std::make_shared<FlagSpace>(FlagSpace::enumerate(fam_, steps, q, budget_));
  return *p;
}

std::vector<int> Oracle::steps_of(const std::vector<int>& sums) const {
  for (int s : sums)
    if (s < 0) throw InvalidCell("flag cells need nonnegative row and column sums");
  return sums;
}

std::map<Cell, BigInt> Oracle::counts(const Cell& A, const Cell& B, int q) {
  const auto key = std::make_tuple(A, B, q);
  auto it = count_cache_.find(key);
  if (it != count_cache_.end()) return it->second;
  if (A.co() != B.ro()) throw ShapeMismatch("co(A) != ro(B)");
  if (!A.nonneg() || !B.nonneg()) throw InvalidCell("flag cells must be nonnegative");
  const FlagSpace& S1 = space(steps_of(A.ro()), q);
  const FlagSpace& S2 = space(steps_of(A.co()), q);
  const FlagSpace& S3 = space(steps_of(B.co()), q);
  const Field& F = S1.field();
  const Flag& f = S1[0];
  std::vector<size_t> mid;
  for (size_t i = 0; i < S2.size(); ++i)
    if (orbit_invariant(F, f, S2[i]) == A) mid.push_back(i);
  std::map<Cell, size_t> reps;
  for (size_t i = 0; i < S3.size(); ++i) reps.emplace(orbit_invariant(F, f, S3[i]), i);
  std::map<Cell, BigInt> out;
  for (auto& [C, j] : reps) {
    long cnt = 0;
    for (size_t i : mid)
      if (orbit_invariant(F, S2[i], S3[j]) == B) ++cnt;
    if (cnt) out[C] = cnt;
  }
  count_cache_[key] = out;
  return out;
}

BigInt Oracle::fiber(const Cell& A, int q) {
  auto key = std::make_pair(A, q);
  auto it = fiber_cache_.find(key);
  if (it != fiber_cache_.end()) return it->second;
  const FlagSpace& S1 = space(steps_of(A.ro()), q);
  const FlagSpace& S2 = space(steps_of(A.co()), q);
  long cnt = 0;
  for (size_t i = 0; i < S2.size(); ++i)
    if (orbit_invariant(S1.field(), S1[0], S2[i]) == A) ++cnt;
  return fiber_cache_[key] = cnt;
}

namespace {

// degree bound D: nodes max(3, D+1), one more prime held out; D grows by 2
template <class F>
StructurePolynomial fit(const std::vector<int>& primes, int D, F value, const std::string& what) {
  for (;; D += 2) {
    const size_t nodes = static_cast<size_t>(std::max(3, D + 1));
    if (nodes + 1 > primes.size()) throw InterpolationUnstable(what + ": prime budget exhausted");
    StructurePolynomial P;
    P.primes.assign(primes.begin(), primes.begin() + static_cast<long>(nodes));
    P.held_out = primes[nodes];
    for (int q : P.primes) P.counts.push_back(value(q));
    auto c = interpolate(P.primes, P.counts);
    if (!c || c->size() > static_cast<size_t>(D + 1)) continue;
    P.coeffs = *c;
    const BigInt h = value(P.held_out);
    P.counts.push_back(h);
    if (P.eval(h * 0 + P.held_out) != h) continue;
    return P;
  }
}

}  // namespace

StructurePolynomial Oracle::structure_poly(const Cell& A, const Cell& B, const Cell& C) {
  if (A.co() != B.ro() || A.ro() != C.ro() || B.co() != C.co()) throw ShapeMismatch("structure_poly needs composable A, B, C");
  // N_C is at most the fiber count of A (degree e_A), and likewise for B
  const int D = std::min(normalization_exponent(A), normalization_exponent(B));
  return fit(primes_, D, [&](int q) {
    auto m = counts(A, B, q);
    auto it = m.find(C);
    return it == m.end() ? BigInt(0) : it->second;
  }, "structure polynomial");
}

int Oracle::normalization_exponent(const Cell& A) {
  auto it = norm_cache_.find(A);
  if (it != norm_cache_.end()) return it->second;
  int e;
  if (fam_ == Family::A) {
    e = static_cast<int>(d_stat(A));
  } else {
    StructurePolynomial P;
    try {
      P = fit(primes_, static_cast<int>(dj_stat(A)), [&](int q) { return fiber(A, q); }, "fiber");
    } catch (const InterpolationUnstable& ex) {
      throw NonPolynomialFiber(A.str() + ": " + ex.what());
    }
    if (P.coeffs.empty() || P.coeffs.back() != 1) throw NonPolynomialFiber(A.str() + ": fiber count is not monic");
    e = static_cast<int>(P.coeffs.size()) - 1;
  }
  return norm_cache_[A] = e;
}

std::string Oracle::cache_path(const Cell& A, const Cell& B) const {
  std::ostringstream key;
  key << (fam_ == Family::A ? "A" : "BC") << '|' << A.str() << '|' << B.str() << '|';
  for (int p : primes_) key << p << ',';
  const size_t h = std::hash<std::string>{}(key.str());
  std::ostringstream name;
  name << std::hex << h << ".json";
  return (std::filesystem::path(cache_dir_) / name.str()).string();
}

Element Oracle::multiply(const Cell& A, const Cell& B) {
  auto key = std::make_pair(A, B);
  auto it = prod_cache_.find(key);
  if (it != prod_cache_.end()) return it->second;
  const std::string path = cache_dir_.empty() ? std::string() : cache_path(A, B);
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    if (j.at("A") == A.str() && j.at("B") == B.str()) {
      Element r;
      for (auto& t : j.at("terms")) r.add(Cell::parse(t.at(0)), Laurent::parse(t.at(1)));
      return prod_cache_[key] = r;
    }
  }
  std::set<Cell> Cs;
  const size_t probe = std::min<size_t>(primes_.size(), 3);
  for (size_t k = 0; k < probe; ++k)
    for (auto& [C, n] : counts(A, B, primes_[k])) Cs.insert(C);
  Element r;
  nlohmann::json raw = nlohmann::json::object();
  const int eA = normalization_exponent(A), eB = normalization_exponent(B);
  for (auto& C : Cs) {
    auto P = structure_poly(A, B, C);
    if (P.is_zero()) continue;
    r.add(C, P.in_v().shift(normalization_exponent(C) - eA - eB));
    auto& jc = raw[C.str()];
    for (size_t k = 0; k < P.counts.size(); ++k)
      jc[std::to_string(k < P.primes.size() ? P.primes[k] : P.held_out)] = P.counts[k].str();
  }
  if (!path.empty()) {
    std::filesystem::create_directories(cache_dir_);
    nlohmann::json j;
    j["family"] = fam_ == Family::A ? "A" : "BC";
    j["A"] = A.str();
    j["B"] = B.str();
    j["primes"] = primes_;
    j["terms"] = nlohmann::json::array();
    for (auto& [C, k] : r) j["terms"].push_back({C.str(), k.str()});
    j["counts"] = raw;
    std::ofstream(path) << j.dump(1) << '\n';
  }
  return prod_cache_[key] = r;
}

bool Oracle::recheck(const Cell& A, const Cell& B, int q) {
  const Element r = multiply(A, B);
  const auto m = counts(A, B, q);
  const int eA = normalization_exponent(A), eB = normalization_exponent(B);
  std::set<Cell> Cs;
  for (auto& [C, k] : r) Cs.insert(C);
  for (auto& [C, n] : m) Cs.insert(C);
  for (auto& C : Cs) {
    // undo the normalization and evaluate at v^2 = q
    const Laurent c = r.coeff(C).shift(eA + eB - normalization_exponent(C));
    BigInt val = 0, qq = 1;
    for (auto& [e, k] : c.terms()) {
      if (e < 0 || e % 2) return false;
      qq = 1;
      for (int t = 0; t < e / 2; ++t) qq *= q;
      val += k * qq;
    }
    auto it = m.find(C);
    if (val != (it == m.end() ? BigInt(0) : it->second)) return false;
  }
  return true;
}

}  // namespace qschur::flag
