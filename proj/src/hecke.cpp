#include "qschur/hecke.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace qschur {

namespace {

const Laurent& q_() {
  static const Laurent q = Laurent::mono(2);
  return q;
}

std::vector<int> sorted_full(const std::vector<int>& content) {
  std::vector<int> w;
  for (size_t i = 0; i < content.size(); ++i)
    for (int k = 0; k < content[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

}  // namespace

PermModule::PermModule(bool type_b, int n, int d, std::vector<int> content)
    : type_b_(type_b), n_(n), d_(d), content_(std::move(content)) {
  std::vector<int> full_sorted = sorted_full(content_);
  long need = type_b_ ? 2L * d_ + 1 : d_;
  if (static_cast<long>(full_sorted.size()) != need) throw std::invalid_argument("content does not match d");
  if (type_b_) {
    for (int i = 0; i < n_; ++i)
      if (content_[static_cast<size_t>(i)] != content_[static_cast<size_t>(n_ - 1 - i)])
        throw std::invalid_argument("type B content must be centro-symmetric");
  }
  Word start;
  for (int k = 0; k < d_; ++k) start.push_back(static_cast<char>(full_sorted[static_cast<size_t>(k)]));
  words_.push_back(start);
  index_[start] = 0;
  len_.push_back(0);
  parent_.push_back(-1);
  parent_gen_.push_back(-1);
  for (size_t head = 0; head < words_.size(); ++head) {
    for (int s = 0; s < gens(); ++s) {
      Word w = act(words_[head], s);
      if (index_.count(w)) continue;
      index_[w] = words_.size();
      words_.push_back(w);
      len_.push_back(len_[head] + 1);
      parent_.push_back(static_cast<long>(head));
      parent_gen_.push_back(s);
    }
  }
}

long PermModule::index(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

PermModule::Word PermModule::act(const Word& w, int s) const {
  Word r = w;
  if (s < d_ - 1) {
    std::swap(r[static_cast<size_t>(s)], r[static_cast<size_t>(s) + 1]);
  } else {
    char& c = r[static_cast<size_t>(d_ - 1)];
    c = static_cast<char>(n_ - 1 - c);
  }
  return r;
}

std::vector<Laurent> PermModule::right_T(const std::vector<Laurent>& x, int s) const {
  std::vector<Laurent> y(x.size());
  const Laurent q1 = q_() - Laurent(1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    size_t j = index_.at(act(words_[i], s));
    if (j == i) {
      y[i] += q_() * x[i];
    } else if (len_[j] > len_[i]) {
      y[j] += x[i];
    } else {
      y[j] += q_() * x[i];
      y[i] += q1 * x[i];
    }
  }
  return y;
}

std::vector<int> PermModule::path(size_t i) const {
  std::vector<int> p;
  for (long k = static_cast<long>(i); parent_[static_cast<size_t>(k)] >= 0; k = parent_[static_cast<size_t>(k)])
    p.push_back(parent_gen_[static_cast<size_t>(k)]);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<int> PermModule::full(const Word& w) const {
  std::vector<int> f(w.begin(), w.end());
  if (!type_b_) return f;
  f.push_back(n_ / 2);
  for (int k = d_ - 1; k >= 0; --k) f.push_back(n_ - 1 - w[static_cast<size_t>(k)]);
  return f;
}

Cell PermModule::relative(const Word& w, const std::vector<int>& mu) const {
  std::vector<int> f = full(w);
  std::vector<int> s = sorted_full(mu);
  if (s.size() != f.size()) throw std::invalid_argument("relative: content size mismatch");
  Cell A(n_);
  for (size_t k = 0; k < f.size(); ++k) A.add(f[k], s[k], 1);
  return A;
}

const PermModule& HeckeOracle::module(const std::vector<int>& content, int n, int d) {
  auto& slot = mods_[content];
  if (!slot) slot = std::make_unique<PermModule>(type_b_, n, d, content);
  return *slot;
}

int HeckeOracle::degree_of(const Cell& A) const {
  long t = A.total();
  if (!type_b_) return static_cast<int>(t);
  if (t % 2 == 0) throw std::invalid_argument("type B cell with even total");
  return static_cast<int>((t - 1) / 2);
}

std::map<Cell, Laurent> HeckeOracle::product(const Cell& A, const Cell& B) {
  if (A.co() != B.ro()) throw std::invalid_argument("product: co(A) != ro(B)");
  const int n = A.n();
  const int d = degree_of(A);
  const auto lam = A.ro(), mu = A.co(), nu = B.co();
  const PermModule& ML = module(lam, n, d);
  const PermModule& MM = module(mu, n, d);

  std::vector<Laurent> vA(ML.size());
  for (size_t i = 0; i < ML.size(); ++i)
    if (ML.relative(ML.word(i), mu) == A) vA[i] = 1;

  // tree of reduced paths restricted to ancestors of the B-orbit
  std::vector<char> target(MM.size(), 0), needed(MM.size(), 0);
  std::vector<std::vector<std::pair<size_t, int>>> kids(MM.size());
  for (size_t i = 0; i < MM.size(); ++i)
    if (MM.relative(MM.word(i), nu) == B) target[i] = 1;
  for (size_t i = 0; i < MM.size(); ++i) {
    if (!target[i]) continue;
    // walk up, marking
    std::vector<int> p = MM.path(i);
    size_t cur = 0;
    needed[0] = 1;
    for (int s : p) {
      size_t nxt = static_cast<size_t>(MM.index(MM.act(MM.word(cur), s)));
      if (!needed[nxt]) {
        needed[nxt] = 1;
        kids[cur].emplace_back(nxt, s);
      }
      cur = nxt;
    }
  }
  std::vector<Laurent> R(ML.size());
  std::function<void(size_t, const std::vector<Laurent>&)> dfs = [&](size_t node, const std::vector<Laurent>& x) {
    if (target[node])
      for (size_t i = 0; i < x.size(); ++i) R[i] += x[i];
    for (auto& [child, s] : kids[node]) dfs(child, ML.right_T(x, s));
  };
  dfs(0, vA);

  std::map<Cell, Laurent> out;
  std::map<Cell, bool> seen;
  for (size_t i = 0; i < ML.size(); ++i) {
    Cell C = ML.relative(ML.word(i), nu);
    auto it = seen.find(C);
    if (it == seen.end()) {
      seen[C] = true;
      if (!R[i].is_zero()) out[C] = R[i];
    } else {
      Laurent prev = out.count(C) ? out[C] : Laurent();
      if (prev != R[i]) throw std::logic_error("orbit sum not constant on class " + C.str());
    }
  }
  return out;
}

Laurent HeckeOracle::fiber_over_second(const Cell& A) {
  const int d = degree_of(A);
  const PermModule& ML = module(A.ro(), A.n(), d);
  Laurent s;
  const auto mu = A.co();
  for (size_t i = 0; i < ML.size(); ++i)
    if (ML.relative(ML.word(i), mu) == A) s += Laurent::mono(2 * ML.length(i));
  return s;
}

Laurent HeckeOracle::fiber_over_first(const Cell& A) { return fiber_over_second(A.transpose()); }

std::map<Cell, Laurent> HeckeOracle::restrict_to_block(const Cell& A, const std::vector<int>& nu) {
  if (!type_b_) throw std::logic_error("restrict_to_block is a type B operation");
  const int n = A.n();
  const int d = degree_of(A);
  const auto lam = A.ro(), mu = A.co();
  const PermModule& ML = module(lam, n, d);
  const PermModule& MM = module(mu, n, d);
  PermModule::Word wnu;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < nu[static_cast<size_t>(i)]; ++k) wnu.push_back(static_cast<char>(i));
  long idx = MM.index(wnu);
  if (idx < 0) return {};
  std::vector<Laurent> x(ML.size());
  for (size_t i = 0; i < ML.size(); ++i)
    if (ML.relative(ML.word(i), mu) == A) x[i] = 1;
  for (int s : MM.path(static_cast<size_t>(idx))) x = ML.right_T(x, s);

  // group by type A relative matrix against the sorted nu word
  std::map<Cell, Laurent> out;
  std::map<Cell, bool> seen;
  for (size_t i = 0; i < ML.size(); ++i) {
    const auto& w = ML.word(i);
    Cell C(n);
    for (int k = 0; k < d; ++k) C.add(w[static_cast<size_t>(k)], wnu[static_cast<size_t>(k)], 1);
    if (!seen.count(C)) {
      seen[C] = true;
      if (!x[i].is_zero()) out[C] = x[i];
    } else {
      Laurent prev = out.count(C) ? out[C] : Laurent();
      if (prev != x[i]) throw std::logic_error("block restriction not constant on class " + C.str());
    }
  }
  return out;
}

}  // namespace qschur
