#include "qschur/blm.hpp"

#include <functional>

namespace qschur {

namespace {

// enumerate t in N^n with sum a and t_u <= cap_u (cap < 0 means unbounded)
void compositions(const std::vector<int>& cap, int a, const std::function<void(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(cap.size());
  std::vector<int> t(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int u, int left) {
    if (u == n - 1) {
      if (cap[static_cast<size_t>(u)] >= 0 && left > cap[static_cast<size_t>(u)]) return;
      t[static_cast<size_t>(u)] = left;
      f(t);
      return;
    }
    int top = cap[static_cast<size_t>(u)] < 0 ? left : std::min(left, cap[static_cast<size_t>(u)]);
    for (int x = 0; x <= top; ++x) {
      t[static_cast<size_t>(u)] = x;
      rec(u + 1, left - x);
    }
    t[static_cast<size_t>(u)] = 0;
  };
  rec(0, a);
}

}  // namespace

Element blm_E(int h, int a, const Cell& A, bool limit) {
  const int n = A.n();
  Element out;
  if (a == 0) return Element(A);
  std::vector<int> cap(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) cap[static_cast<size_t>(u)] = (limit && u == h + 1) ? -1 : A(h + 1, u);
  for (int u = 0; u < n; ++u)
    if (cap[static_cast<size_t>(u)] < -1 || (cap[static_cast<size_t>(u)] < 0 && !(limit && u == h + 1))) return out;
  compositions(cap, a, [&](const std::vector<int>& t) {
    Cell R = A;
    long beta = 0;
    Laurent c = 1;
    long before = 0;
    for (int u = 0; u < n; ++u) {
      int tu = t[static_cast<size_t>(u)];
      if (tu) {
        long s1 = 0, s2 = 0;
        for (int j = u; j < n; ++j) s1 += A(h, j);
        for (int j = u + 1; j < n; ++j) s2 += A(h + 1, j);
        beta += tu * (s1 - s2 + before);
        c *= q::binom_bar(A(h, u) + tu, tu);
        R.add(h, u, tu);
        R.add(h + 1, u, -tu);
      }
      before += tu;
    }
    if (!limit && !R.nonneg()) return;
    out.add(R, c.shift(static_cast<int>(beta)));
  });
  return out;
}

Element blm_F(int h, int a, const Cell& A, bool limit) {
  const int n = A.n();
  Element out;
  if (a == 0) return Element(A);
  std::vector<int> cap(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) cap[static_cast<size_t>(u)] = (limit && u == h) ? -1 : A(h, u);
  for (int u = 0; u < n; ++u)
    if (!(limit && u == h) && cap[static_cast<size_t>(u)] < 0) return out;
  compositions(cap, a, [&](const std::vector<int>& t) {
    Cell R = A;
    long beta = 0;
    Laurent c = 1;
    long before = 0;
    for (int u = 0; u < n; ++u) {
      int tu = t[static_cast<size_t>(u)];
      if (tu) {
        long s1 = 0, s2 = 0;
        for (int j = 0; j <= u; ++j) s1 += A(h + 1, j);
        for (int j = 0; j < u; ++j) s2 += A(h, j);
        beta += tu * (s1 - s2 + before);
        c *= q::binom_bar(A(h + 1, u) + tu, tu);
        R.add(h, u, -tu);
        R.add(h + 1, u, tu);
      }
      before += tu;
    }
    if (!limit && !R.nonneg()) return;
    out.add(R, c.shift(static_cast<int>(beta)));
  });
  return out;
}

Element blm_E(int h, int a, const Element& x, bool limit) {
  Element out;
  for (auto& [c, k] : x) out.add_scaled(blm_E(h, a, c, limit), k);
  return out;
}

Element blm_F(int h, int a, const Element& x, bool limit) {
  Element out;
  for (auto& [c, k] : x) out.add_scaled(blm_F(h, a, c, limit), k);
  return out;
}

Cell e_cell(int h, int a, const std::vector<int>& mu) {
  Cell B = Cell::diag(mu);
  B.add(h + 1, h + 1, -a);
  B.add(h, h + 1, a);
  return B;
}

Cell f_cell(int h, int a, const std::vector<int>& mu) {
  Cell B = Cell::diag(mu);
  B.add(h, h, -a);
  B.add(h + 1, h, a);
  return B;
}

}  // namespace qschur
