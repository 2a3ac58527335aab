#include "qschur/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qschur {

Laurent::Laurent(long c) {
  if (c != 0) t_.emplace_back(0, BigInt(c));
}

Laurent::Laurent(const BigInt& c) {
  if (c != 0) t_.emplace_back(0, c);
}

Laurent Laurent::mono(int e, const BigInt& c) {
  Laurent r;
  if (c != 0) r.t_.emplace_back(e, c);
  return r;
}

bool Laurent::is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }

int Laurent::min_exp() const {
  if (t_.empty()) throw std::logic_error("min_exp of zero");
  return t_.front().first;
}

int Laurent::max_exp() const {
  if (t_.empty()) throw std::logic_error("max_exp of zero");
  return t_.back().first;
}

BigInt Laurent::coeff(int e) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), e,
                             [](const Term& x, int k) { return x.first < k; });
  if (it != t_.end() && it->first == e) return it->second;
  return 0;
}

void Laurent::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& x : t_) {
    if (!out.empty() && out.back().first == x.first)
      out.back().second += x.second;
    else
      out.push_back(std::move(x));
    if (out.back().second == 0) out.pop_back();
  }
  t_ = std::move(out);
}

Laurent Laurent::bar() const {
  Laurent r;
  r.t_.reserve(t_.size());
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.emplace_back(-it->first, it->second);
  return r;
}

Laurent Laurent::shift(int k) const {
  Laurent r = *this;
  for (auto& x : r.t_) x.first += k;
  return r;
}

Laurent Laurent::subs_power(int k) const {
  if (k == 0) throw std::invalid_argument("subs_power(0)");
  Laurent r = *this;
  for (auto& x : r.t_) x.first *= k;
  if (k < 0) std::reverse(r.t_.begin(), r.t_.end());
  return r;
}

Laurent Laurent::negative_part() const {
  Laurent r;
  for (auto& x : t_)
    if (x.first < 0) r.t_.push_back(x);
  return r;
}

bool Laurent::nonneg() const {
  return std::all_of(t_.begin(), t_.end(), [](const Term& x) { return x.second > 0; });
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.t_) x.second = -x.second;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) {
    t_ = o.t_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      out.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      out.push_back(o.t_[j++]);
    } else {
      BigInt s = t_[i].second + o.t_[j].second;
      if (s != 0) out.emplace_back(t_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    r.t_.emplace_back(a.t_[0].first + b.t_[0].first, a.t_[0].second * b.t_[0].second);
    return r;
  }
  int lo = a.min_exp() + b.min_exp();
  int hi = a.max_exp() + b.max_exp();
  std::vector<BigInt> buf(static_cast<size_t>(hi - lo + 1));
  for (auto& x : a.t_)
    for (auto& y : b.t_) buf[static_cast<size_t>(x.first + y.first - lo)] += x.second * y.second;
  for (size_t k = 0; k < buf.size(); ++k)
    if (buf[k] != 0) r.t_.emplace_back(static_cast<int>(k) + lo, std::move(buf[k]));
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

void Laurent::add_scaled(const Laurent& b, const Laurent& c) { *this += b * c; }

Laurent Laurent::div_exact(const Laurent& d) const {
  if (d.is_zero()) throw NonExactDivision("division by zero");
  if (is_zero()) return {};
  int shift_q = min_exp() - d.min_exp();
  // dense, low degree first
  int na = max_exp() - min_exp();
  int nd = d.max_exp() - d.min_exp();
  if (na < nd) throw NonExactDivision("degree too small: " + str() + " / " + d.str());
  std::vector<BigInt> a(static_cast<size_t>(na + 1)), dv(static_cast<size_t>(nd + 1));
  for (auto& x : t_) a[static_cast<size_t>(x.first - min_exp())] = x.second;
  for (auto& x : d.t_) dv[static_cast<size_t>(x.first - d.min_exp())] = x.second;
  std::vector<BigInt> quo(static_cast<size_t>(na - nd + 1));
  const BigInt& lead = dv[static_cast<size_t>(nd)];
  for (int k = na - nd; k >= 0; --k) {
    BigInt& top = a[static_cast<size_t>(k + nd)];
    if (top == 0) continue;
    BigInt qk, rem;
    boost::multiprecision::divide_qr(top, lead, qk, rem);
    if (rem != 0) throw NonExactDivision(str() + " / " + d.str());
    for (int j = 0; j <= nd; ++j) a[static_cast<size_t>(k + j)] -= qk * dv[static_cast<size_t>(j)];
    quo[static_cast<size_t>(k)] = std::move(qk);
  }
  for (auto& x : a)
    if (x != 0) throw NonExactDivision(str() + " / " + d.str());
  Laurent r;
  for (size_t k = 0; k < quo.size(); ++k)
    if (quo[k] != 0) r.t_.emplace_back(static_cast<int>(k) + shift_q, std::move(quo[k]));
  return r;
}

BigInt Laurent::eval(const BigInt& x) const {
  // only meaningful for nonnegative exponents, or exact results
  BigInt num = 0;
  if (t_.empty()) return num;
  int lo = std::min(0, min_exp());
  for (auto& tm : t_) num += tm.second * boost::multiprecision::pow(x, static_cast<unsigned>(tm.first - lo));
  if (lo < 0) {
    BigInt den = boost::multiprecision::pow(x, static_cast<unsigned>(-lo));
    BigInt qv, rem;
    boost::multiprecision::divide_qr(num, den, qv, rem);
    if (rem != 0) throw NonExactDivision("eval of Laurent polynomial is not integral");
    return qv;
  }
  return num;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    BigInt c = it->second;
    int e = it->first;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Laurent Laurent::parse(const std::string& s) {
  std::string z;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) z += ch;
  if (z.empty()) throw std::invalid_argument("empty Laurent polynomial");
  Laurent r;
  size_t i = 0;
  auto read_int = [&](size_t& k) {
    size_t st = k;
    if (k < z.size() && (z[k] == '-' || z[k] == '+')) ++k;
    while (k < z.size() && std::isdigit(static_cast<unsigned char>(z[k]))) ++k;
    if (k == st || (k == st + 1 && !std::isdigit(static_cast<unsigned char>(z[st]))))
      throw std::invalid_argument("bad integer in '" + s + "'");
    return std::stol(z.substr(st, k - st));
  };
  while (i < z.size()) {
    int sign = 1;
    if (z[i] == '+' || z[i] == '-') {
      sign = z[i] == '-' ? -1 : 1;
      ++i;
    }
    BigInt c = 1;
    bool have_c = false;
    size_t st = i;
    while (i < z.size() && std::isdigit(static_cast<unsigned char>(z[i]))) ++i;
    if (i > st) {
      c = BigInt(z.substr(st, i - st));
      have_c = true;
    }
    if (i < z.size() && z[i] == '*') ++i;
    int e = 0;
    if (i < z.size() && z[i] == 'v') {
      ++i;
      e = 1;
      if (i < z.size() && z[i] == '^') {
        ++i;
        bool brace = i < z.size() && (z[i] == '{' || z[i] == '(');
        if (brace) ++i;
        e = static_cast<int>(read_int(i));
        if (brace) {
          if (i >= z.size() || (z[i] != '}' && z[i] != ')')) throw std::invalid_argument("bad exponent in '" + s + "'");
          ++i;
        }
      }
    } else if (!have_c) {
      throw std::invalid_argument("cannot parse Laurent polynomial '" + s + "'");
    }
    r += mono(e, sign * c);
    if (i < z.size() && z[i] != '+' && z[i] != '-') throw std::invalid_argument("trailing input in '" + s + "'");
  }
  return r;
}

namespace q {

Laurent qint(long m) { return binom(m, 1); }
Laurent qint_bar(long m) { return qint(m).bar(); }

Laurent binom(long m, long b) {
  if (b < 0) throw std::invalid_argument("binom with negative b");
  Laurent r = 1;
  for (long i = 1; i <= b; ++i) {
    Laurent num = Laurent::mono(static_cast<int>(2 * (m - i + 1))) - Laurent(1);
    Laurent den = Laurent::mono(static_cast<int>(2 * i)) - Laurent(1);
    r = (r * num).div_exact(den);
  }
  return r;
}

Laurent binom_bar(long m, long b) { return binom(m, b).bar(); }

Laurent v2binom(long m, long b) { return binom(m, b).subs_power(2); }

long beta(long a, long i) { return a * i - i * (i + 1) / 2; }

bool lemma_sum1(long a, long p) {
  Laurent total;
  for (long s = 0; s <= p; ++s) {
    Laurent term = Laurent::mono(static_cast<int>(2 * s * (a + 2 * s))) * v2binom(p, s);
    for (long k = 1; k <= p - s; ++k) term *= Laurent(1) - Laurent::mono(static_cast<int>(2 * a + 4 * s + 4 * k));
    total += term;
  }
  return total.is_one();
}

bool lemma_sum1b(long m) {
  // sum over the common denominator prod_{k<=m/2} (1 - v^{4k})
  auto den = [](long top) {
    Laurent d = 1;
    for (long k = 1; k <= top; ++k) d *= Laurent(1) - Laurent::mono(static_cast<int>(4 * k));
    return d;
  };
  Laurent common = den(m / 2);
  Laurent total;
  for (long j = 0; j <= m; ++j) {
    Laurent num = Laurent::mono(static_cast<int>((m - j) * (m - j + 1)));
    for (long u = 1; u <= j; ++u) num *= Laurent(1) - Laurent::mono(static_cast<int>(2 * (m - u + 1)));
    total += num * common.div_exact(den(j / 2));
  }
  return total == common;
}

}  // namespace q

}  // namespace qschur
