#include "qschur/cell.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace qschur {

Cell::Cell(int n) : n_(n) {
  if (n < 1 || n > kMaxN) throw SizeError("matrix size " + std::to_string(n) + " out of range");
}

Cell::Cell(const std::vector<std::vector<int>>& rows) : Cell(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n_) throw ShapeMismatch("matrix is not square");
    for (int j = 0; j < n_; ++j) set(i, j, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
}

Cell Cell::diag(const std::vector<int>& d) {
  Cell c(static_cast<int>(d.size()));
  for (int i = 0; i < c.n_; ++i) c.set(i, i, d[static_cast<size_t>(i)]);
  return c;
}

Cell Cell::identity(int n) { return diag(std::vector<int>(static_cast<size_t>(n), 1)); }

Cell Cell::unit(int n, int i, int j) {
  Cell c(n);
  c.set(i, j, 1);
  return c;
}

Cell Cell::theta_unit(int n, int i, int j) {
  Cell c(n);
  c.add(i, j, 1);
  c.add(n - 1 - i, n - 1 - j, 1);
  return c;
}

Cell Cell::iota_identity(int n) {
  Cell c = identity(n);
  c.set(n / 2, n / 2, 0);
  return c;
}

std::vector<int> Cell::ro() const {
  std::vector<int> r(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<size_t>(i)] += (*this)(i, j);
  return r;
}

std::vector<int> Cell::co() const {
  std::vector<int> r(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<size_t>(j)] += (*this)(i, j);
  return r;
}

long Cell::total() const {
  long s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

std::vector<int> Cell::diagonal() const {
  std::vector<int> r(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) r[static_cast<size_t>(i)] = (*this)(i, i);
  return r;
}

bool Cell::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

bool Cell::nonneg() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) < 0) return false;
  return true;
}

bool Cell::offdiag_nonneg() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) < 0) return false;
  return true;
}

bool Cell::centro_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (*this)(n_ - 1 - i, n_ - 1 - j)) return false;
  return true;
}

Cell Cell::operator+(const Cell& o) const {
  if (o.n_ != n_) throw ShapeMismatch("size mismatch");
  Cell r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, (*this)(i, j) + o(i, j));
  return r;
}

Cell Cell::operator-(const Cell& o) const { return *this + o.scaled(-1); }

Cell Cell::scaled(int k) const {
  Cell r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(i, j, k * (*this)(i, j));
  return r;
}

Cell Cell::transpose() const {
  Cell r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.set(j, i, (*this)(i, j));
  return r;
}

std::vector<std::vector<int>> Cell::rows() const {
  std::vector<std::vector<int>> r(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[static_cast<size_t>(i)][static_cast<size_t>(j)] = (*this)(i, j);
  return r;
}

std::string Cell::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Cell Cell::parse(const std::string& s) {
  // accepts [[a,b],[c,d]] with arbitrary whitespace
  std::vector<std::vector<int>> rows;
  int depth = 0;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      rows.back().push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '[') {
      ++depth;
      if (depth == 2) rows.emplace_back();
      if (depth > 2) throw InvalidCell("matrix nested too deeply: " + s);
    } else if (ch == ']') {
      if (depth == 2) flush();
      --depth;
    } else if (ch == ',') {
      if (depth == 2) flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      if (depth != 2) throw InvalidCell("bad matrix literal: " + s);
      num += ch;
    } else {
      throw InvalidCell("bad character in matrix literal: " + s);
    }
  }
  if (depth != 0 || rows.empty()) throw InvalidCell("unbalanced matrix literal: " + s);
  return Cell(rows);
}

size_t Cell::hash() const {
  size_t h = static_cast<size_t>(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) h = h * 1000003u ^ static_cast<size_t>(static_cast<uint16_t>((*this)(i, j)));
  return h;
}

std::string Context::name() const {
  switch (kind) {
    case Kind::ThetaD: return "schurA:" + std::to_string(n) + ":" + std::to_string(d);
    case Kind::ThetaTilde: return "limitA:" + std::to_string(n);
    case Kind::XiD: return "schurJ:" + std::to_string(n) + ":" + std::to_string(d);
    case Kind::XiTilde: return "limitJ:" + std::to_string(n);
    case Kind::XiIotaD: return "schurI:" + std::to_string(n - 1) + ":" + std::to_string(d);
    case Kind::XiIotaTilde: return "limitI:" + std::to_string(n - 1);
  }
  return "?";
}

Context Context::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string p;
  while (std::getline(ss, p, ':')) parts.push_back(p);
  if (parts.size() < 2) throw std::invalid_argument("bad context '" + s + "'");
  Context c;
  const std::string& k = parts[0];
  auto num = [&](size_t i) { return std::stoi(parts.at(i)); };
  if (k == "schurA") c = {Kind::ThetaD, num(1), num(2)};
  else if (k == "limitA") c = {Kind::ThetaTilde, num(1), 0};
  else if (k == "schurJ") c = {Kind::XiD, num(1), num(2)};
  else if (k == "limitJ") c = {Kind::XiTilde, num(1), 0};
  else if (k == "schurI") c = {Kind::XiIotaD, num(1) + 1, num(2)};
  else if (k == "limitI") c = {Kind::XiIotaTilde, num(1) + 1, 0};
  else throw std::invalid_argument("unknown context kind '" + k + "'");
  bool finite = c.finite();
  if (parts.size() != (finite ? 3u : 2u)) throw std::invalid_argument("bad context '" + s + "'");
  if (c.n < 1 || c.n > kMaxN) throw SizeError("context size out of range");
  if ((c.kind == Kind::XiD || c.kind == Kind::XiTilde) && c.n % 2 == 0)
    throw std::invalid_argument("jSchur contexts need odd n");
  if (c.iota() && c.n % 2 == 0) throw std::invalid_argument("iSchur contexts need even rank");
  return c;
}

std::string violation(const Cell& A, const Context& ctx) {
  if (A.n() != ctx.n) return "size " + std::to_string(A.n()) + " does not match context size " + std::to_string(ctx.n);
  const int n = A.n();
  switch (ctx.kind) {
    case Kind::ThetaD:
      if (!A.nonneg()) return "negative entry";
      if (A.total() != ctx.d) return "|A| != d";
      return "";
    case Kind::ThetaTilde:
      if (!A.offdiag_nonneg()) return "negative off-diagonal entry";
      return "";
    case Kind::XiD:
    case Kind::XiIotaD:
      if (n % 2 == 0) return "even size";
      if (!A.nonneg()) return "negative entry";
      if (A.total() != 2L * ctx.d + 1) return "|A| != 2d+1";
      if (!A.centro_symmetric()) return "not centro-symmetric";
      break;
    case Kind::XiTilde:
    case Kind::XiIotaTilde:
      if (n % 2 == 0) return "even size";
      if (!A.offdiag_nonneg()) return "negative off-diagonal entry";
      if (!A.centro_symmetric()) return "not centro-symmetric";
      if ((A(n / 2, n / 2) % 2 + 2) % 2 != 1) return "middle entry not odd";
      break;
  }
  if (ctx.iota()) {
    int m = n / 2;
    for (int j = 0; j < n; ++j)
      if (A(m, j) != (j == m ? 1 : 0) || A(j, m) != (j == m ? 1 : 0)) return "middle row/column is not the unit pattern";
  }
  return "";
}

Cell classify(const std::vector<std::vector<int>>& rows, const Context& ctx) {
  Cell A(rows);
  std::string why = violation(A, ctx);
  if (!why.empty()) throw InvalidCell(why);
  return A;
}

long corner(const Cell& A, int i, int j) {
  long s = 0;
  for (int r = 0; r <= i; ++r)
    for (int c = j; c < A.n(); ++c) s += A(r, c);
  return s;
}

long corner_total(const Cell& A) {
  long s = 0;
  for (int i = 0; i < A.n(); ++i)
    for (int j = i + 1; j < A.n(); ++j) s += corner(A, i, j);
  return s;
}

bool preceq(const Cell& A, const Cell& B) {
  if (A.n() != B.n()) throw ShapeMismatch("order comparison of different sizes");
  for (int i = 0; i < A.n(); ++i)
    for (int j = i + 1; j < A.n(); ++j)
      if (corner(A, i, j) > corner(B, i, j)) return false;
  return true;
}

bool sqsubseteq(const Cell& A, const Cell& B) {
  if (A.n() != B.n()) throw ShapeMismatch("order comparison of different sizes");
  if (A.ro() != B.ro() || A.co() != B.co()) return false;
  return preceq(A, B);
}

Cell shift(const Cell& A, int p, Unit u) {
  Cell r = A;
  for (int i = 0; i < A.n(); ++i)
    if (u == Unit::I || i != A.n() / 2) r.add(i, i, p);
  return r;
}

static long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

ClassRep class_of(const Cell& A, ClassFamily f) {
  const long n = A.n();
  const long tot = A.total();
  switch (f) {
    case ClassFamily::ThetaBar: {
      long p = -floordiv(tot, n);
      return {shift(A, static_cast<int>(p)), f};
    }
    case ClassFamily::XiHat: {
      if (tot % 2 == 0) throw ParityError("XiHat class needs odd total");
      long k = -floordiv((tot - 1) / 2, n);
      return {shift(A, static_cast<int>(2 * k)), f};
    }
    case ClassFamily::XiIotaHat: {
      if (tot % 2 == 0) throw ParityError("XiIotaHat class needs odd total");
      long rank = n - 1;
      long k = -floordiv((tot - 1) / 2, rank);
      return {shift(A, static_cast<int>(2 * k), Unit::IotaI), f};
    }
  }
  throw std::logic_error("bad class family");
}

Cell embed_iota(const Cell& A, int n, int k) {
  const int m = A.n();
  if (m >= n) throw SizeError("iota needs m < n");
  Cell r(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r.set(i, j, A(i, j));
  for (int i = m; i < n; ++i) r.set(i, i, k);
  return r;
}

Cell embed_tau(const Cell& A, int n, int k) {
  const int m = A.n();
  if (n % 2 == 0) throw SizeError("tau needs odd n");
  if (2 * m > n) throw SizeError("tau needs 2m <= n");
  Cell r(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      r.set(i, j, A(i, j));
      r.set(n - 1 - i, n - 1 - j, A(i, j));  // J A J
    }
  for (int i = m; i < n - m; ++i) r.set(i, i, 2 * k);
  r.add(n / 2, n / 2, 1);
  return r;
}

long d_stat(const Cell& A) {
  const int n = A.n();
  long s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A(i, j) == 0) continue;
      for (int k = 0; k <= i; ++k)
        for (int l = j + 1; l < n; ++l) s += static_cast<long>(A(i, j)) * A(k, l);
    }
  return s;
}

}  // namespace qschur
