#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

struct InvalidCell : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxN = 7;

/// Square integer matrix, at most kMaxN x kMaxN, indices 0-based.
class Cell {
 public:
  Cell() = default;
  explicit Cell(int n);
  explicit Cell(const std::vector<std::vector<int>>& rows);

  static Cell diag(const std::vector<int>& d);
  static Cell identity(int n);
  static Cell unit(int n, int i, int j);        // E_ij
  static Cell theta_unit(int n, int i, int j);  // E^theta_ij
  static Cell iota_identity(int n);             // I - E_mid

  int n() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<size_t>(i * kMaxN + j)]; }
  void set(int i, int j, int x) { a_[static_cast<size_t>(i * kMaxN + j)] = static_cast<int16_t>(x); }
  void add(int i, int j, int x) { set(i, j, (*this)(i, j) + x); }

  std::vector<int> ro() const;
  std::vector<int> co() const;
  long total() const;
  std::vector<int> diagonal() const;
  bool is_diagonal() const;
  bool nonneg() const;
  bool offdiag_nonneg() const;
  bool centro_symmetric() const;

  Cell operator+(const Cell& o) const;
  Cell operator-(const Cell& o) const;
  Cell scaled(int k) const;
  Cell transpose() const;
  std::vector<std::vector<int>> rows() const;

  std::string str() const;  // [[a,b],[c,d]]
  static Cell parse(const std::string& s);

  friend bool operator==(const Cell& a, const Cell& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.a_ < b.a_;
  }
  size_t hash() const;

 private:
  int n_ = 0;
  std::array<int16_t, kMaxN * kMaxN> a_{};
};

struct CellHash {
  size_t operator()(const Cell& c) const { return c.hash(); }
};

enum class Kind { ThetaD, ThetaTilde, XiD, XiTilde, XiIotaD, XiIotaTilde };

/// Index-set descriptor. n is always the matrix size; for the iota kinds the
/// rank is n - 1. d is ignored for the tilde kinds.
struct Context {
  Kind kind = Kind::ThetaD;
  int n = 2;
  int d = 0;

  bool finite() const { return kind == Kind::ThetaD || kind == Kind::XiD || kind == Kind::XiIotaD; }
  bool type_a() const { return kind == Kind::ThetaD || kind == Kind::ThetaTilde; }
  bool iota() const { return kind == Kind::XiIotaD || kind == Kind::XiIotaTilde; }
  std::string name() const;
  static Context parse(const std::string& s);
  friend bool operator==(const Context& a, const Context& b) {
    return a.kind == b.kind && a.n == b.n && (!a.finite() || a.d == b.d);
  }
};

/// Returns an empty string when A lies in the index set, else the first violated condition.
std::string violation(const Cell& A, const Context& ctx);
Cell classify(const std::vector<std::vector<int>>& rows, const Context& ctx);

/// sum_{r<=i, s>=j} a_rs (0-based, i<j)
long corner(const Cell& A, int i, int j);
long corner_total(const Cell& A);  // strictly increasing along the order
bool preceq(const Cell& A, const Cell& B);
bool sqsubseteq(const Cell& A, const Cell& B);

enum class Unit { I, IotaI };
Cell shift(const Cell& A, int p, Unit u = Unit::I);

enum class ClassFamily { ThetaBar, XiHat, XiIotaHat };
struct ClassRep {
  Cell rep;
  ClassFamily family;
  friend bool operator==(const ClassRep& a, const ClassRep& b) { return a.family == b.family && a.rep == b.rep; }
};
ClassRep class_of(const Cell& A, ClassFamily f);

Cell embed_iota(const Cell& A, int n, int k);  // diag(A, k I)
Cell embed_tau(const Cell& A, int n, int k);   // blockdiag(A, 2kI + eps, J A J)

long d_stat(const Cell& A);

}  // namespace qschur

template <>
struct std::hash<qschur::Cell> {
  size_t operator()(const qschur::Cell& c) const { return c.hash(); }
};
