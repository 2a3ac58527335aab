#pragma once

#include "qschur/cell.hpp"
#include "qschur/element.hpp"
#include "qschur/laurent.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qschur {

struct TriangularityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FitUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentHom : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WeightMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A divided-power generator acting on the left. Kinds: 'E', 'F' (type A,
/// rows h <-> h+1), 'e', 'f' (coideal, 0 <= h < n/2).
struct Gen {
  char kind = 'E';
  int h = 0;
  int a = 1;
  friend bool operator<(const Gen& x, const Gen& y) { return std::tie(x.kind, x.h, x.a) < std::tie(y.kind, y.h, y.a); }
  friend bool operator==(const Gen& x, const Gen& y) { return x.kind == y.kind && x.h == y.h && x.a == y.a; }
  std::string str() const;
};

/// Generators in application order: w[0] acts first.
using Word = std::vector<Gen>;

std::string word_str(const Word& w);

/// Full order on cells with equal row and column sums: upper and lower corner
/// sums are both dominated.
bool preceq_full(const Cell& A, const Cell& B);
/// Strictly increasing along preceq_full.
long rank_full(const Cell& A);

/// Based algebra over the standard basis [A]. Subclasses supply the index
/// set, left multiplication by generators and a monomial word per cell;
/// everything else (bar, canonical basis, products) is generic.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::string name() const = 0;
  virtual int size() const = 0;
  virtual bool member(const Cell& A) const = 0;
  virtual bool symmetric() const { return false; }
  virtual Word word(const Cell& A) const = 0;

  /// g * [B]; zero when the weight of g does not match ro(B).
  Element gen_mul(const Gen& g, const Cell& B);
  Element apply(const Gen& g, const Element& x);
  Element apply(const Word& w, const Element& x);

  /// Monomial basis element; the leading term [A] is asserted.
  const Element& monomial(const Cell& A);
  /// Cells B with equal sums, B <= A, in the index set; sorted by decreasing rank.
  const std::vector<Cell>& down_set(const Cell& A);

  const Element& bar_std(const Cell& A);
  Element bar(const Element& x);
  /// {A} in the standard basis.
  const Element& canonical(const Cell& A);

  /// [A] * [B]
  const Element& product(const Cell& A, const Cell& B);
  Element multiply(const Element& x, const Element& y);

  /// standard coordinates -> canonical coordinates and back
  Element to_canonical(const Element& x);
  Element from_canonical(const Element& x);
  /// {A} * {B} in canonical coordinates
  Element cb_product(const Cell& A, const Cell& B);

  size_t cache_size() const { return gen_cache_.size() + prod_cache_.size(); }

 protected:
  virtual Element gen_mul_raw(const Gen& g, const Cell& B) = 0;
  /// Applied to full products (the iota quotient drops cells).
  virtual Element finalize(Element x) const { return x; }

 private:
  std::map<std::pair<Gen, Cell>, Element> gen_cache_;
  std::map<Cell, Element> mono_cache_, bar_cache_, can_cache_;
  std::map<Cell, std::vector<Cell>> down_cache_;
  std::map<std::pair<Cell, Cell>, Element> prod_cache_;
};

/// Algebra homomorphism defined on monomial words: phi([A]) = image(M_A) -
/// sum_{B < A} m_{B,A} phi([B]). image_word returns the image of the
/// monomial word of A (or nothing when it vanishes).
class WordHom {
 public:
  using ImageFn = std::function<Element(const Cell& A, const Word& w)>;
  WordHom(Algebra& src, ImageFn image) : src_(src), image_(std::move(image)) {}
  const Element& on_std(const Cell& A);
  Element operator()(const Element& x);

 private:
  Algebra& src_;
  ImageFn image_;
  std::map<Cell, Element> cache_;
};

/// Polynomial fit in u = v^{-p} through samples (p, value), by Newton
/// divided differences with exact division.
class UFit {
 public:
  /// throws FitUnstable when the samples are not a polynomial of degree
  /// <= samples - 2 (one sample is always a check)
  explicit UFit(const std::vector<std::pair<int, Laurent>>& samples);
  Laurent eval(int p) const;
  int degree() const { return degree_; }

 private:
  std::vector<int> nodes_;
  std::vector<Laurent> diffs_;
  int degree_ = -1;
};

/// Fit of a family of elements indexed by shifts of one parity: cell Z at
/// shift p is stored unshifted. The fits are of den * sample, den a product
/// of (1 - v^{-2k}); eval divides it back out.
struct StabilizedFamily {
  std::vector<int> shifts;
  std::map<Cell, UFit> fits;
  int max_degree = -1;
  Laurent den = 1;

  Element eval(int p) const;
};

/// Runs sample(p) at p = p0, p0+2, ... with growing sample counts until the
/// fit is stable (u-degree bound 4, 8, 16, 32; denominators up to k = max_den).
StabilizedFamily stabilize(const std::function<Element(int)>& sample, int p0, int max_degree = 32, int max_den = 8);

}  // namespace qschur
