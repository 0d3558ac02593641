#ifndef GRPD_ALGEBRA_HPP
#define GRPD_ALGEBRA_HPP

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/rational.hpp"

namespace grpd {

class GroupoidMismatchError : public Error {
 public:
  using Error::Error;
};

class NotAPairGroupoidError : public Error {
 public:
  using Error::Error;
};

// Commutative coefficient ring.
template <class S>
concept Scalar = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  S{0};
  S{1};
};

// Complex scalar as an exact rational pair.
struct GaussianRat {
  Rat re;
  Rat im;

  GaussianRat() = default;
  GaussianRat(int v) : re(v) {}  // NOLINT: ring literals 0 and 1
  GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  friend GaussianRat operator+(const GaussianRat& a, const GaussianRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRat operator-(const GaussianRat& a, const GaussianRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Finitely supported scalar function on the elements of a fixed groupoid.
// Zero coefficients are never stored; iteration order is element order.
template <Scalar S = Rat>
class AlgebraElement {
 public:
  explicit AlgebraElement(const FiniteGroupoid& owner) : owner_(&owner) {}

  const FiniteGroupoid& owner() const { return *owner_; }
  const std::map<Elem, S>& coefficients() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }
  std::size_t support_size() const { return coef_.size(); }

  S at(Elem g) const {
    auto it = coef_.find(g);
    return it == coef_.end() ? S{0} : it->second;
  }

  void set(Elem g, S value) {
    if (value == S{0}) {
      coef_.erase(g);
    } else {
      coef_[g] = std::move(value);
    }
  }

  void add(Elem g, const S& value) { set(g, at(g) + value); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.owner_ == b.owner_ && a.coef_ == b.coef_;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.owner_ != b.owner_) {
      throw GroupoidMismatchError("GroupoidMismatch operands live on different groupoids");
    }
    AlgebraElement out = a;
    for (const auto& [g, c] : b.coef_) out.add(g, c);
    return out;
  }

  friend AlgebraElement operator*(const S& s, const AlgebraElement& a) {
    AlgebraElement out(*a.owner_);
    for (const auto& [g, c] : a.coef_) out.set(g, s * c);
    return out;
  }

 private:
  const FiniteGroupoid* owner_;
  std::map<Elem, S> coef_;
};

namespace detail {

template <Scalar S>
void require_same_owner(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  if (&a.owner() != &b.owner()) {
    throw GroupoidMismatchError("GroupoidMismatch operands live on different groupoids");
  }
}

}  // namespace detail

// Alpha-fibre convolution: (a*b)(g) = sum over k with alpha(k) = alpha(g)
// of a(k) b(k^-1 g). Every k in the fibre composes with g after inversion.
template <Scalar S>
AlgebraElement<S> convolve(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  detail::require_same_owner(a, b);
  const FiniteGroupoid& gd = a.owner();
  AlgebraElement<S> out(gd);
  if (a.is_zero() || b.is_zero()) return out;
  for (Elem g = 0; g < gd.element_count(); ++g) {
    S sum{0};
    for (const Elem k : gd.alpha_fibre(gd.alpha(g))) {
      const S ca = a.at(k);
      if (ca == S{0}) continue;
      sum = sum + ca * b.at(gd.compose(gd.inverse(k), g));
    }
    out.set(g, std::move(sum));
  }
  return out;
}

// Symmetric formula: (a*b)(g) = sum over factorizations k*l = g of a(k) b(l).
// Agrees with convolve identically; kept as an independent route.
template <Scalar S>
AlgebraElement<S> convolve_symmetric(const AlgebraElement<S>& a,
                                     const AlgebraElement<S>& b) {
  detail::require_same_owner(a, b);
  const FiniteGroupoid& gd = a.owner();
  AlgebraElement<S> out(gd);
  for (const auto& [k, ck] : a.coefficients()) {
    for (const auto& [l, cl] : b.coefficients()) {
      if (gd.composable(k, l)) out.add(gd.compose(k, l), ck * cl);
    }
  }
  return out;
}

// Indicator of the identity elements; the two-sided unit.
template <Scalar S = Rat>
AlgebraElement<S> convolution_identity(const FiniteGroupoid& g) {
  AlgebraElement<S> out(g);
  for (Obj x = 0; x < g.object_count(); ++x) out.set(g.identity_at(x), S{1});
  return out;
}

// ---------------------------------------------------------------------------
// Pair-groupoid / matrix bridge
// ---------------------------------------------------------------------------

struct DenseMatrix {
  std::size_t n = 0;
  std::vector<Rat> entries;  // row-major

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : n(dim), entries(dim * dim) {}

  Rat& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.n == b.n && a.entries == b.entries;
  }
};

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b);

// Detects pair structure: exactly one arrow for every ordered pair of
// objects. Returns the element at objects (i, j) per position, or throws
// NotAPairGroupoidError.
std::vector<Elem> pair_structure(const FiniteGroupoid& g);

DenseMatrix to_matrix(const AlgebraElement<Rat>& a);
AlgebraElement<Rat> from_matrix(const FiniteGroupoid& pair_like, const DenseMatrix& m);

// ---------------------------------------------------------------------------
// Serialization: "coef <element-id> <num>/<den>" lines; matrices as the
// dimension line followed by rows of space-separated rationals.
// ---------------------------------------------------------------------------

std::vector<std::string> algebra_element_lines(const AlgebraElement<Rat>& a);
AlgebraElement<Rat> parse_algebra_element(const FiniteGroupoid& g, std::istream& in,
                                          const std::string& source = "<input>");
AlgebraElement<Rat> read_algebra_element_file(const FiniteGroupoid& g,
                                              const std::string& path);
std::vector<std::string> matrix_lines(const DenseMatrix& m);

}  // namespace grpd

#endif  // GRPD_ALGEBRA_HPP
