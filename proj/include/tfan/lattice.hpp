#pragma once
// Exact integer and rational linear algebra over a lattice N = Z^n.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfan {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when an operation's input violates its documented contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Integer& x);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);
/// Parses "p" or "p/q" (optional sign, decimal digits only).
Rational parse_rational(std::string_view text);

Integer floor(const Rational& x);

/// Fixed-length coordinate vector. LatticeVector and RationalVector are the
/// two instantiations used throughout.
template <class T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : coords_(n) {}
  Vec(std::initializer_list<T> xs) : coords_(xs) {}
  explicit Vec(std::vector<T> xs) : coords_(std::move(xs)) {}

  std::size_t size() const { return coords_.size(); }
  T& operator[](std::size_t i) { return coords_[i]; }
  const T& operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<T>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  Vec& operator+=(const Vec& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    check_size(o);
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Vec& operator*=(const T& k) {
    for (auto& c : coords_) c *= k;
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const T& k, Vec a) { return a *= k; }
  friend Vec operator-(Vec a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const Vec&, const Vec&) = default;
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
      if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    return os << ')';
  }

 private:
  void check_size(const Vec& o) const {
    if (o.size() != size()) throw Error("vector rank mismatch");
  }
  std::vector<T> coords_;
};

using LatticeVector = Vec<Integer>;
using RationalVector = Vec<Rational>;

template <class A, class B>
auto dot(const Vec<A>& a, const Vec<B>& b) {
  if (a.size() != b.size()) throw Error("vector rank mismatch");
  using R = std::conditional_t<std::is_same_v<A, Rational> || std::is_same_v<B, Rational>,
                               Rational, Integer>;
  R s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(const LatticeVector& v);
bool is_integral(const RationalVector& v);
/// Requires is_integral(v).
LatticeVector to_lattice(const RationalVector& v);
LatticeVector floor(const RationalVector& v);

/// Positive gcd of the entries; 0 for the zero vector.
Integer content(const LatticeVector& v);

/// v divided by the gcd of its entries. Throws on the zero vector.
LatticeVector primitive(const LatticeVector& v);
/// Smallest positive integer multiple of v that is integral, made primitive.
/// Zero maps to zero.
LatticeVector primitive_direction(const RationalVector& v);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  /// One row per vector; all vectors must share a length (cols may be given
  /// explicitly for an empty list).
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  LatticeVector row(std::size_t r) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

struct SmithNormalForm {
  IntMatrix S, U, V;  // U * M * V == S
  /// Nonzero diagonal entries of S, each dividing the next.
  std::vector<Integer> invariant_factors() const;
};

/// Pivot rule: smallest absolute nonzero entry of the remaining block, first
/// in row-major order on ties.
SmithNormalForm smith_normal_form(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim);

/// True iff the (primitive, nonzero) vectors are part of a lattice basis.
bool extends_to_basis(std::span<const LatticeVector> vectors);

/// Canonical integer basis of span(vectors): reduced row echelon form with each
/// row scaled to a primitive vector with positive pivot.
std::vector<LatticeVector> canonical_span_basis(std::span<const LatticeVector> vectors,
                                                std::size_t dim);

/// Integer basis of the orthogonal complement of span(vectors), canonicalized.
std::vector<LatticeVector> orthogonal_complement(std::span<const LatticeVector> vectors,
                                                 std::size_t dim);

/// Component of v orthogonal to span(basis), scaled to a primitive integer
/// vector (zero if v lies in the span).
LatticeVector project_out(const LatticeVector& v, std::span<const LatticeVector> basis);

}  // namespace tfan
