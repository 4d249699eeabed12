#include "tfan/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tfan {

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw Error("malformed rational '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer p(std::string{num});
  if (slash == std::string_view::npos) return Rational(p);
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error("malformed rational '" + std::string(text) + "'");
  Integer q(std::string{den});
  if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

Integer floor(const Rational& x) {
  Integer q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return q;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return denominator(x) == 1; });
}

LatticeVector to_lattice(const RationalVector& v) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (denominator(v[i]) != 1) throw Error("vector is not integral");
    r[i] = numerator(v[i]);
  }
  return r;
}

LatticeVector floor(const RationalVector& v) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = floor(v[i]);
  return r;
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  return abs(g);
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error("zero has no primitive representative");
  if (g == 1) return v;
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

LatticeVector primitive_direction(const RationalVector& v) {
  Integer l = 1;
  for (const auto& c : v) l = lcm(l, Integer(denominator(c)));
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = numerator(v[i]) * (l / denominator(v[i]));
  if (r.is_zero()) return r;
  return primitive(r);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("vector rank mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t r) const {
  LatticeVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << m.row(r);
  return os << ']';
}

std::vector<Integer> SmithNormalForm::invariant_factors() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) d.push_back(S(i, i));
  return d;
}

namespace {

struct SnfState {
  IntMatrix S, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S(a, c), S(b, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(a, c), U(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, a), S(r, b));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, a), V(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(dst, c) += k * S(src, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(dst, c) += k * U(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < S.rows(); ++r) S(r, dst) += k * S(r, src);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, dst) += k * V(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(r, c) = -S(r, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) = -U(r, c);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfState st{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  auto& S = st.S;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest |entry| in the block [t.., t..], row-major first.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (S(r, c) != 0 && (pr == rows || abs(S(r, c)) < abs(S(pr, pc)))) pr = r, pc = c;
      if (pr == rows) break;
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (S(r, t) == 0) continue;
        Integer q = S(r, t) / S(t, t);
        if (q != 0) st.add_row(r, t, -q);
        if (S(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (S(t, c) == 0) continue;
        Integer q = S(t, c) / S(t, t);
        if (q != 0) st.add_col(c, t, -q);
        if (S(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and re-reduce.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (S(r, c) % S(t, t) != 0) {
            st.add_row(t, r, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t < rows && t < cols && S(t, t) < 0) st.negate_row(t);
  }
  return {std::move(st.S), std::move(st.U), std::move(st.V)};
}

namespace {

// Fraction-free (Bareiss) elimination; returns the rank and, for square input,
// the determinant.
std::pair<std::size_t, Integer> bareiss(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(r, k));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k)
        a(i, k) = (a(r, c) * a(i, k) - a(i, c) * a(r, k)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  Integer det = 0;
  if (rows == cols && r == rows) det = sign * a(rows - 1, cols - 1);
  if (rows == 0 && cols == 0) det = 1;
  return {r, det};
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  return bareiss(m).second;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).first; }

std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim) {
  return rank(IntMatrix::from_rows(vectors, dim));
}

bool extends_to_basis(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return true;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error("vector rank mismatch");
    if (content(v) != 1) throw Error("extends_to_basis requires primitive nonzero vectors");
  }
  if (vectors.size() > n) return false;
  auto snf = smith_normal_form(IntMatrix::from_rows(vectors, n));
  auto d = snf.invariant_factors();
  if (d.size() != vectors.size()) return false;
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

std::vector<LatticeVector> canonical_span_basis(std::span<const LatticeVector> vectors,
                                                std::size_t dim) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error("vector rank mismatch");
    std::vector<Rational> r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = v[i];
    rows.push_back(std::move(r));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational pivot = rows[r][c];
    for (auto& x : rows[r]) x /= pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(primitive_direction(RationalVector(rows[i])));
  return basis;
}

std::vector<LatticeVector> orthogonal_complement(std::span<const LatticeVector> vectors,
                                                 std::size_t dim) {
  auto basis = canonical_span_basis(vectors, dim);
  // Pivot columns of the RREF; free columns parametrize the kernel.
  std::vector<std::size_t> pivots;
  for (const auto& b : basis) {
    std::size_t c = 0;
    while (b[c] == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<LatticeVector> kernel;
  for (std::size_t f = 0; f < dim; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    RationalVector k(dim);
    k[f] = 1;
    for (std::size_t i = 0; i < basis.size(); ++i)
      k[pivots[i]] = -Rational(basis[i][f], basis[i][pivots[i]]);
    kernel.push_back(primitive_direction(k));
  }
  return canonical_span_basis(kernel, dim);
}

LatticeVector project_out(const LatticeVector& v, std::span<const LatticeVector> basis) {
  if (basis.empty()) return v.is_zero() ? v : primitive(v);
  const std::size_t k = basis.size();
  // Solve Gram * c = B v, then v - B^T c.
  std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = Rational(dot(basis[i], basis[j]));
    g[i][k] = Rational(dot(basis[i], v));
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (g[p][c] == 0) ++p;
    std::swap(g[p], g[c]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || g[i][c] == 0) continue;
      Rational f = g[i][c] / g[c][c];
      for (std::size_t j = c; j <= k; ++j) g[i][j] -= f * g[c][j];
    }
  }
  RationalVector r = to_rational(v);
  for (std::size_t i = 0; i < k; ++i) {
    Rational coef = g[i][k] / g[i][i];
    for (std::size_t j = 0; j < v.size(); ++j) r[j] -= coef * basis[i][j];
  }
  return primitive_direction(r);
}

}  // namespace tfan
