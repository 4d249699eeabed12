#pragma once
// Random rank-2 p-divisors and independent oracles for the downgrade cone.

#include "tfan/pdivisor.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <random>

namespace tfan::testing {

/// Tail: a random regular cone of dimension 1 or 2. Coefficients at 0 and
/// inf are the tail plus one or two random half-integral points; further
/// points carry lattice translates; occasionally a coefficient is empty.
inline PDivisor random_divisor(std::mt19937& rng) {
  auto g = random_unimodular(2, rng);
  std::vector<LatticeVector> rays{transform(g, lv({1, 0}))};
  if (rng() % 2) rays.push_back(transform(g, lv({0, 1})));
  Cone tail = Cone::from_rays(2, rays);
  std::map<PointOnP1, Coefficient> coeffs;
  std::uniform_int_distribution<int> small(-2, 2);
  auto pt = [&](int k) {
    return k == 0 ? PointOnP1::zero() : k == 1 ? PointOnP1::infinity() : PointOnP1::coordinate(k);
  };
  int npts = 1 + rng() % 3;
  for (int k = 0; k < npts; ++k) {
    if (rng() % 6 == 0) {
      coeffs.emplace(pt(k), Coefficient::empty());
      continue;
    }
    std::vector<RationalVector> vs;
    int nv = k < 2 ? 1 + rng() % 2 : 1;
    for (int j = 0; j < nv; ++j) {
      RationalVector v(2);
      v[0] = Rational(small(rng), 1 + rng() % 2);
      v[1] = Rational(small(rng), 1 + rng() % 2);
      if (k >= 2) v = to_rational(floor(v));
      vs.push_back(v);
    }
    coeffs.emplace(pt(k), Polyhedron::from_generators(2, vs, tail.rays()));
  }
  return PDivisor(tail, coeffs);
}

/// Brute-force extremality: r is extremal iff it is not in the cone spanned
/// by the other (distinct) generators.
inline std::vector<LatticeVector> brute_extremal(std::size_t rank, std::vector<LatticeVector> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (!Cone::from_rays(rank, others).contains(gens[i])) out.push_back(gens[i]);
  }
  return out;
}

inline LatticeVector lift(const RationalVector& x, int h) {
  RationalVector y(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i];
  y[x.size()] = h;
  return primitive_direction(y);
}

/// The generator list of the downgrade cone, assembled directly from the
/// coefficients (w_inf = v - w0).
inline std::vector<LatticeVector> downgrade_generator_list(const PDivisor& d, const PointOnP1& y0,
                                                           const PointOnP1& y_inf,
                                                           const LatticeVector& w0) {
  std::vector<LatticeVector> gens;
  for (const auto& r : d.tail().rays()) gens.push_back(lift(to_rational(r), 0));
  auto v = translate_sum(d, y0, y_inf);
  auto d0 = d.at(y0), di = d.at(y_inf);
  if (!d0.is_empty())
    for (const auto& x : d0.polyhedron().vertices()) gens.push_back(lift(x + to_rational(w0), 1));
  if (!di.is_empty())
    for (const auto& x : di.polyhedron().vertices())
      gens.push_back(lift(x + to_rational(v - w0), -1));
  return gens;
}

/// (x, k) -> (x + k w, k).
inline LatticeVector shear(const LatticeVector& r, const LatticeVector& w) {
  auto m = r;
  const auto k = r[r.size() - 1];
  for (std::size_t i = 0; i < w.size(); ++i) m[i] += k * w[i];
  return m;
}

}  // namespace tfan::testing
