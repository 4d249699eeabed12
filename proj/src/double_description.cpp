#include "tfan/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace tfan {

namespace {

struct Ray {
  LatticeVector v;
  boost::dynamic_bitset<> zeros;  // processed inequalities tight at v
};

LatticeVector combine(const Integer& a, const LatticeVector& x, const Integer& b,
                      const LatticeVector& y) {
  LatticeVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
  return r.is_zero() ? r : primitive(r);
}

}  // namespace

ConeGenerators canonicalize(std::size_t dim, std::vector<LatticeVector> rays,
                            std::vector<LatticeVector> lineality) {
  ConeGenerators out;
  out.lineality = canonical_span_basis(lineality, dim);
  for (auto& r : rays) {
    auto p = project_out(r, out.lineality);
    if (!p.is_zero()) out.rays.push_back(std::move(p));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

ConeGenerators cone_generators(std::size_t dim, std::span<const LatticeVector> inequalities,
                               std::span<const LatticeVector> equations) {
  std::vector<LatticeVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    LatticeVector e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }

  // Equations only cut the lineality space.
  for (const auto& a : equations) {
    if (a.size() != dim) throw Error("constraint rank mismatch");
    auto it = std::find_if(lin.begin(), lin.end(), [&](const auto& l) { return dot(a, l) != 0; });
    if (it == lin.end()) continue;
    LatticeVector piv = *it;
    lin.erase(it);
    Integer ap = dot(a, piv);
    for (auto& l : lin) l = combine(ap, l, -dot(a, l), piv);
  }

  const std::size_t m = inequalities.size();
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = inequalities[k];
    if (a.size() != dim) throw Error("constraint rank mismatch");

    auto it = std::find_if(lin.begin(), lin.end(), [&](const auto& l) { return dot(a, l) != 0; });
    if (it != lin.end()) {
      LatticeVector piv = *it;
      lin.erase(it);
      Integer ap = dot(a, piv);
      if (ap < 0) {
        piv = -piv;
        ap = -ap;
      }
      for (auto& l : lin) l = combine(ap, l, -dot(a, l), piv);
      for (auto& r : rays) {
        r.v = combine(ap, r.v, -dot(a, r.v), piv);
        r.zeros.set(k);
      }
      boost::dynamic_bitset<> z(m);
      for (std::size_t j = 0; j < k; ++j) z.set(j);
      rays.push_back({std::move(piv), std::move(z)});
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
      else
        rays[i].zeros.set(k);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);

    for (auto p : pos) {
      for (auto n : neg) {
        auto common = rays[p].zeros & rays[n].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        auto v = combine(val[p], rays[n].v, -val[n], rays[p].v);
        common.set(k);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<LatticeVector> rv;
  rv.reserve(rays.size());
  for (auto& r : rays) rv.push_back(std::move(r.v));
  return canonicalize(dim, std::move(rv), std::move(lin));
}

}  // namespace tfan
