#include "tfan/toric.hpp"

#include <map>
#include <sstream>

namespace tfan {

Cone ToricFan::cone(std::size_t i) const {
  std::vector<LatticeVector> gens;
  for (auto k : cones.at(i)) {
    if (k >= rays.size()) throw Error("cone " + std::to_string(i) + " uses unknown ray index");
    gens.push_back(rays[k]);
  }
  return Cone::from_rays(rank, gens);
}

Report check_complete(const ToricFan& f) {
  Report r;
  if (f.rank == 0) {
    r.add("complete", "fan", "rank must be positive");
    return r;
  }
  if (f.cones.empty()) {
    r.add("complete", "fan", "fan has no cones");
    return r;
  }
  for (const auto& v : f.rays)
    if (v.size() != f.rank) {
      r.add("complete", "fan", "ray with wrong rank");
      return r;
    }
  std::vector<Cone> cs;
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    cs.push_back(f.cone(i));
    const auto loc = "cone " + std::to_string(i);
    if (!cs.back().is_pointed()) r.add("complete", loc, "cone is not pointed");
    else if (!cs.back().is_full_dimensional()) r.add("complete", loc, "cone is not full-dimensional");
  }
  if (!r.ok()) return r;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto meet = cs[i].intersect(cs[j]);
      if (!meet.is_face_of(cs[i]) || !meet.is_face_of(cs[j]))
        r.add("complete", "cones " + std::to_string(i) + "," + std::to_string(j),
              "cones meet in a non-face");
    }
  std::map<Cone, int> facets;
  for (const auto& c : cs)
    for (const auto& face : c.faces())
      if (face.dim() + 1 == f.rank) ++facets[face];
  for (const auto& [facet, n] : facets)
    if (n != 2) {
      std::ostringstream os;
      os << "facet " << facet << " lies in " << n << " cones instead of two";
      r.add("complete", "fan", os.str());
    }
  return r;
}

bool is_regular_fan(const ToricFan& f) {
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    if (!f.cone(i).is_regular()) return false;
  return true;
}

namespace {

// delta cap { h = height } projected to N, or nullopt.
std::optional<Polyhedron> level(const Cone& delta, int height) {
  const std::size_t n = delta.rank() - 1;
  std::vector<Halfspace> hs;
  for (const auto& a : delta.facet_normals()) {
    LatticeVector ax(n);
    for (std::size_t i = 0; i < n; ++i) ax[i] = a[i];
    Rational offset = Rational(-a[n] * height);
    if (ax.is_zero()) {
      if (offset > 0) return std::nullopt;
      continue;
    }
    hs.push_back({ax, offset});
  }
  return Polyhedron::from_inequalities(n, hs);
}

}  // namespace

PDivisor downgrade_member(const Cone& delta) {
  if (!delta.is_pointed() || !delta.is_full_dimensional() || delta.rank() < 2)
    throw Error("downgrade needs a pointed full-dimensional cone");
  const std::size_t n = delta.rank() - 1;
  auto tail = level(delta, 0);
  std::map<PointOnP1, Coefficient> coeffs;
  auto c0 = level(delta, 1), cinf = level(delta, -1);
  coeffs.emplace(PointOnP1::zero(), c0 ? Coefficient(*c0) : Coefficient::empty());
  coeffs.emplace(PointOnP1::infinity(), cinf ? Coefficient(*cinf) : Coefficient::empty());
  std::vector<LatticeVector> rays(tail->tail_rays());
  return PDivisor(Cone::from_rays(n, rays), std::move(coeffs));
}

DivisorialFan toric_downgrade(const ToricFan& f, std::size_t height) {
  if (height >= f.rank) throw Error("projection coordinate out of range");
  auto r = check_complete(f);
  if (!r.ok()) throw Error("toric fan is not complete: " + r.findings.front().message);
  ToricFan g = f;
  for (auto& v : g.rays) {
    auto h = v[height];
    for (std::size_t i = height; i + 1 < f.rank; ++i) v[i] = v[i + 1];
    v[f.rank - 1] = h;
  }
  std::vector<PDivisor> members;
  for (std::size_t i = 0; i < g.cones.size(); ++i) members.push_back(downgrade_member(g.cone(i)));
  return DivisorialFan(f.rank - 1, std::move(members));
}

}  // namespace tfan
