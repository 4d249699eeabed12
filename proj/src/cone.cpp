#include "tfan/cone.hpp"

#include "tfan/double_description.hpp"

#include <algorithm>
#include <set>

namespace tfan {

Cone::Cone(std::size_t rank) : rank_(rank) {
  for (std::size_t i = 0; i < rank; ++i) {
    LatticeVector e(rank);
    e[i] = 1;
    equations_.push_back(std::move(e));
  }
}

Cone::Cone(std::size_t rank, std::vector<LatticeVector> rays, std::vector<LatticeVector> lineality,
           std::vector<LatticeVector> facets, std::vector<LatticeVector> equations)
    : rank_(rank),
      rays_(std::move(rays)),
      lineality_(std::move(lineality)),
      facet_normals_(std::move(facets)),
      equations_(std::move(equations)) {}

Cone Cone::from_rays(std::size_t rank, std::span<const LatticeVector> rays,
                     std::span<const LatticeVector> lineality) {
  for (const auto& r : rays)
    if (r.size() != rank) throw Error("ray rank mismatch");
  for (const auto& l : lineality)
    if (l.size() != rank) throw Error("lineality rank mismatch");
  // Dual cone: its extreme rays are facet normals, its lineality the equations.
  auto dual = cone_generators(rank, rays, lineality);
  auto primal = cone_generators(rank, dual.rays, dual.lineality);
  return Cone(rank, std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
              std::move(dual.lineality));
}

Cone Cone::from_inequalities(std::size_t rank, std::span<const LatticeVector> normals,
                             std::span<const LatticeVector> equations) {
  auto primal = cone_generators(rank, normals, equations);
  auto dual = cone_generators(rank, primal.rays, primal.lineality);
  return Cone(rank, std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
              std::move(dual.lineality));
}

Cone Cone::from_rational_rays(std::size_t rank, std::span<const RationalVector> rays) {
  std::vector<LatticeVector> lv;
  for (const auto& r : rays) {
    auto p = primitive_direction(r);
    if (!p.is_zero()) lv.push_back(std::move(p));
  }
  return from_rays(rank, lv);
}

bool Cone::contains(const RationalVector& x) const {
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& n : facet_normals_)
    if (dot(n, x) < 0) return false;
  return true;
}

bool Cone::contains(const LatticeVector& x) const { return contains(to_rational(x)); }

bool Cone::contains(const Cone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(LatticeVector(-l))) return false;
  return true;
}

Cone Cone::intersect(const Cone& other) const {
  if (other.rank_ != rank_) throw Error("cone rank mismatch");
  auto normals = facet_normals_;
  normals.insert(normals.end(), other.facet_normals_.begin(), other.facet_normals_.end());
  auto eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(rank_, normals, eqs);
}

std::vector<Cone> Cone::faces() const {
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(rays_.size(), true)};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto cur = queue[q];
    for (const auto& f : facet_normals_) {
      std::vector<bool> next(rays_.size());
      bool proper = false;
      for (std::size_t i = 0; i < rays_.size(); ++i) {
        bool tight = dot(f, rays_[i]) == 0;
        next[i] = cur[i] && tight;
        if (cur[i] && !tight) proper = true;
      }
      if (proper && seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Cone> out;
  for (const auto& mask : seen) {
    std::vector<LatticeVector> sub;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (mask[i]) sub.push_back(rays_[i]);
    out.push_back(from_rays(rank_, sub, lineality_));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Cone::is_face_of(const Cone& other) const {
  if (other.rank_ != rank_ || !other.contains(*this)) return false;
  std::vector<const LatticeVector*> tight;
  for (const auto& f : other.facet_normals_) {
    bool all = std::all_of(rays_.begin(), rays_.end(), [&](const auto& r) { return dot(f, r) == 0; });
    all = all && std::all_of(lineality_.begin(), lineality_.end(),
                             [&](const auto& l) { return dot(f, l) == 0; });
    if (all) tight.push_back(&f);
  }
  std::vector<LatticeVector> sub;
  for (const auto& r : other.rays_)
    if (std::all_of(tight.begin(), tight.end(), [&](const auto* f) { return dot(*f, r) == 0; }))
      sub.push_back(r);
  return sub == rays_ && other.lineality_ == lineality_;
}

bool Cone::is_regular() const {
  if (!is_pointed()) throw Error("regularity undefined for non-pointed cone");
  return extends_to_basis(rays_);
}

bool is_regular(const Cone& c) { return c.is_regular(); }

bool is_regular_generating_set(std::span<const LatticeVector> generators) {
  for (const auto& g : generators)
    if (content(g) != 1) return false;
  return extends_to_basis(generators);
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.rays_ <=> b.rays_; c != 0) return c;
  return a.lineality_ <=> b.lineality_;
}

std::ostream& operator<<(std::ostream& os, const Cone& c) {
  os << "cone{";
  for (std::size_t i = 0; i < c.rays_.size(); ++i) os << (i ? "," : "") << c.rays_[i];
  os << '}';
  if (!c.lineality_.empty()) {
    os << "+span{";
    for (std::size_t i = 0; i < c.lineality_.size(); ++i) os << (i ? "," : "") << c.lineality_[i];
    os << '}';
  }
  return os;
}

}  // namespace tfan
