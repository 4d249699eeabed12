#include "tfan/polyhedron.hpp"

#include <algorithm>

namespace tfan {

namespace {

LatticeVector homogenize_point(const RationalVector& v) {
  RationalVector h(v.size() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) h[i] = v[i];
  h[v.size()] = 1;
  return primitive_direction(h);
}

LatticeVector homogenize_ray(const LatticeVector& r) {
  LatticeVector h(r.size() + 1);
  for (std::size_t i = 0; i < r.size(); ++i) h[i] = r[i];
  return h;
}

LatticeVector homogenize_constraint(const Halfspace& h) {
  LatticeVector a(h.normal.size() + 1);
  Integer den = denominator(h.offset);
  for (std::size_t i = 0; i < h.normal.size(); ++i) a[i] = h.normal[i] * den;
  a[h.normal.size()] = -numerator(h.offset);
  return a;
}

// a.x >= -c  from the homogeneous normal (a, c).
Halfspace dehomogenize(const LatticeVector& f) {
  const std::size_t n = f.size() - 1;
  LatticeVector a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = f[i];
  return {std::move(a), Rational(-f[n])};
}

}  // namespace

Polyhedron::Polyhedron(std::size_t rank, Cone homog) : rank_(rank), homog_(std::move(homog)) {
  if (!homog_.is_pointed()) throw Error("polyhedron is not pointed");
  for (const auto& g : homog_.rays()) {
    const Integer& t = g[rank];
    if (t > 0) {
      RationalVector v(rank);
      for (std::size_t i = 0; i < rank; ++i) v[i] = Rational(g[i], t);
      vertices_.push_back(std::move(v));
    } else {
      LatticeVector r(rank);
      for (std::size_t i = 0; i < rank; ++i) r[i] = g[i];
      tail_rays_.push_back(std::move(r));
    }
  }
  if (vertices_.empty()) throw Error("polyhedron has no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(tail_rays_.begin(), tail_rays_.end());

  for (const auto& f : homog_.facet_normals()) {
    // Normals whose face avoids every vertex cut out the face at infinity.
    bool touches = std::any_of(homog_.rays().begin(), homog_.rays().end(), [&](const auto& g) {
      return g[rank] > 0 && dot(f, g) == 0;
    });
    if (touches) inequalities_.push_back(dehomogenize(f));
  }
  for (const auto& e : homog_.equations()) equations_.push_back(dehomogenize(e));
}

Polyhedron Polyhedron::from_generators(std::size_t rank, std::span<const RationalVector> vertices,
                                       std::span<const LatticeVector> rays) {
  if (vertices.empty()) throw Error("polyhedron needs at least one vertex");
  std::vector<LatticeVector> gens;
  for (const auto& v : vertices) {
    if (v.size() != rank) throw Error("vertex rank mismatch");
    gens.push_back(homogenize_point(v));
  }
  for (const auto& r : rays) {
    if (r.size() != rank) throw Error("ray rank mismatch");
    if (!r.is_zero()) gens.push_back(homogenize_ray(r));
  }
  return Polyhedron(rank, Cone::from_rays(rank + 1, gens));
}

std::optional<Polyhedron> Polyhedron::from_inequalities(std::size_t rank,
                                                        std::span<const Halfspace> inequalities,
                                                        std::span<const Halfspace> equations) {
  std::vector<LatticeVector> ineq, eq;
  for (const auto& h : inequalities) {
    if (h.normal.size() != rank) throw Error("constraint rank mismatch");
    ineq.push_back(homogenize_constraint(h));
  }
  LatticeVector t(rank + 1);
  t[rank] = 1;
  ineq.push_back(std::move(t));
  for (const auto& h : equations) {
    if (h.normal.size() != rank) throw Error("constraint rank mismatch");
    eq.push_back(homogenize_constraint(h));
  }
  auto homog = Cone::from_inequalities(rank + 1, ineq, eq);
  bool feasible = std::any_of(homog.rays().begin(), homog.rays().end(),
                              [&](const auto& g) { return g[rank] > 0; });
  // Lines of the homogenization lie in t = 0, so t > 0 rays decide feasibility.
  if (!feasible) return std::nullopt;
  if (!homog.is_pointed()) throw Error("polyhedron is not pointed");
  return Polyhedron(rank, std::move(homog));
}

Polyhedron Polyhedron::point(const RationalVector& v) {
  return from_generators(v.size(), std::span<const RationalVector>(&v, 1));
}

Polyhedron Polyhedron::from_cone(const Cone& c) {
  if (!c.is_pointed()) throw Error("polyhedron is not pointed");
  RationalVector origin(c.rank());
  return from_generators(c.rank(), std::span<const RationalVector>(&origin, 1), c.rays());
}

Cone Polyhedron::tail_cone() const { return Cone::from_rays(rank_, tail_rays_); }

bool Polyhedron::contains(const RationalVector& x) const {
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& h : inequalities_)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.rank_ != rank_) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : other.tail_rays_)
    if (!homog_.contains(homogenize_ray(r))) return false;
  return true;
}

std::vector<Polyhedron> Polyhedron::faces() const {
  std::vector<Polyhedron> out;
  for (auto& f : homog_.faces()) {
    bool has_vertex = std::any_of(f.rays().begin(), f.rays().end(),
                                  [&](const auto& g) { return g[rank_] > 0; });
    if (has_vertex) out.push_back(Polyhedron(rank_, std::move(f)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Polyhedron> Polyhedron::faces_of_dim(std::size_t d) const {
  std::vector<Polyhedron> out;
  for (auto& f : faces())
    if (f.dim() == d) out.push_back(std::move(f));
  return out;
}

Polyhedron Polyhedron::translated(const RationalVector& v) const {
  std::vector<RationalVector> vs;
  for (const auto& x : vertices_) vs.push_back(x + v);
  return from_generators(rank_, vs, tail_rays_);
}

std::strong_ordering operator<=>(const Polyhedron& a, const Polyhedron& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
  return a.tail_rays_ <=> b.tail_rays_;
}

std::ostream& operator<<(std::ostream& os, const Polyhedron& p) {
  os << "conv{";
  for (std::size_t i = 0; i < p.vertices_.size(); ++i) os << (i ? "," : "") << p.vertices_[i];
  os << '}';
  if (!p.tail_rays_.empty()) {
    os << "+cone{";
    for (std::size_t i = 0; i < p.tail_rays_.size(); ++i) os << (i ? "," : "") << p.tail_rays_[i];
    os << '}';
  }
  return os;
}

Cone tail_cone(const Polyhedron& p) { return p.tail_cone(); }

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.rank() != q.rank()) throw Error("polyhedron rank mismatch");
  std::vector<RationalVector> vs;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) vs.push_back(a + b);
  auto rays = p.tail_rays();
  rays.insert(rays.end(), q.tail_rays().begin(), q.tail_rays().end());
  return Polyhedron::from_generators(p.rank(), vs, rays);
}

std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.rank() != q.rank()) throw Error("polyhedron rank mismatch");
  auto ineq = p.inequalities();
  ineq.insert(ineq.end(), q.inequalities().begin(), q.inequalities().end());
  auto eq = p.equations();
  eq.insert(eq.end(), q.equations().begin(), q.equations().end());
  return Polyhedron::from_inequalities(p.rank(), ineq, eq);
}

DualDescription dual_description(const Polyhedron& p) {
  return {p.inequalities(), p.equations()};
}

std::optional<Polyhedron> vertex_enumeration(std::size_t rank, const DualDescription& d) {
  return Polyhedron::from_inequalities(rank, d.inequalities, d.equations);
}

bool is_face(const Polyhedron& f, const Polyhedron& p) {
  if (f.rank() != p.rank() || !p.contains(f)) return false;
  std::vector<const Halfspace*> tight;
  for (const auto& h : p.inequalities()) {
    bool all = std::all_of(f.vertices().begin(), f.vertices().end(),
                           [&](const auto& v) { return dot(h.normal, v) == h.offset; });
    all = all && std::all_of(f.tail_rays().begin(), f.tail_rays().end(),
                             [&](const auto& r) { return dot(h.normal, r) == 0; });
    if (all) tight.push_back(&h);
  }
  std::vector<RationalVector> vs;
  for (const auto& v : p.vertices())
    if (std::all_of(tight.begin(), tight.end(),
                    [&](const auto* h) { return dot(h->normal, v) == h->offset; }))
      vs.push_back(v);
  std::vector<LatticeVector> rs;
  for (const auto& r : p.tail_rays())
    if (std::all_of(tight.begin(), tight.end(),
                    [&](const auto* h) { return dot(h->normal, r) == 0; }))
      rs.push_back(r);
  return vs == f.vertices() && rs == f.tail_rays();
}

bool is_face(const std::optional<Polyhedron>& f, const Polyhedron& p) {
  return !f || is_face(*f, p);
}

std::optional<RationalVector> translate_of(const Polyhedron& p, const Cone& sigma) {
  if (p.rank() != sigma.rank() || p.vertices().size() != 1) return std::nullopt;
  if (!sigma.is_pointed() || p.tail_rays() != sigma.rays()) return std::nullopt;
  return p.vertices().front();
}

std::optional<LatticeVector> lattice_translate_of(const Polyhedron& p, const Cone& sigma) {
  auto v = translate_of(p, sigma);
  if (!v || !is_integral(*v)) return std::nullopt;
  return to_lattice(*v);
}

}  // namespace tfan
