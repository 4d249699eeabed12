#pragma once
// Pointed rational polyhedra P = conv(vertices) + cone(tail_rays) in N_Q.

#include "tfan/cone.hpp"
#include "tfan/lattice.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace tfan {

/// a.x >= offset (or a.x == offset for equations).
struct Halfspace {
  LatticeVector normal;
  Rational offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Nonempty pointed polyhedron. The V-description is primary and canonical:
/// irredundant vertices sorted lexicographically, primitive tail rays sorted.
/// The H-description is derived at construction.
///
/// Internally the polyhedron is kept as its homogenization
///   cone{ (v, 1) : v vertex } + cone{ (r, 0) : r tail ray }  in Q^(n+1).
class Polyhedron {
 public:
  static Polyhedron from_generators(std::size_t rank, std::span<const RationalVector> vertices,
                                    std::span<const LatticeVector> rays = {});
  /// nullopt when the system is infeasible. Throws if the solution set
  /// contains a line.
  static std::optional<Polyhedron> from_inequalities(std::size_t rank,
                                                     std::span<const Halfspace> inequalities,
                                                     std::span<const Halfspace> equations = {});
  static Polyhedron point(const RationalVector& v);
  /// The pointed cone viewed as a polyhedron with the single vertex 0.
  static Polyhedron from_cone(const Cone& c);

  std::size_t rank() const { return rank_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<LatticeVector>& tail_rays() const { return tail_rays_; }
  const std::vector<Halfspace>& inequalities() const { return inequalities_; }
  const std::vector<Halfspace>& equations() const { return equations_; }
  const Cone& homogenization() const { return homog_; }

  Cone tail_cone() const;
  std::size_t dim() const { return homog_.dim() - 1; }
  bool is_bounded() const { return tail_rays_.empty(); }

  bool contains(const RationalVector& x) const;
  bool contains(const Polyhedron& other) const;

  /// All nonempty faces, including the polyhedron itself; sorted.
  std::vector<Polyhedron> faces() const;
  /// Faces of the given dimension.
  std::vector<Polyhedron> faces_of_dim(std::size_t d) const;

  Polyhedron translated(const RationalVector& v) const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.rank_ == b.rank_ && a.vertices_ == b.vertices_ && a.tail_rays_ == b.tail_rays_;
  }
  friend std::strong_ordering operator<=>(const Polyhedron& a, const Polyhedron& b);
  friend std::ostream& operator<<(std::ostream& os, const Polyhedron& p);

 private:
  explicit Polyhedron(std::size_t rank, Cone homog);

  std::size_t rank_ = 0;
  Cone homog_;
  std::vector<RationalVector> vertices_;
  std::vector<LatticeVector> tail_rays_;
  std::vector<Halfspace> inequalities_;
  std::vector<Halfspace> equations_;
};

Cone tail_cone(const Polyhedron& p);

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);

/// nullopt encodes the empty set.
std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q);

/// Irredundant H-description: facet inequalities plus affine-hull equations.
struct DualDescription {
  std::vector<Halfspace> inequalities;
  std::vector<Halfspace> equations;
};
DualDescription dual_description(const Polyhedron& p);
/// Inverse of dual_description.
std::optional<Polyhedron> vertex_enumeration(std::size_t rank, const DualDescription& d);

/// True iff f is the set of minimizers of some linear functional over p
/// (p itself counts). Use is_face(std::nullopt, p) semantics via the
/// optional overload for the empty face.
bool is_face(const Polyhedron& f, const Polyhedron& p);
bool is_face(const std::optional<Polyhedron>& f, const Polyhedron& p);

/// v in N with p = v + sigma, if p is a lattice translate of sigma.
std::optional<LatticeVector> lattice_translate_of(const Polyhedron& p, const Cone& sigma);
/// v in N_Q with p = v + sigma, if p is a translate of sigma.
std::optional<RationalVector> translate_of(const Polyhedron& p, const Cone& sigma);

}  // namespace tfan
