#pragma once
// Rational polyhedral cones in N_Q with both descriptions.

#include "tfan/lattice.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace tfan {

/// A rational polyhedral cone, stored canonically:
///   V-side: cone(rays) + span(lineality),
///   H-side: { x : n.x >= 0 for n in facet_normals, e.x = 0 for e in equations }.
/// Both sides are computed at construction. Two cones are equal iff their
/// canonical V-sides agree.
class Cone {
 public:
  /// The zero cone {0} in Q^rank.
  explicit Cone(std::size_t rank = 0);

  static Cone from_rays(std::size_t rank, std::span<const LatticeVector> rays,
                        std::span<const LatticeVector> lineality = {});
  static Cone from_inequalities(std::size_t rank, std::span<const LatticeVector> normals,
                                std::span<const LatticeVector> equations = {});
  /// Cone generated by rational directions (scaled to primitive lattice vectors).
  static Cone from_rational_rays(std::size_t rank, std::span<const RationalVector> rays);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& lineality() const { return lineality_; }
  const std::vector<LatticeVector>& facet_normals() const { return facet_normals_; }
  const std::vector<LatticeVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.empty(); }
  std::size_t dim() const { return rank_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const RationalVector& x) const;
  bool contains(const LatticeVector& x) const;
  bool contains(const Cone& other) const;

  Cone intersect(const Cone& other) const;
  /// Faces of the cone (including itself and the minimal face), sorted.
  std::vector<Cone> faces() const;
  bool is_face_of(const Cone& other) const;

  /// Throws for non-pointed cones ("regularity undefined for non-pointed cone").
  bool is_regular() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);
  friend std::ostream& operator<<(std::ostream& os, const Cone& c);

 private:
  Cone(std::size_t rank, std::vector<LatticeVector> rays, std::vector<LatticeVector> lineality,
       std::vector<LatticeVector> facets, std::vector<LatticeVector> equations);

  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> lineality_;
  std::vector<LatticeVector> facet_normals_;
  std::vector<LatticeVector> equations_;
};

/// Regularity test as a free function (same contract as Cone::is_regular).
bool is_regular(const Cone& c);

/// True iff the given generator list itself is primitive, linearly
/// independent and part of a lattice basis. Unlike is_regular this does not
/// reduce the list to extremal rays first, so redundant or non-primitive
/// generators fail.
bool is_regular_generating_set(std::span<const LatticeVector> generators);

}  // namespace tfan
