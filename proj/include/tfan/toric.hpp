#pragma once
// Complete toric fans in N (+) Z and their downgrade to divisorial fans on P^1.

#include "tfan/divfan.hpp"

#include <vector>

namespace tfan {

struct ToricFan {
  std::size_t rank = 0;
  std::vector<LatticeVector> rays;
  /// Maximal cones as indices into rays.
  std::vector<std::vector<std::size_t>> cones;

  Cone cone(std::size_t i) const;
};

/// Cones are pointed and full-dimensional, meet in common faces, and every
/// facet lies in exactly two cones.
Report check_complete(const ToricFan& f);

/// Every maximal cone is regular.
bool is_regular_fan(const ToricFan& f);

/// One p-divisor per maximal cone delta: D_0 = delta at height 1,
/// D_inf = delta at height -1, tail = delta at height 0. The coordinate
/// `height` is the projection; the remaining coordinates keep their order.
/// Throws Error if the fan is not complete.
DivisorialFan toric_downgrade(const ToricFan& f, std::size_t height);

/// The p-divisor of a single pointed full-dimensional cone (height last).
PDivisor downgrade_member(const Cone& delta);

}  // namespace tfan
