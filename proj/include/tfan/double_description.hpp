#pragma once
// Double description conversion for homogeneous cones in Q^d.

#include "tfan/lattice.hpp"

#include <span>
#include <vector>

namespace tfan {

/// Generators of a (possibly non-pointed) cone: cone(rays) + span(lineality).
/// Rays are primitive, orthogonal to the lineality space and sorted; the
/// lineality basis is canonical (see canonical_span_basis).
struct ConeGenerators {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> lineality;
};

/// Minimal generators of {x in Q^dim : a.x >= 0 for a in inequalities,
/// e.x = 0 for e in equations}. Exact; handles degenerate and
/// lower-dimensional input.
ConeGenerators cone_generators(std::size_t dim, std::span<const LatticeVector> inequalities,
                               std::span<const LatticeVector> equations = {});

/// Canonical form of cone(rays) + span(lineality) without redundancy
/// removal among rays (used once the rays are known to be extreme).
ConeGenerators canonicalize(std::size_t dim, std::vector<LatticeVector> rays,
                            std::vector<LatticeVector> lineality);

}  // namespace tfan
