#pragma once
// Divisorial fans on P^1: slices, the slice and degree rules, the tail fan
// with its markings, open subdivisors and fan-level smoothness.

#include "tfan/pdivisor.hpp"
#include "tfan/report.hpp"

#include <optional>
#include <vector>

namespace tfan {

class DivisorialFan {
 public:
  /// All members must share the rank; an empty member list needs the rank.
  DivisorialFan(std::size_t rank, std::vector<PDivisor> members);

  std::size_t rank() const { return rank_; }
  const std::vector<PDivisor>& members() const { return members_; }
  /// Union of the members' supports plus Zero and Infinity, sorted.
  const std::vector<PointOnP1>& points() const { return points_; }

  /// Adds every pairwise intersection that is not yet a member, until closed.
  DivisorialFan closed_under_intersection() const;

 private:
  std::size_t rank_;
  std::vector<PDivisor> members_;
  std::vector<PointOnP1> points_;
};

/// The slice at a named point, or the generic slice (at == nullopt), which
/// consists of the tail cones.
struct Slice {
  std::optional<PointOnP1> at;
  /// Distinct nonempty coefficients, sorted.
  std::vector<Polyhedron> cells;
  /// Cells that are not a proper face of another cell.
  std::vector<Polyhedron> maximal;
  /// All nonempty faces of all cells, sorted.
  std::vector<Polyhedron> closure;

  std::string location() const { return at ? "slice " + at->to_string() : "generic slice"; }
};

Slice make_slice(std::optional<PointOnP1> at, std::vector<Polyhedron> cells);

/// One slice per point of F.points(), followed by the generic slice.
std::vector<Slice> slices(const DivisorialFan& f);

/// Cells meet in common faces, maximal cells are full-dimensional and every
/// facet of a maximal cell lies in exactly two maximal cells.
Report check_slice_rule(const DivisorialFan& f);
Report check_slice(const Slice& s, std::size_t rank);

/// tau meets deg D and deg D' alike for every pair, tau = tail D cap tail D';
/// also reports improper members.
Report check_degree_rule(const DivisorialFan& f);

/// Every pairwise intersection of members is an open subdivisor of both.
Report check_intersections(const DivisorialFan& f);

/// D'_y is a face of D_y for all y and deg D' = deg D cap tail D'.
bool is_open_subdivisor(const PDivisor& sub, const PDivisor& d);

struct TailFan {
  /// Face closure of the tail cones, sorted.
  std::vector<Cone> cones;
  std::vector<Cone> maximal;
  std::vector<Cone> marked;
  /// Pairs of tails overlapping in a non-face.
  Report violations;

  bool is_marked(const Cone& c) const;
};

TailFan tail_fan(const DivisorialFan& f);
std::vector<Cone> marked_cones(const DivisorialFan& f);

/// The unique maximal cell of the slice at y with tail sigma; y == nullopt
/// selects the generic slice. Throws Error("slice rule violated: ...").
Polyhedron slice_cell_for_tail(const DivisorialFan& f, const std::optional<PointOnP1>& y,
                               const Cone& sigma);
Polyhedron slice_cell_for_tail(const Slice& s, const Cone& sigma);

/// Fan-level smoothness. Reports a "precondition" finding when the slice or
/// degree rule fails.
Report is_smooth_fan(const DivisorialFan& f);

/// All rule checks used by `validate`.
Report validate(const DivisorialFan& f);

}  // namespace tfan
