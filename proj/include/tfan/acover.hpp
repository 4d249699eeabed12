#pragma once
// Constructive A-covering of a smooth complete divisorial fan on P^1: one
// certified affine-space chart per marked maximal tail, two per unmarked
// maximal tail, and one per maximal slice cell with a non-maximal tail.

#include "tfan/divfan.hpp"

#include <optional>
#include <vector>

namespace tfan {

/// Input fails the requirements of build_acover (rules, smoothness,
/// completeness).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct ChartOrigin {
  enum class Kind { MarkedMax, UnmarkedMaxZero, UnmarkedMaxInfinity, NonMaxTail };
  Kind kind;
  /// sigma for the maximal-tail kinds, tau for NonMaxTail.
  Cone tail;
  /// MarkedMax: index of the reused member.
  std::optional<std::size_t> member;
  /// NonMaxTail: the cell P at the point z, and the puncture z'.
  std::optional<Polyhedron> cell;
  std::optional<PointOnP1> z, z_prime;

  friend bool operator==(const ChartOrigin&, const ChartOrigin&) = default;
};

std::string to_string(ChartOrigin::Kind k);
std::optional<ChartOrigin::Kind> parse_origin_kind(const std::string& s);

struct ACoverChart {
  PDivisor divisor;
  ChartOrigin origin;
  AffineSpaceCertificate certificate;
  friend bool operator==(const ACoverChart&, const ACoverChart&) = default;
};

struct ACoverCertificate {
  std::vector<ACoverChart> charts;
  bool coverage_ok = false;
  bool markings_ok = false;
  /// Coverage and marking findings (empty when both flags hold).
  Report findings;
};

/// Lexicographically smallest v in N with v + tau in the face closure of s.
std::optional<LatticeVector> find_lattice_translate(const Cone& tau, const Slice& s);

/// Throws PreconditionError if the fan is not valid, smooth and complete, and
/// Error if a chart cannot be built or certified.
ACoverCertificate build_acover(const DivisorialFan& f);

/// Independent validation of a chart list against f: certificates, chart
/// compatibility with the slices, coverage of maximal cells and markings.
Report verify_acover(const DivisorialFan& f, const std::vector<ACoverChart>& charts);

}  // namespace tfan
