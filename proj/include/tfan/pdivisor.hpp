#pragma once
// Polyhedral divisors on P^1: degree, properness, the downgrade cone in
// N (+) Z, its extremal rays, smoothness and the affine-space certificate.

#include "tfan/cone.hpp"
#include "tfan/polyhedron.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace tfan {

/// A point of P^1 as a symbolic label. Only identity matters.
class PointOnP1 {
 public:
  enum class Kind { Zero, Infinity, Coordinate, Named };

  static PointOnP1 zero() { return PointOnP1(Kind::Zero); }
  static PointOnP1 infinity() { return PointOnP1(Kind::Infinity); }
  /// Coordinate 0 is the point Zero.
  static PointOnP1 coordinate(const Rational& t);
  /// Names must be nonempty and not collide with the reserved spellings
  /// "0", "inf" or "@...".
  static PointOnP1 named(std::string name);
  /// Inverse of to_string().
  static PointOnP1 parse(const std::string& text);

  Kind kind() const { return kind_; }
  const Rational& coordinate_value() const { return coord_; }
  const std::string& name() const { return name_; }

  /// "0", "inf", "@<rational>" or the name.
  std::string to_string() const;

  friend bool operator==(const PointOnP1&, const PointOnP1&) = default;
  friend std::strong_ordering operator<=>(const PointOnP1& a, const PointOnP1& b);
  friend std::ostream& operator<<(std::ostream& os, const PointOnP1& p) {
    return os << p.to_string();
  }

 private:
  explicit PointOnP1(Kind k) : kind_(k) {}
  Kind kind_;
  Rational coord_;
  std::string name_;
};

/// Either the empty set or a polyhedron.
class Coefficient {
 public:
  static Coefficient empty() { return Coefficient(); }
  Coefficient(Polyhedron p) : poly_(std::move(p)) {}

  bool is_empty() const { return !poly_.has_value(); }
  const Polyhedron& polyhedron() const;
  const std::optional<Polyhedron>& as_optional() const { return poly_; }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c);

 private:
  Coefficient() = default;
  std::optional<Polyhedron> poly_;
};

/// D = sum_y D_y * y with a common pointed tail cone. Unlisted points carry
/// the tail cone itself; listed coefficients equal to the tail are dropped so
/// the stored support is canonical.
class PDivisor {
 public:
  PDivisor(Cone tail, std::map<PointOnP1, Coefficient> coefficients);

  std::size_t rank() const { return tail_.rank(); }
  const Cone& tail() const { return tail_; }
  const std::map<PointOnP1, Coefficient>& support() const { return support_; }
  /// D_y, with unlisted points yielding the tail cone.
  Coefficient at(const PointOnP1& y) const;
  bool has_empty_coefficient() const;

  friend bool operator==(const PDivisor&, const PDivisor&) = default;
  friend std::ostream& operator<<(std::ostream& os, const PDivisor& d);

 private:
  Cone tail_;
  std::map<PointOnP1, Coefficient> support_;
};

/// Sum of all coefficients; Empty iff some coefficient is empty.
Coefficient degree(const PDivisor& d);

/// degree is Empty, or a proper subset of the tail cone.
bool is_proper(const PDivisor& d);

/// Sum of the lattice offsets v_y over points other than y0 and y_inf.
/// Throws if some such coefficient is not a lattice translate of the tail.
LatticeVector translate_sum(const PDivisor& d, const PointOnP1& y0, const PointOnP1& y_inf);

/// Cone in N (+) Z generated by (w0 + D_y0) x {1}, tail x {0} and
/// (w_inf + D_yinf) x {-1}, where w_inf = v - w0.
Cone downgrade_cone(const PDivisor& d, const PointOnP1& y0, const PointOnP1& y_inf,
                    const LatticeVector& w0);

/// Default w0: 0 if the translate sum vanishes, else minus the componentwise
/// floor of the barycenter of D_y0's vertices (or the translate sum itself when
/// D_y0 is empty).
LatticeVector default_w0(const PDivisor& d, const PointOnP1& y0, const PointOnP1& y_inf);

struct ClassifiedRay {
  enum class Type { TailRay = 1, ZeroVertex = 2, InfinityVertex = 3 };
  Type type;
  LatticeVector ray;  // primitive, in N (+) Z
  friend bool operator==(const ClassifiedRay&, const ClassifiedRay&) = default;
  friend auto operator<=>(const ClassifiedRay& a, const ClassifiedRay& b) {
    if (auto c = a.type <=> b.type; c != 0) return c;
    return a.ray <=> b.ray;
  }
};

/// The three kinds of extremal rays of the downgrade cone, derived from the
/// coefficients alone (not from the cone): tail rays avoided by the degree,
/// lifted vertices of D_y0 and lifted vertices of D_yinf. Sorted by type.
std::vector<ClassifiedRay> extremal_rays(const PDivisor& d, const PointOnP1& y0,
                                         const PointOnP1& y_inf, const LatticeVector& w0);

/// Smoothness of X(D). Throws Error("smoothness test requires a p-divisor")
/// for improper input.
bool is_smooth(const PDivisor& d);

struct AffineSpaceCertificate {
  Cone cone;
  /// Ray generators as recorded; equal to cone.rays() when built here.
  std::vector<LatticeVector> generators;
  PointOnP1 y0 = PointOnP1::zero();
  PointOnP1 y_inf = PointOnP1::infinity();
  LatticeVector w0, w_inf;
  bool regular = false;
  bool full_dimensional = false;

  bool valid() const { return regular && full_dimensional; }
  friend bool operator==(const AffineSpaceCertificate&, const AffineSpaceCertificate&) = default;
};

/// Points whose coefficient is empty or not a lattice translate of the tail.
std::vector<PointOnP1> special_points(const PDivisor& d);

/// The distinguished pair (y0, y_inf) used for D: the special points,
/// padded with Zero/Infinity (or fresh names), sorted. nullopt if there are
/// more than two special points.
std::optional<std::pair<PointOnP1, PointOnP1>> downgrade_points(const PDivisor& d);

/// A certificate that X(D) is an affine space, or nullopt when the sufficient
/// criterion (downgrade form, regular cone of full dimension n+1) does not
/// apply. Throws for improper input.
std::optional<AffineSpaceCertificate> is_affine_space(const PDivisor& d);

/// Re-derives the certificate's cone from d and its recorded choices and
/// checks every claim. Returns a list of problems (empty when valid).
std::vector<std::string> check_certificate(const PDivisor& d, const AffineSpaceCertificate& c);

/// Coefficientwise intersection; tail is the intersection of tails.
PDivisor intersect(const PDivisor& a, const PDivisor& b);

}  // namespace tfan
