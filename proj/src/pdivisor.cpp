#include "tfan/pdivisor.hpp"

#include <algorithm>
#include <sstream>

namespace tfan {

PointOnP1 PointOnP1::coordinate(const Rational& t) {
  if (t == 0) return zero();
  PointOnP1 p(Kind::Coordinate);
  p.coord_ = t;
  return p;
}

PointOnP1 PointOnP1::named(std::string name) {
  if (name.empty() || name == "0" || name == "inf" || name.front() == '@')
    throw Error("invalid point name '" + name + "'");
  PointOnP1 p(Kind::Named);
  p.name_ = std::move(name);
  return p;
}

PointOnP1 PointOnP1::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "inf") return infinity();
  if (!text.empty() && text.front() == '@') return coordinate(parse_rational(text.substr(1)));
  return named(text);
}

std::string PointOnP1::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::Infinity: return "inf";
    case Kind::Coordinate: return "@" + tfan::to_string(coord_);
    case Kind::Named: return name_;
  }
  return {};
}

std::strong_ordering operator<=>(const PointOnP1& a, const PointOnP1& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.coord_ < b.coord_) return std::strong_ordering::less;
  if (b.coord_ < a.coord_) return std::strong_ordering::greater;
  return a.name_ <=> b.name_;
}

const Polyhedron& Coefficient::polyhedron() const {
  if (!poly_) throw Error("empty coefficient has no polyhedron");
  return *poly_;
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) {
  if (c.is_empty()) return os << "empty";
  return os << c.polyhedron();
}

PDivisor::PDivisor(Cone tail, std::map<PointOnP1, Coefficient> coefficients)
    : tail_(std::move(tail)) {
  if (!tail_.is_pointed()) throw Error("tail cone must be pointed");
  const auto sigma = Polyhedron::from_cone(tail_);
  for (auto& [y, c] : coefficients) {
    if (!c.is_empty()) {
      const auto& p = c.polyhedron();
      if (p.rank() != rank()) throw Error("coefficient at " + y.to_string() + " has wrong rank");
      if (p.tail_rays() != tail_.rays())
        throw Error("coefficient at " + y.to_string() + " does not have the divisor's tail cone");
      if (p == sigma) continue;
    }
    support_.emplace(y, std::move(c));
  }
}

Coefficient PDivisor::at(const PointOnP1& y) const {
  auto it = support_.find(y);
  if (it != support_.end()) return it->second;
  return Polyhedron::from_cone(tail_);
}

bool PDivisor::has_empty_coefficient() const {
  return std::any_of(support_.begin(), support_.end(),
                     [](const auto& kv) { return kv.second.is_empty(); });
}

std::ostream& operator<<(std::ostream& os, const PDivisor& d) {
  bool first = true;
  for (const auto& [y, c] : d.support_) {
    os << (first ? "" : " + ") << c << "*" << y;
    first = false;
  }
  if (first) os << "trivial";
  return os << " [tail " << d.tail_ << "]";
}

Coefficient degree(const PDivisor& d) {
  if (d.has_empty_coefficient()) return Coefficient::empty();
  auto sum = Polyhedron::from_cone(d.tail());
  for (const auto& [y, c] : d.support()) sum = minkowski_sum(sum, c.polyhedron());
  return sum;
}

bool is_proper(const PDivisor& d) {
  auto deg = degree(d);
  if (deg.is_empty()) return true;
  auto sigma = Polyhedron::from_cone(d.tail());
  return sigma.contains(deg.polyhedron()) && deg.polyhedron() != sigma;
}

LatticeVector translate_sum(const PDivisor& d, const PointOnP1& y0, const PointOnP1& y_inf) {
  LatticeVector v(d.rank());
  for (const auto& [y, c] : d.support()) {
    if (y == y0 || y == y_inf) continue;
    std::optional<LatticeVector> t;
    if (!c.is_empty()) t = lattice_translate_of(c.polyhedron(), d.tail());
    if (!t) throw Error("divisor not of downgrade form: coefficient at " + y.to_string() +
                        " is not a lattice translate of the tail cone");
    v += *t;
  }
  return v;
}

namespace {

LatticeVector lift(const RationalVector& x, int height) {
  RationalVector h(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) h[i] = x[i];
  h[x.size()] = height;
  return primitive_direction(h);
}

LatticeVector lift(const LatticeVector& x, int height) { return lift(to_rational(x), height); }

// Generators of cone(w0 + D0, w_inf + D_inf) in N (+) Z.
std::vector<LatticeVector> downgrade_generators(const PDivisor& d, const Coefficient& d0,
                                                const Coefficient& dinf,
                                                const LatticeVector& w0,
                                                const LatticeVector& w_inf) {
  std::vector<LatticeVector> gens;
  for (const auto& r : d.tail().rays()) gens.push_back(lift(r, 0));
  if (!d0.is_empty())
    for (const auto& v : d0.polyhedron().vertices()) gens.push_back(lift(v + to_rational(w0), 1));
  if (!dinf.is_empty())
    for (const auto& v : dinf.polyhedron().vertices())
      gens.push_back(lift(v + to_rational(w_inf), -1));
  return gens;
}

}  // namespace

Cone downgrade_cone(const PDivisor& d, const PointOnP1& y0, const PointOnP1& y_inf,
                    const LatticeVector& w0) {
  if (y0 == y_inf) throw Error("distinguished points must differ");
  if (w0.size() != d.rank()) throw Error("w0 has wrong rank");
  auto v = translate_sum(d, y0, y_inf);
  auto gens = downgrade_generators(d, d.at(y0), d.at(y_inf), w0, v - w0);
  return Cone::from_rays(d.rank() + 1, gens);
}

LatticeVector default_w0(const PDivisor& d, const PointOnP1& y0, const PointOnP1& y_inf) {
  auto v = translate_sum(d, y0, y_inf);
  if (v.is_zero()) return v;
  auto d0 = d.at(y0);
  if (d0.is_empty()) return v;
  const auto& vs = d0.polyhedron().vertices();
  RationalVector b(d.rank());
  for (const auto& x : vs) b += x;
  b *= Rational(1, vs.size());
  return -floor(b);
}

std::vector<ClassifiedRay> extremal_rays(const PDivisor& d, const PointOnP1& y0,
                                         const PointOnP1& y_inf, const LatticeVector& w0) {
  if (y0 == y_inf) throw Error("distinguished points must differ");
  auto v = translate_sum(d, y0, y_inf);
  auto deg = degree(d);
  std::vector<ClassifiedRay> out;
  for (const auto& r : d.tail().rays()) {
    bool avoided = deg.is_empty();
    if (!avoided) {
      auto ray = Polyhedron::from_cone(Cone::from_rays(d.rank(), std::vector{r}));
      avoided = !intersect(deg.polyhedron(), ray).has_value();
    }
    if (avoided) out.push_back({ClassifiedRay::Type::TailRay, lift(r, 0)});
  }
  auto d0 = d.at(y0), dinf = d.at(y_inf);
  if (!d0.is_empty())
    for (const auto& x : d0.polyhedron().vertices())
      out.push_back({ClassifiedRay::Type::ZeroVertex, lift(x + to_rational(w0), 1)});
  if (!dinf.is_empty())
    for (const auto& x : dinf.polyhedron().vertices())
      out.push_back({ClassifiedRay::Type::InfinityVertex, lift(x + to_rational(v - w0), -1)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointOnP1> special_points(const PDivisor& d) {
  std::vector<PointOnP1> out;
  for (const auto& [y, c] : d.support())
    if (c.is_empty() || !lattice_translate_of(c.polyhedron(), d.tail())) out.push_back(y);
  return out;
}

std::optional<std::pair<PointOnP1, PointOnP1>> downgrade_points(const PDivisor& d) {
  auto pts = special_points(d);
  if (pts.size() > 2) return std::nullopt;
  std::vector<PointOnP1> pad{PointOnP1::zero(), PointOnP1::infinity()};
  for (const auto& p : pad) {
    if (pts.size() == 2) break;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  return std::pair{pts[0], pts[1]};
}

namespace {

void require_proper(const PDivisor& d) {
  if (!is_proper(d)) throw Error("smoothness test requires a p-divisor");
}

}  // namespace

bool is_smooth(const PDivisor& d) {
  require_proper(d);
  const std::size_t n = d.rank();
  if (!degree(d).is_empty()) {
    auto pts = downgrade_points(d);
    if (!pts) return false;
    auto c = downgrade_cone(d, pts->first, pts->second, default_w0(d, pts->first, pts->second));
    return c.is_pointed() && c.is_regular();
  }
  // Empty degree: cone(D_y, empty) must be regular at every point; unlisted
  // points and empty coefficients both reduce to regularity of the tail.
  if (!d.tail().is_regular()) return false;
  for (const auto& [y, c] : d.support()) {
    if (c.is_empty()) continue;
    auto gens = downgrade_generators(d, c, Coefficient::empty(), LatticeVector(n),
                                     LatticeVector(n));
    auto cone = Cone::from_rays(n + 1, gens);
    if (!cone.is_pointed() || !cone.is_regular()) return false;
  }
  return true;
}

std::optional<AffineSpaceCertificate> is_affine_space(const PDivisor& d) {
  if (!is_proper(d)) throw Error("affine-space test requires a p-divisor");
  auto pts = downgrade_points(d);
  if (!pts) return std::nullopt;
  const auto& [y0, y_inf] = *pts;
  auto w0 = default_w0(d, y0, y_inf);
  auto c = downgrade_cone(d, y0, y_inf, w0);
  if (!c.is_pointed()) return std::nullopt;
  AffineSpaceCertificate cert;
  cert.regular = c.is_regular();
  cert.full_dimensional = c.dim() == d.rank() + 1;
  if (!cert.valid()) return std::nullopt;
  cert.generators = c.rays();
  cert.cone = std::move(c);
  cert.y0 = y0;
  cert.y_inf = y_inf;
  cert.w_inf = translate_sum(d, y0, y_inf) - w0;
  cert.w0 = std::move(w0);
  return cert;
}

std::vector<std::string> check_certificate(const PDivisor& d, const AffineSpaceCertificate& c) {
  std::vector<std::string> problems;
  const std::size_t n = d.rank();
  if (!is_proper(d)) problems.push_back("chart divisor is not proper");
  if (!c.regular) problems.push_back("certificate does not claim regularity");
  if (!c.full_dimensional) problems.push_back("certificate does not claim full dimension");
  if (c.y0 == c.y_inf) problems.push_back("distinguished points coincide");
  if (c.w0.size() != n || c.w_inf.size() != n) {
    problems.push_back("w0/w_inf have wrong rank");
    return problems;
  }
  for (const auto& g : c.generators) {
    if (g.size() != n + 1) {
      problems.push_back("recorded generator has wrong rank");
      return problems;
    }
    if (content(g) != 1) {
      std::ostringstream os;
      os << "recorded generator " << g << " is not primitive";
      problems.push_back(os.str());
    }
  }
  if (c.generators.size() != n + 1) problems.push_back("cone does not have n+1 generators");
  if (problems.empty() && !is_regular_generating_set(c.generators))
    problems.push_back("recorded generators are not part of a lattice basis");

  try {
    auto v = translate_sum(d, c.y0, c.y_inf);
    if (c.w0 + c.w_inf != v) problems.push_back("w0 + w_inf differs from the translate sum");
    auto expected = downgrade_cone(d, c.y0, c.y_inf, c.w0);
    bool nonzero = std::all_of(c.generators.begin(), c.generators.end(),
                               [](const auto& g) { return !g.is_zero(); });
    if (!nonzero || Cone::from_rays(n + 1, c.generators) != expected) {
      std::ostringstream os;
      os << "recorded cone differs from the recomputed downgrade cone " << expected;
      problems.push_back(os.str());
    } else if (expected != c.cone) {
      problems.push_back("certificate cone differs from its generators");
    }
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  return problems;
}

PDivisor intersect(const PDivisor& a, const PDivisor& b) {
  if (a.rank() != b.rank()) throw Error("divisor rank mismatch");
  auto tail = a.tail().intersect(b.tail());
  std::map<PointOnP1, Coefficient> coeffs;
  std::vector<PointOnP1> pts;
  for (const auto& [y, c] : a.support()) pts.push_back(y);
  for (const auto& [y, c] : b.support()) pts.push_back(y);
  for (const auto& y : pts) {
    auto ca = a.at(y), cb = b.at(y);
    if (ca.is_empty() || cb.is_empty()) {
      coeffs.insert_or_assign(y, Coefficient::empty());
      continue;
    }
    auto p = intersect(ca.polyhedron(), cb.polyhedron());
    coeffs.insert_or_assign(y, p ? Coefficient(*p) : Coefficient::empty());
  }
  return PDivisor(std::move(tail), std::move(coeffs));
}

}  // namespace tfan
