#include "tfan/acover.hpp"

#include "tfan/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace tfan {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

bool contains(const std::vector<Cone>& cs, const Cone& c) {
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

// Slices at named points, without the generic one.
std::vector<Slice> named_slices(const DivisorialFan& f) {
  auto all = slices(f);
  all.pop_back();
  return all;
}

Report coverage_and_markings(const DivisorialFan& f, const std::vector<Slice>& named,
                             const TailFan& tails, const std::vector<PDivisor>& divisors) {
  Report r;
  for (const auto& s : named)
    for (const auto& p : s.maximal) {
      bool covered = std::any_of(divisors.begin(), divisors.end(), [&](const PDivisor& d) {
        auto c = d.at(*s.at);
        return !c.is_empty() && c.polyhedron() == p;
      });
      if (!covered) r.add("coverage", s.location(), "cell " + str(p) + " is not covered");
    }
  for (const auto& sigma : tails.maximal) {
    bool covered = std::any_of(divisors.begin(), divisors.end(),
                               [&](const PDivisor& d) { return d.tail() == sigma; });
    if (!covered) r.add("coverage", "generic slice", "tail " + str(sigma) + " is not covered");
  }
  if (divisors.empty()) {
    if (!tails.marked.empty()) r.add("marking", "tail fan", "no charts");
    return r;
  }
  auto chart_marked = marked_cones(DivisorialFan(f.rank(), divisors));
  for (const auto& c : tails.marked)
    if (!contains(chart_marked, c)) r.add("marking", "tail " + str(c), "marking is lost");
  for (const auto& c : chart_marked)
    if (!contains(tails.marked, c)) r.add("marking", "tail " + str(c), "marking is added");
  return r;
}

}  // namespace

std::string to_string(ChartOrigin::Kind k) {
  switch (k) {
    case ChartOrigin::Kind::MarkedMax: return "marked";
    case ChartOrigin::Kind::UnmarkedMaxZero: return "unmarked-zero";
    case ChartOrigin::Kind::UnmarkedMaxInfinity: return "unmarked-infinity";
    case ChartOrigin::Kind::NonMaxTail: return "non-maximal-tail";
  }
  return {};
}

std::optional<ChartOrigin::Kind> parse_origin_kind(const std::string& s) {
  for (auto k : {ChartOrigin::Kind::MarkedMax, ChartOrigin::Kind::UnmarkedMaxZero,
                 ChartOrigin::Kind::UnmarkedMaxInfinity, ChartOrigin::Kind::NonMaxTail})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::optional<LatticeVector> find_lattice_translate(const Cone& tau, const Slice& s) {
  std::optional<LatticeVector> best;
  for (const auto& p : s.closure) {
    if (p.tail_rays() != tau.rays()) continue;
    if (auto v = lattice_translate_of(p, tau); v && (!best || *v < *best)) best = v;
  }
  return best;
}

ACoverCertificate build_acover(const DivisorialFan& f) {
  if (auto smooth = is_smooth_fan(f); !smooth.ok()) {
    const auto& first = smooth.findings.front();
    throw PreconditionError("fan is not smooth and complete: " + first.location + ": " +
                            first.message);
  }
  const auto named = named_slices(f);
  const auto tails = tail_fan(f);
  const auto& members = f.members();

  std::vector<PDivisor> divisors;
  std::vector<ChartOrigin> origins;

  for (const auto& sigma : tails.maximal) {
    if (tails.is_marked(sigma)) {
      for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].tail() == sigma && !degree(members[i]).is_empty()) {
          divisors.push_back(members[i]);
          origins.push_back({ChartOrigin::Kind::MarkedMax, sigma, i, {}, {}, {}});
          break;
        }
      continue;
    }
    for (auto kind : {ChartOrigin::Kind::UnmarkedMaxZero, ChartOrigin::Kind::UnmarkedMaxInfinity}) {
      auto puncture = kind == ChartOrigin::Kind::UnmarkedMaxZero ? PointOnP1::zero()
                                                                 : PointOnP1::infinity();
      std::map<PointOnP1, Coefficient> coeffs;
      for (const auto& s : named)
        coeffs.emplace(*s.at, *s.at == puncture ? Coefficient::empty()
                                                : Coefficient(slice_cell_for_tail(s, sigma)));
      divisors.emplace_back(sigma, std::move(coeffs));
      origins.push_back({kind, sigma, {}, {}, {}, {}});
    }
  }

  for (const auto& s : named) {
    const auto& z = *s.at;
    for (const auto& p : s.maximal) {
      auto tau = p.tail_cone();
      if (contains(tails.maximal, tau)) continue;
      std::map<PointOnP1, LatticeVector> translates;
      std::vector<PointOnP1> missing;
      for (const auto& other : named) {
        if (*other.at == z) continue;
        if (auto v = find_lattice_translate(tau, other)) translates.emplace(*other.at, *v);
        else missing.push_back(*other.at);
      }
      if (missing.size() >= 2)
        throw Error("cell " + str(p) + " at " + s.location() + ": slices " +
                    missing[0].to_string() + " and " + missing[1].to_string() +
                    " lack a lattice translate of its tail");
      PointOnP1 zp = !missing.empty() ? missing.front()
                     : z == PointOnP1::infinity() ? PointOnP1::zero()
                                                  : PointOnP1::infinity();
      std::map<PointOnP1, Coefficient> coeffs;
      coeffs.emplace(zp, Coefficient::empty());
      coeffs.emplace(z, p);
      for (const auto& [y, v] : translates)
        if (y != zp) coeffs.emplace(y, Polyhedron::from_cone(tau).translated(to_rational(v)));
      divisors.emplace_back(tau, std::move(coeffs));
      origins.push_back({ChartOrigin::Kind::NonMaxTail, tau, {}, p, z, zp});
    }
  }

  auto certs = parallel_map<AffineSpaceCertificate>(divisors.size(), [&](std::size_t i) {
    auto cert = is_affine_space(divisors[i]);
    if (!cert) throw Error("chart " + str(divisors[i]) + " failed certification");
    return *cert;
  });

  ACoverCertificate out;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    out.charts.push_back({divisors[i], origins[i], certs[i]});
  out.findings = coverage_and_markings(f, named, tails, divisors);
  out.coverage_ok = std::none_of(out.findings.findings.begin(), out.findings.findings.end(),
                                 [](const Finding& x) { return x.rule == "coverage"; });
  out.markings_ok = std::none_of(out.findings.findings.begin(), out.findings.findings.end(),
                                 [](const Finding& x) { return x.rule == "marking"; });
  return out;
}

Report verify_acover(const DivisorialFan& f, const std::vector<ACoverChart>& charts) {
  Report r;
  const auto named = named_slices(f);
  const auto tails = tail_fan(f);
  auto per_chart = parallel_map<Report>(charts.size(), [&](std::size_t i) {
    Report c;
    const auto loc = "chart " + std::to_string(i);
    const auto& d = charts[i].divisor;
    if (d.rank() != f.rank()) {
      c.add("certificate", loc, "chart has the wrong rank");
      return c;
    }
    try {
      for (const auto& problem : check_certificate(d, charts[i].certificate))
        c.add("certificate", loc, problem);
    } catch (const Error& e) {
      c.add("certificate", loc, e.what());
    }
    if (!contains(tails.cones, d.tail()))
      c.add("compatibility", loc, "tail " + str(d.tail()) + " is not in the tail fan");
    for (const auto& [y, coeff] : d.support()) {
      if (coeff.is_empty()) continue;
      auto it = std::find_if(named.begin(), named.end(), [&](const Slice& s) { return s.at == y; });
      // Outside the named points the slice is the tail fan, whose cells are
      // cones and therefore never stored explicitly.
      bool ok = it != named.end() &&
                std::binary_search(it->closure.begin(), it->closure.end(), coeff.polyhedron());
      if (!ok)
        c.add("compatibility", loc,
              "coefficient at " + y.to_string() + " is not a cell of the slice");
    }
    return c;
  });
  for (const auto& c : per_chart) r.merge(c);
  std::vector<PDivisor> divisors;
  for (const auto& c : charts) divisors.push_back(c.divisor);
  r.merge(coverage_and_markings(f, named, tails, divisors));
  return r;
}

}  // namespace tfan
