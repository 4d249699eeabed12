#include "tfan/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tfan {

namespace {

constexpr int kVersion = 1;

// A JSON value together with its pointer, for positioned errors.
class At {
 public:
  At(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError((path_.empty() ? std::string("/") : path_) + ": " + msg);
  }

  At operator[](const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) fail("missing field '" + key + "'");
    return At(*it, path_ + "/" + key);
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  At operator[](std::size_t i) const { return At(j_.at(i), path_ + "/" + std::to_string(i)); }

  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }
  std::size_t index() const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<long long>() >= 0))
      fail("expected a non-negative integer");
    return j_.get<std::size_t>();
  }

  Rational rational() const {
    if (j_.is_number_integer()) return Rational(Integer(j_.get<long long>()));
    if (j_.is_number_unsigned()) return Rational(Integer(j_.get<unsigned long long>()));
    if (j_.is_string()) {
      try {
        return parse_rational(j_.get<std::string>());
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("expected an integer or a \"p/q\" string");
  }
  Integer integer() const {
    auto q = rational();
    if (denominator(q) != 1) fail("expected an integer");
    return numerator(q);
  }

  LatticeVector lattice_vector(std::size_t rank) const {
    if (size() != rank) fail("expected " + std::to_string(rank) + " coordinates");
    LatticeVector v(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = (*this)[i].integer();
    return v;
  }
  RationalVector rational_vector(std::size_t rank) const {
    if (size() != rank) fail("expected " + std::to_string(rank) + " coordinates");
    RationalVector v(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = (*this)[i].rational();
    return v;
  }
  std::vector<LatticeVector> lattice_vectors(std::size_t rank) const {
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].lattice_vector(rank));
    return out;
  }
  PointOnP1 point() const {
    try {
      return PointOnP1::parse(string());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  void check_header(const std::string& format) const {
    if (!j_.is_object()) fail("expected an object");
    if (has("format") && (*this)["format"].string() != format)
      (*this)["format"].fail("expected format '" + format + "'");
    if (has("version") && (*this)["version"].index() != kVersion)
      (*this)["version"].fail("unsupported version");
  }

 private:
  const Json& j_;
  std::string path_;
};

// Runs fn, turning library errors into positioned parse errors.
template <class F>
auto guarded(const At& at, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    at.fail(e.what());
  }
}

std::size_t read_rank(const At& doc) {
  auto r = doc["rank"].index();
  if (r == 0) doc["rank"].fail("rank must be positive");
  return r;
}

Polyhedron polyhedron_from(const At& at, std::size_t rank,
                           const std::vector<LatticeVector>& default_rays) {
  std::vector<RationalVector> vs;
  auto verts = at["vertices"];
  for (std::size_t i = 0; i < verts.size(); ++i) vs.push_back(verts[i].rational_vector(rank));
  if (vs.empty()) verts.fail("a polyhedron needs at least one vertex");
  auto rays = at.has("rays") ? at["rays"].lattice_vectors(rank) : default_rays;
  return guarded(at, [&] { return Polyhedron::from_generators(rank, vs, rays); });
}

Cone cone_from(const At& at, std::size_t rank) {
  auto rays = at.lattice_vectors(rank);
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].is_zero()) at[i].fail("ray must be nonzero");
  return guarded(at, [&] { return Cone::from_rays(rank, rays); });
}

PDivisor divisor_from(const At& at, std::size_t rank) {
  auto tail = cone_from(at["tail"], rank);
  if (!tail.is_pointed()) at["tail"].fail("tail cone must be pointed");
  std::map<PointOnP1, Coefficient> coeffs;
  auto cs = at["coefficients"];
  if (!cs.json().is_object()) cs.fail("expected an object");
  for (const auto& [key, value] : cs.json().items()) {
    At c(value, cs.path() + "/" + key);
    auto y = guarded(c, [&] { return PointOnP1::parse(key); });
    if (coeffs.contains(y)) c.fail("duplicate point " + y.to_string());
    if (value.is_string()) {
      auto s = value.get<std::string>();
      if (s == "empty") coeffs.emplace(y, Coefficient::empty());
      else if (s == "tail") coeffs.emplace(y, Polyhedron::from_cone(tail));
      else c.fail("expected \"empty\", \"tail\" or {vertices, rays}");
    } else {
      coeffs.emplace(y, polyhedron_from(c, rank, tail.rays()));
    }
  }
  return guarded(at, [&] { return PDivisor(tail, coeffs); });
}

AffineSpaceCertificate certificate_from(const At& at, std::size_t rank) {
  AffineSpaceCertificate c;
  c.generators = at["generators"].lattice_vectors(rank + 1);
  c.cone = cone_from(at["cone"], rank + 1);
  c.y0 = at["y0"].point();
  c.y_inf = at["y_inf"].point();
  c.w0 = at["w0"].lattice_vector(rank);
  c.w_inf = at["w_inf"].lattice_vector(rank);
  c.regular = at["regular"].boolean();
  c.full_dimensional = at["full_dimensional"].boolean();
  return c;
}

ChartOrigin origin_from(const At& at, std::size_t rank) {
  auto kind = parse_origin_kind(at["kind"].string());
  if (!kind) at["kind"].fail("unknown chart origin");
  ChartOrigin o{*kind, cone_from(at["tail"], rank), {}, {}, {}, {}};
  if (at.has("member")) o.member = at["member"].index();
  if (at.has("cell")) o.cell = polyhedron_from(at["cell"], rank, {});
  if (at.has("z")) o.z = at["z"].point();
  if (at.has("z_prime")) o.z_prime = at["z_prime"].point();
  return o;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": invalid JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(path + ": cannot write file");
    out << text;
    if (!out.flush()) throw Error(path + ": write failed");
  }
  fs::rename(tmp, target);
}

Json to_json(const Rational& q) {
  if (denominator(q) == 1) {
    const auto& n = numerator(q);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return n.convert_to<long long>();
  }
  return to_string(q);
}

Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(to_json(Rational(v[i])));
  return a;
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

namespace {
template <class V>
Json to_json_list(const std::vector<V>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}
}  // namespace

Json to_json(const Polyhedron& p) {
  return {{"vertices", to_json_list(p.vertices())}, {"rays", to_json_list(p.tail_rays())}};
}

Json to_json(const Cone& c) { return to_json_list(c.rays()); }

Json to_json(const PDivisor& d) {
  Json cs = Json::object();
  for (const auto& [y, c] : d.support())
    cs[y.to_string()] = c.is_empty() ? Json("empty") : to_json(c.polyhedron());
  return {{"tail", to_json(d.tail())}, {"coefficients", cs}};
}

Json to_json(const DivisorialFan& f) {
  Json pts = Json::array();
  for (const auto& y : f.points()) pts.push_back(y.to_string());
  return {{"format", "tfan-fan"},
          {"version", kVersion},
          {"rank", f.rank()},
          {"points", pts},
          {"members", to_json_list(f.members())}};
}

Json to_json(const ToricFan& f) {
  return {{"format", "tfan-toric-fan"},
          {"version", kVersion},
          {"rank", f.rank},
          {"rays", to_json_list(f.rays)},
          {"cones", f.cones}};
}

Json to_json(const AffineSpaceCertificate& c) {
  return {{"cone", to_json(c.cone)},
          {"generators", to_json_list(c.generators)},
          {"y0", c.y0.to_string()},
          {"y_inf", c.y_inf.to_string()},
          {"w0", to_json(c.w0)},
          {"w_inf", to_json(c.w_inf)},
          {"regular", c.regular},
          {"full_dimensional", c.full_dimensional}};
}

Json to_json(const ACoverChart& c) {
  Json o = {{"kind", to_string(c.origin.kind)}, {"tail", to_json(c.origin.tail)}};
  if (c.origin.member) o["member"] = *c.origin.member;
  if (c.origin.cell) o["cell"] = to_json(*c.origin.cell);
  if (c.origin.z) o["z"] = c.origin.z->to_string();
  if (c.origin.z_prime) o["z_prime"] = c.origin.z_prime->to_string();
  return {{"origin", o}, {"divisor", to_json(c.divisor)}, {"certificate", to_json(c.certificate)}};
}

Json to_json(const std::vector<ACoverChart>& charts) { return to_json_list(charts); }

Json to_json(const Report& r) {
  Json a = Json::array();
  for (const auto& f : r.findings)
    a.push_back({{"rule", f.rule}, {"location", f.location}, {"message", f.message}});
  return a;
}

DivisorialFan fan_from_json(const Json& j) {
  At doc(j, "");
  doc.check_header("tfan-fan");
  auto rank = read_rank(doc);
  std::optional<std::vector<PointOnP1>> declared;
  if (doc.has("points")) {
    auto pts = doc["points"];
    declared.emplace();
    for (std::size_t i = 0; i < pts.size(); ++i) declared->push_back(pts[i].point());
  }
  std::vector<PDivisor> members;
  auto ms = doc["members"];
  for (std::size_t i = 0; i < ms.size(); ++i) {
    members.push_back(divisor_from(ms[i], rank));
    if (!declared) continue;
    for (const auto& [y, c] : members.back().support())
      if (std::find(declared->begin(), declared->end(), y) == declared->end())
        ms[i]["coefficients"].fail("point " + y.to_string() + " is not declared in /points");
  }
  return DivisorialFan(rank, std::move(members));
}

ToricFan toric_fan_from_json(const Json& j) {
  At doc(j, "");
  doc.check_header("tfan-toric-fan");
  ToricFan f;
  f.rank = read_rank(doc);
  f.rays = doc["rays"].lattice_vectors(f.rank);
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (f.rays[i].is_zero()) doc["rays"][i].fail("ray must be nonzero");
  auto cs = doc["cones"];
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::vector<std::size_t> cone;
    for (std::size_t k = 0; k < cs[i].size(); ++k) {
      auto idx = cs[i][k].index();
      if (idx >= f.rays.size()) cs[i][k].fail("ray index out of range");
      cone.push_back(idx);
    }
    f.cones.push_back(std::move(cone));
  }
  return f;
}

std::vector<ACoverChart> charts_from_json(const Json& j, std::size_t rank) {
  At doc(j, "");
  At list = !j.is_object()          ? doc
            : doc.has("certificate") ? doc["certificate"]["charts"]
                                     : doc["charts"];
  std::vector<ACoverChart> charts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto c = list[i];
    charts.push_back({divisor_from(c["divisor"], rank), origin_from(c["origin"], rank),
                      certificate_from(c["certificate"], rank)});
  }
  return charts;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return {};
}

Json report_document(const std::string& command, Status status, const Report& r,
                     const Json& certificate) {
  Json doc = {{"format", "tfan-report"},
              {"version", kVersion},
              {"command", command},
              {"status", to_string(status)},
              {"findings", to_json(r)}};
  if (!certificate.is_null()) doc["certificate"] = certificate;
  return doc;
}

}  // namespace tfan
