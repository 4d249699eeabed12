// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include "tfan/io.hpp"

#include "divisor_gen.hpp"
#include "fan_gen.hpp"
#include "test_util.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace {

using namespace tfan;
using namespace tfan::testing;
namespace fs = std::filesystem;

const std::string kCli = TFAN_CLI;
// Extra context printed under a criterion's result line.
std::ostringstream detail;
const std::string kFixtures = TFAN_FIXTURES;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / ("tfan_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const std::string& env = "") {
  auto cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// downgrade + acover through the CLI; returns the parsed report.
Json cli_acover(const std::string& toric_name) {
  auto dir = scratch();
  auto fan = (dir / (toric_name + "_fan.json")).string();
  auto report = (dir / (toric_name + "_report.json")).string();
  require(run_cli("downgrade " + kFixtures + "/toric/" + toric_name + ".json --out " + fan) == 0,
          "downgrade failed");
  require(run_cli("acover " + fan + " --out " + report) == 0, "acover did not pass");
  return parse_json(read_file(report));
}

std::vector<ACoverChart> charts_of(const Json& report, std::size_t rank) {
  return charts_from_json(report, rank);
}

std::size_t count_kind(const std::vector<ACoverChart>& cs, ChartOrigin::Kind k) {
  return std::count_if(cs.begin(), cs.end(), [&](const auto& c) { return c.origin.kind == k; });
}

void f1_end_to_end() {
  auto report = cli_acover("f1");
  auto charts = charts_of(report, 1);
  require(charts.size() == 4, "expected 4 charts, got " + std::to_string(charts.size()));
  require(count_kind(charts, ChartOrigin::Kind::MarkedMax) == 1, "expected 1 marked chart");
  require(count_kind(charts, ChartOrigin::Kind::UnmarkedMaxZero) +
                  count_kind(charts, ChartOrigin::Kind::UnmarkedMaxInfinity) ==
              2,
          "expected 2 unmarked charts");
  require(count_kind(charts, ChartOrigin::Kind::NonMaxTail) == 1,
          "expected 1 non-maximal-tail chart");
  std::vector<Cone> cones;
  for (const auto& c : charts) {
    require(c.certificate.valid() && c.certificate.cone.dim() == 2, "chart not certified");
    require(is_regular_generating_set(c.certificate.generators), "chart cone not regular");
    cones.push_back(c.certificate.cone);
  }
  std::sort(cones.begin(), cones.end());
  std::vector<Cone> expected{cone(2, {lv({-1, 1}), lv({0, -1})}), cone(2, {lv({1, 0}), lv({0, -1})}),
                             cone(2, {lv({0, 1}), lv({1, 0})}), cone(2, {lv({-1, 1}), lv({0, 1})})};
  std::sort(expected.begin(), expected.end());
  require(cones == expected, "chart cones differ from the hand computation");
  require(report["certificate"]["coverage_ok"] == true && report["certificate"]["markings_ok"] == true,
          "coverage or markings check failed");
}

void p2_end_to_end() {
  auto report = cli_acover("p2");
  auto charts = charts_of(report, 1);
  require(charts.size() == 3, "expected 3 charts, got " + std::to_string(charts.size()));
  auto fan = fan_from_json(parse_json(read_file(kFixtures + "/fans/p2.json")));
  require(marked_cones(fan) == std::vector{cone(1, {lv({-1})})}, "markings differ from {Q<=0}");
  require(report["certificate"]["coverage_ok"] == true && report["certificate"]["markings_ok"] == true,
          "coverage or markings check failed");
}

void toric_oracle() {
  std::mt19937 rng(2024);
  std::vector<ToricFan> corpus2, corpus3;
  for (int i = 0; i < 80; ++i) corpus2.push_back(random_fan2(rng));
  for (int i = 0; i < 40; ++i) corpus2.push_back(random_smooth_fan2(rng));
  for (int i = 0; i < 20; ++i) corpus3.push_back(random_fan3(rng));
  for (int i = 0; i < 10; ++i) corpus3.push_back(random_smooth_fan3(rng));
  std::size_t smooth = 0, singular = 0;
  auto check = [&](const ToricFan& t, const std::string& label) {
    require(check_complete(t).ok(), label + ": generator produced an incomplete fan");
    auto f = toric_downgrade(t, t.rank - 1);
    bool regular = is_regular_fan(t);
    require(is_smooth_fan(f).ok() == regular, label + ": smoothness disagrees with regularity");
    if (!regular) {
      ++singular;
      return;
    }
    ++smooth;
    auto cert = build_acover(f);
    require(cert.charts.size() == t.cones.size(),
            label + ": " + std::to_string(cert.charts.size()) + " charts for " +
                std::to_string(t.cones.size()) + " maximal cones");
    require(cert.coverage_ok && cert.markings_ok, label + ": coverage or markings failed");
  };
  for (std::size_t i = 0; i < corpus2.size(); ++i) check(corpus2[i], "rank-2 fan " + std::to_string(i));
  for (std::size_t i = 0; i < corpus3.size(); ++i) check(corpus3[i], "rank-3 fan " + std::to_string(i));
  require(smooth > 0 && singular > 0, "corpus lacks smooth or singular fans");
  detail << corpus2.size() << " rank-2 and " << corpus3.size() << " rank-3 fans, "
            << smooth << " smooth, " << singular << " singular";
}

void properness_smoothness() {
  Cone pos = cone(1, {lv({1})});
  PDivisor e1(pos, {{PointOnP1::zero(), up_from("1")}, {PointOnP1::infinity(), up_from("0")}});
  require(is_proper(e1), "E1 is not proper");
  require(is_smooth(e1), "E1 is not smooth");
  require(!is_proper(PDivisor(pos, {})), "the all-tail divisor is proper");
  PDivisor bad(cone(2, {lv({1, 0}), lv({1, 2})}), {{PointOnP1::zero(), Coefficient::empty()}});
  require(is_proper(bad) && !is_smooth(bad), "empty divisor over a non-regular tail is smooth");
}

template <class F>
std::size_t for_downgrade_form(std::uint32_t seed, std::size_t wanted, F&& fn) {
  std::mt19937 rng(seed);
  std::size_t n = 0;
  for (int attempts = 0; n < wanted && attempts < 100 * static_cast<int>(wanted); ++attempts) {
    auto d = random_divisor(rng);
    if (!is_proper(d)) continue;
    auto pts = downgrade_points(d);
    if (!pts) continue;
    fn(d, pts->first, pts->second, rng);
    ++n;
  }
  require(n >= wanted, "too few random divisors of downgrade form");
  return n;
}

void extremal_classification() {
  auto n = for_downgrade_form(7, 60, [](const PDivisor& d, const PointOnP1& y0,
                                        const PointOnP1& yi, std::mt19937&) {
    auto w0 = default_w0(d, y0, yi);
    std::vector<LatticeVector> classified;
    for (const auto& r : extremal_rays(d, y0, yi, w0)) classified.push_back(r.ray);
    std::sort(classified.begin(), classified.end());
    auto brute = brute_extremal(3, downgrade_generator_list(d, y0, yi, w0));
    std::ostringstream os;
    os << d;
    require(classified == brute, "classification differs from brute force for " + os.str());
  });
  detail << n << " random divisors";
}

void w0_invariance() {
  auto n = for_downgrade_form(11, 60, [](const PDivisor& d, const PointOnP1& y0,
                                         const PointOnP1& yi, std::mt19937& rng) {
    auto w = random_vector(2, rng, 4), w2 = random_vector(2, rng, 4);
    auto a = downgrade_cone(d, y0, yi, w), b = downgrade_cone(d, y0, yi, w2);
    std::vector<LatticeVector> mapped;
    for (const auto& r : a.rays()) mapped.push_back(shear(r, w2 - w));
    require(Cone::from_rays(3, mapped, a.lineality()) == b, "cones are not related by the shear");
    if (a.is_pointed()) require(a.is_regular() == b.is_regular(), "regularity depends on w0");
  });
  detail << n << " random divisors";
}

void determinism() {
  auto dir = scratch();
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures + "/fans")) {
    auto in = entry.path().string();
    std::string first;
    for (const char* threads : {"1", "4", "1"}) {
      auto out = (dir / "det.json").string();
      run_cli("acover " + in + " --out " + out, std::string("TFAN_THREADS=") + threads);
      auto text = read_file(out);
      if (first.empty()) first = text;
      require(text == first, "acover output differs between runs on " + in);
    }
    ++files;
  }
  detail << files << " fixtures";
}

struct Criterion {
  int id;
  std::string name;
  std::function<void()> run;
  double limit_seconds;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "F1 end-to-end: 4 certified charts", f1_end_to_end, 1.0},
      {2, "P2 end-to-end: 3 charts, markings {Q<=0}", p2_end_to_end, 1.0},
      {3, "toric oracle equivalence on random complete fans", toric_oracle, 60.0},
      {4, "properness and smoothness unit suite", properness_smoothness, 0},
      {5, "extremal-ray classification matches brute force", extremal_classification, 0},
      {6, "downgrade cone invariance under w0", w0_invariance, 0},
      {7, "acover reports are byte-identical across runs", determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds)
      why = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s";
    std::cout << (why.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name
              << " (" << static_cast<long>(secs * 1000) << " ms)";
    if (!why.empty()) std::cout << " -- " << why;
    std::cout << "\n";
    if (!detail.str().empty()) std::cout << "      " << detail.str() << "\n";
    std::cout.flush();
    detail.str("");
    if (!why.empty()) ++failed;
  }
  fs::remove_all(scratch());
  return failed == 0 ? 0 : 1;
}
