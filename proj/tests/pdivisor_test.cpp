#include "tfan/pdivisor.hpp"

#include "divisor_gen.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace tfan {
namespace {

using namespace tfan::testing;

const PointOnP1 kZero = PointOnP1::zero();
const PointOnP1 kInf = PointOnP1::infinity();

Cone half_line() { return cone(1, {lv({1})}); }

PDivisor e1() {
  return PDivisor(half_line(), {{kZero, up_from("1")}, {kInf, up_from("0")}});
}

TEST(PointOnP1, ParsePrintRoundTrip) {
  for (const char* s : {"0", "inf", "@3/2", "@-1", "z"})
    EXPECT_EQ(PointOnP1::parse(s).to_string(), s);
  EXPECT_EQ(PointOnP1::coordinate(0), kZero);
  EXPECT_THROW(PointOnP1::named(""), Error);
  EXPECT_THROW(PointOnP1::named("inf"), Error);
  EXPECT_LT(kZero, kInf);
  EXPECT_LT(kInf, PointOnP1::coordinate(5));
  EXPECT_LT(PointOnP1::coordinate(5), PointOnP1::named("a"));
}

TEST(PDivisor, RejectsWrongTail) {
  EXPECT_THROW(PDivisor(half_line(), {{kZero, segment("0", "1")}}), Error);
  EXPECT_THROW(PDivisor(Cone::from_rays(1, std::vector<LatticeVector>{},
                                        std::vector{lv({1})}),
                        {}),
               Error);
}

TEST(PDivisor, ExplicitTailCoefficientsAreDropped) {
  PDivisor d(half_line(), {{kZero, up_from("1")}, {PointOnP1::named("y"), up_from("0")}});
  EXPECT_EQ(d.support().size(), 1u);
  EXPECT_EQ(d, PDivisor(half_line(), {{kZero, up_from("1")}}));
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(e1()), Coefficient(up_from("1")));
  EXPECT_TRUE(degree(PDivisor(half_line(), {{kZero, Coefficient::empty()}})).is_empty());
  EXPECT_EQ(degree(PDivisor(half_line(), {})), Coefficient(up_from("0")));
}

TEST(Properness, Examples) {
  EXPECT_TRUE(is_proper(e1()));
  EXPECT_FALSE(is_proper(PDivisor(half_line(), {})));
  EXPECT_TRUE(is_proper(PDivisor(half_line(), {{kZero, Coefficient::empty()}})));
  // deg = [-1, inf) is not inside the tail.
  EXPECT_FALSE(is_proper(PDivisor(half_line(), {{kZero, up_from("-1")}})));
}

TEST(DowngradeCone, FixtureE1) {
  auto c = downgrade_cone(e1(), kZero, kInf, lv({0}));
  EXPECT_EQ(c, cone(2, {lv({1, 1}), lv({1, 0}), lv({0, -1})}));
  EXPECT_EQ(c.rays(), (std::vector{lv({0, -1}), lv({1, 1})}));
  EXPECT_TRUE(c.is_regular());
}

TEST(DowngradeCone, EmptyAtZero) {
  PDivisor d(half_line(), {{kZero, Coefficient::empty()}});
  EXPECT_EQ(downgrade_cone(d, kZero, kInf, lv({0})), cone(2, {lv({1, 0}), lv({0, -1})}));
}

TEST(DowngradeCone, DegenerateIsNonPointed) {
  Cone zero(1);
  PDivisor d(zero, {{kZero, poly(1, {rv({0})})}, {kInf, poly(1, {rv({0})})}});
  auto c = downgrade_cone(d, kZero, kInf, lv({0}));
  EXPECT_FALSE(c.is_pointed());
  EXPECT_THROW(c.is_regular(), Error);
}

TEST(DowngradeCone, RejectsNonTranslateOutsideDistinguishedPoints) {
  PDivisor d(half_line(), {{kZero, up_from("1")}, {kInf, up_from("0")},
                           {PointOnP1::named("y"), up_from("1/2")}});
  try {
    downgrade_cone(d, kZero, kInf, lv({0}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("divisor not of downgrade form"), std::string::npos);
  }
}

TEST(ExtremalRays, Examples) {
  using T = ClassifiedRay::Type;
  EXPECT_EQ(extremal_rays(e1(), kZero, kInf, lv({0})),
            (std::vector<ClassifiedRay>{{T::ZeroVertex, lv({1, 1})},
                                        {T::InfinityVertex, lv({0, -1})}}));
  PDivisor d(half_line(), {{kZero, Coefficient::empty()}});
  EXPECT_EQ(extremal_rays(d, kZero, kInf, lv({0})),
            (std::vector<ClassifiedRay>{{T::TailRay, lv({1, 0})},
                                        {T::InfinityVertex, lv({0, -1})}}));
  PDivisor p(Cone(1), {{kZero, segment("-1", "0")}, {kInf, Coefficient::empty()}});
  EXPECT_EQ(extremal_rays(p, kZero, kInf, lv({0})),
            (std::vector<ClassifiedRay>{{T::ZeroVertex, lv({-1, 1})},
                                        {T::ZeroVertex, lv({0, 1})}}));
}

TEST(Smoothness, Examples) {
  EXPECT_TRUE(is_smooth(e1()));
  PDivisor bad_tail(cone(2, {lv({1, 0}), lv({1, 2})}), {{kZero, Coefficient::empty()}});
  EXPECT_FALSE(is_smooth(bad_tail));
  PDivisor halves(half_line(), {{kZero, up_from("1/2")}, {kInf, up_from("1/2")}});
  ASSERT_TRUE(is_proper(halves));
  EXPECT_FALSE(is_smooth(halves));
  auto c = downgrade_cone(halves, kZero, kInf, lv({0}));
  ASSERT_EQ(c.rays().size(), 2u);
  EXPECT_EQ(abs(cofactor_det(c.rays())), 4);
}

TEST(Smoothness, ImproperIsAnError) {
  try {
    is_smooth(PDivisor(half_line(), {}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "smoothness test requires a p-divisor");
  }
  EXPECT_THROW(is_affine_space(PDivisor(half_line(), {})), Error);
}

TEST(AffineSpace, FixtureE1) {
  auto cert = is_affine_space(e1());
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cone, cone(2, {lv({1, 1}), lv({0, -1})}));
  EXPECT_TRUE(cert->valid());
  EXPECT_TRUE(check_certificate(e1(), *cert).empty());
}

TEST(AffineSpace, NonMaximalTailChart) {
  auto zp = PointOnP1::named("z'");
  PDivisor d(Cone(1), {{zp, Coefficient::empty()}, {kZero, segment("-1", "0")}});
  auto cert = is_affine_space(d);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->cone, cone(2, {lv({-1, 1}), lv({0, 1})}));
  EXPECT_EQ(cofactor_det(cert->generators), -1);
  EXPECT_EQ(cert->y0, kZero);
  EXPECT_EQ(cert->y_inf, zp);
}

TEST(AffineSpace, TamperedCertificateIsRejected) {
  auto cert = *is_affine_space(e1());
  auto bad = cert;
  bad.generators[0] = lv({2, 2});
  EXPECT_FALSE(check_certificate(e1(), bad).empty());
  bad = cert;
  bad.w_inf = lv({5});
  EXPECT_FALSE(check_certificate(e1(), bad).empty());
  bad = cert;
  bad.generators = {lv({1, 0}), lv({0, -1})};
  EXPECT_FALSE(check_certificate(e1(), bad).empty());
}

TEST(Intersect, Coefficientwise) {
  PDivisor a(half_line(), {{kZero, up_from("1")}});
  PDivisor b(half_line(), {{kInf, up_from("2")}});
  EXPECT_EQ(intersect(a, b), PDivisor(half_line(), {{kZero, up_from("1")}, {kInf, up_from("2")}}));
  PDivisor c(Cone(1), {{kZero, segment("-1", "0")}});
  auto ac = intersect(a, c);
  EXPECT_TRUE(ac.at(kZero).is_empty());
}

TEST(PDivisorProperties, DegreeInvariantUnderFreshTailCoefficients) {
  std::mt19937 rng(21);
  for (int i = 0; i < 60; ++i) {
    auto d = random_divisor(rng);
    auto coeffs = d.support();
    coeffs.emplace(PointOnP1::named("fresh"), Polyhedron::from_cone(d.tail()));
    EXPECT_EQ(degree(PDivisor(d.tail(), coeffs)), degree(d));
  }
}

TEST(PDivisorProperties, ExtremalRaysMatchBruteForce) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    auto d = random_divisor(rng);
    if (!is_proper(d)) continue;
    auto pts = downgrade_points(d);
    if (!pts) continue;
    auto w0 = default_w0(d, pts->first, pts->second);
    auto c = downgrade_cone(d, pts->first, pts->second, w0);
    if (!c.is_pointed()) continue;
    std::vector<LatticeVector> classified;
    for (const auto& r : extremal_rays(d, pts->first, pts->second, w0)) classified.push_back(r.ray);
    std::sort(classified.begin(), classified.end());
    classified.erase(std::unique(classified.begin(), classified.end()), classified.end());
    auto gens = downgrade_generator_list(d, pts->first, pts->second, w0);
    EXPECT_EQ(classified, brute_extremal(3, gens)) << d;
    EXPECT_EQ(classified, c.rays()) << d;
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(PDivisorProperties, RegularityIndependentOfW0) {
  std::mt19937 rng(29);
  for (int i = 0; i < 80; ++i) {
    auto d = random_divisor(rng);
    if (!is_proper(d)) continue;
    auto pts = downgrade_points(d);
    if (!pts) continue;
    auto base = downgrade_cone(d, pts->first, pts->second, lv({0, 0}));
    auto w = random_vector(2, rng, 3);
    auto moved = downgrade_cone(d, pts->first, pts->second, w);
    // (x, k) -> (x + k w, k) maps one onto the other.
    std::vector<LatticeVector> mapped;
    for (const auto& r : base.rays()) mapped.push_back(shear(r, w));
    EXPECT_EQ(Cone::from_rays(3, mapped), moved);
    if (base.is_pointed()) EXPECT_EQ(base.is_regular(), moved.is_regular());
  }
}

TEST(PDivisorProperties, AffineSpaceImpliesSmooth) {
  std::mt19937 rng(31);
  int certified = 0;
  for (int i = 0; i < 150; ++i) {
    auto d = random_divisor(rng);
    if (!is_proper(d)) continue;
    if (auto cert = is_affine_space(d)) {
      EXPECT_TRUE(is_smooth(d)) << d;
      EXPECT_TRUE(check_certificate(d, *cert).empty()) << d;
      ++certified;
    }
  }
  EXPECT_GT(certified, 5);
}

TEST(PDivisorProperties, PointCoefficientsAgreeWithBasisExtension) {
  std::mt19937 rng(37);
  for (int i = 0; i < 150; ++i) {
    auto g = random_unimodular(2, rng);
    Cone tail = Cone::from_rays(2, std::vector{transform(g, lv({1, 0})), transform(g, lv({0, 1}))});
    auto a = random_vector(2, rng, 3), b = random_vector(2, rng, 3);
    auto pa = Polyhedron::from_generators(2, std::vector{to_rational(a)}, tail.rays());
    auto pb = Polyhedron::from_generators(2, std::vector{to_rational(b)}, tail.rays());
    PDivisor d(tail, {{kZero, pa}, {kInf, pb}});
    if (!is_proper(d)) continue;
    std::vector<LatticeVector> gens;
    for (const auto& r : tail.rays()) gens.push_back(LatticeVector(std::vector<Integer>{r[0], r[1], 0}));
    auto w0 = default_w0(d, kZero, kInf);
    auto v = translate_sum(d, kZero, kInf);
    gens.push_back(lift(to_rational(a + w0), 1));
    gens.push_back(lift(to_rational(b + v - w0), -1));
    auto extremal = brute_extremal(3, gens);
    bool expected = extremal.size() == 3 && extends_to_basis(extremal);
    EXPECT_EQ(is_affine_space(d).has_value(), expected) << d;
  }
}

}  // namespace
}  // namespace tfan
