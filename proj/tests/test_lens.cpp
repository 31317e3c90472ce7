#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lenskit;

namespace {
LensSpace L(long r, long s) { return LensSpace(r, s); }
}

TEST(Lens, NormalForms) {
  EXPECT_EQ(L(1, 5).kind(), LensSpace::Kind::S3);
  EXPECT_EQ(L(0, 1).kind(), LensSpace::Kind::S1xS2);
  EXPECT_EQ(L(7, 10), L(7, 3));
  EXPECT_EQ(L(7, 3), L(7, 5));
  EXPECT_EQ(L(-4, 3), L(4, 1));
  EXPECT_EQ(L(-25, 29).str(), "L(25,6)");
  EXPECT_EQ(L(8, 5).str(), "L(8,5)");
  EXPECT_THROW(L(6, 4), Error);
}

TEST(Lens, HomeomorphismExamples) {
  EXPECT_TRUE(lens_homeomorphic(L(7, 3), L(7, 5)));
  EXPECT_TRUE(lens_homeomorphic(L(4, 5), L(4, -7)));  // (p,q) = (2,3): L(p^2, pq - 1) vs L(p^2, -pq - 1)
  EXPECT_FALSE(lens_homeomorphic(L(7, 3), L(5, 3)));
  EXPECT_FALSE(lens_homeomorphic(L(5, 1), L(5, 2)));
  EXPECT_FALSE(lens_homeomorphic(L(5, 1), L(5, 4)));
  EXPECT_TRUE(lens_homeomorphic(L(5, 1), L(5, 4), Orientation::Either));
  EXPECT_TRUE(lens_homeomorphic(L(5, 1), L(-5, 1), Orientation::Either));
}

TEST(Lens, HomeomorphismMatchesUnitSearch) {
  for (long n = 2; n <= 40; ++n)
    for (long a = 1; a < n; ++a)
      for (long b = 1; b < n; ++b) {
        if (std::gcd(a, n) != 1 || std::gcd(b, n) != 1) continue;
        EXPECT_EQ(lens_homeomorphic(L(n, a), L(n, b)), oracle::lens_equiv(n, a, b, false)) << n << " " << a << " " << b;
        EXPECT_EQ(lens_homeomorphic(L(n, a), L(n, b), Orientation::Either), oracle::lens_equiv(n, a, b, true));
        // L(-n, a) is L(n, -a)
        EXPECT_EQ(lens_homeomorphic(L(-n, a), L(n, b)), oracle::lens_equiv(n, n - a, b, false));
      }
}

TEST(Lens, ConnectedSumDropsSpheres) {
  ThreeManifold m({L(1, 0), L(4, 1), L(1, 3)});
  EXPECT_EQ(m.summands().size(), 1u);
  EXPECT_TRUE(ThreeManifold({L(1, 0)}).is_s3());
  EXPECT_EQ(m.connect(ThreeManifold({L(0, 1)})).s1xs2_count(), 1u);
  EXPECT_TRUE(manifolds_match(ThreeManifold({L(8, 5), L(7, 3)}), ThreeManifold({L(7, 5), L(8, 5)})));
  EXPECT_FALSE(manifolds_match(ThreeManifold({L(8, 5)}), ThreeManifold({L(8, 5), L(7, 3)})));
}

TEST(Lens, BoundaryBpq) {
  EXPECT_EQ(boundary_Bpq(2, 1), L(4, 1));
  EXPECT_EQ(boundary_Bpq(3, 1), L(9, 2));
  for (long q = -5; q <= 5; ++q) EXPECT_EQ(boundary_Bpq(1, q).kind(), LensSpace::Kind::S3);
  EXPECT_THROW(boundary_Bpq(2, 4), Error);
  EXPECT_THROW(boundary_Bpq(0, 1), Error);
}

TEST(Lens, TorusKnotClassification) {
  KnotClass a = classify_torus_knot({5, -8, 3, 1});
  EXPECT_EQ(a.kind(), KnotKind::Negative);
  EXPECT_FALSE(a.trivial);
  // the (1,2,5) knot: slope -1 sits on the positive side; |q| = 1 also makes it trivial
  KnotClass b = classify_torus_knot({-1, 1, 25, 29});
  EXPECT_EQ(b.sign, KnotSign::Positive);
  EXPECT_TRUE(b.trivial);
  EXPECT_EQ(classify_torus_knot({1, 1, 3, 1}).kind(), KnotKind::Trivial);
  EXPECT_THROW(classify_torus_knot({1, -3, 3, 1}), Error);  // slope -3 is the ambient slope
  EXPECT_THROW(classify_torus_knot({1, 0, 3, 1}), Error);
}

TEST(Lens, MeridianSlopeExamples) {
  EXPECT_EQ(lens_from_meridian_slopes(Slope(-8, 5), Slope(0, 1)), L(8, 5));
  EXPECT_EQ(lens_from_meridian_slopes(Slope(-3, 1), Slope(-8, 5)), L(7, 3));
  EXPECT_EQ(lens_from_meridian_slopes(Slope(2, 3), Slope(2, 3)).kind(), LensSpace::Kind::S1xS2);
  // adjacent meridians give S^3
  EXPECT_EQ(lens_from_meridian_slopes(Slope(-3, 2), Slope(-1, 1)).kind(), LensSpace::Kind::S3);
}

TEST(Lens, MeridianSlopeOrderMatchesFareyDistance) {
  // |m1 . m2| is the order of the glued lens space
  for (const auto& f : oracle::window(-3, 3, 7))
    for (const auto& g : oracle::window(-3, 3, 5)) {
      if (f == g) continue;
      Slope a(f.n, f.d), b(g.n, g.d);
      LensSpace l = lens_from_meridian_slopes(a, b);
      Int k = abs(Int(farey_mult(a, b)));
      if (k == 1) EXPECT_EQ(l.kind(), LensSpace::Kind::S3);
      else EXPECT_EQ(l.order(), k);
    }
}

TEST(Lens, SurgeryExample) {
  ThreeManifold r = nonloose_surgery_result({5, -8, 3, 1});
  ASSERT_EQ(r.summands().size(), 2u);
  EXPECT_EQ(r.summands()[0], L(8, 5));
  EXPECT_EQ(r.summands()[1], L(7, 3));
  EXPECT_TRUE(manifolds_match(r, surgery_closed_formula({5, -8, 3, 1})));
  EXPECT_THROW(nonloose_surgery_result({1, 1, 3, 1}), Error);
}

TEST(Lens, SplittingMatchesClosedFormula) {
  std::size_t checked = 0;
  for (long r = 2; r <= 12; ++r)
    for (long s = 1; s < r; ++s) {
      if (std::gcd(r, s) != 1) continue;
      Slope amb(-r, s);
      for (const auto& f : oracle::window(-r, 0, 7)) {
        Slope sigma(f.n, f.d);
        if (!in_clockwise_arc(sigma, amb, Slope::integer(0))) continue;
        TorusKnot k{sigma.den(), sigma.num(), r, s};
        EXPECT_TRUE(manifolds_match(torus_framing_surgery_splitting(k), surgery_closed_formula(k), Orientation::Either))
            << sigma << " in L(" << r << "," << s << ")";
        ++checked;
      }
    }
  EXPECT_GT(checked, 500u);
}

TEST(Lens, DualKnotSplittingForMarkovTriples) {
  for (const auto& e : enumerate_tree(6)) {
    const auto& m = e.triple;
    QTriple q = derive_q(m);
    TorusKnot k{m.p1() * q.q1 + 1, m.p1() * m.p1(), -m.p3() * m.p3(), m.p3() * q.q3 - 1};
    ThreeManifold want({boundary_Bpq(m.p1(), q.q1), boundary_Bpq(m.p2(), q.q2)});
    EXPECT_TRUE(manifolds_match(torus_framing_surgery_splitting(k), want, Orientation::Either)) << m.str();
  }
}
