#include <gtest/gtest.h>

#include "extatica/bounds.hpp"
#include "extatica/errors.hpp"
#include "extatica/random.hpp"

namespace extatica::bounds {
namespace {

BoundInput input(long deg_d, long h0, long n, long deg_f, long deg_x = 1) {
  BoundInput in;
  in.deg_d = deg_d;
  in.h0 = h0;
  in.n_invariant = n;
  in.deg_f = deg_f;
  in.deg_x = deg_x;
  return in;
}

TEST(BoundsTest, TheoremOneExamples) {
  BoundReport r = theorem1_check(input(2, 6, 7, 2));
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 15);
  EXPECT_EQ(r.verdict, Verdict::kConsistent);
  EXPECT_EQ(theorem1_check(input(9, 6, 6, 2)).lhs, 0);
  EXPECT_TRUE(theorem1_check(input(9, 6, 6, 2)).holds);
  BoundReport v = theorem1_check(input(100, 3, 5, 2));
  EXPECT_EQ(v.lhs, 200);
  EXPECT_EQ(v.rhs, 3);
  EXPECT_EQ(v.verdict, Verdict::kForcesFirstIntegral);
  EXPECT_EQ(to_string(v.verdict), "forces-first-integral");
}

TEST(BoundsTest, PoincareDegreeBound) {
  EXPECT_EQ(poincare_degree_bound(input(1, 3, 4, 2)), 3);
  EXPECT_EQ(poincare_degree_bound(input(1, 6, 21, 2)), 1);
  EXPECT_THROW(poincare_degree_bound(input(1, 6, 6, 2)), HypothesisNotMetError);
}

TEST(BoundsTest, ProjectiveSpaceThreshold) {
  EXPECT_EQ(pn_threshold(2, 1, 2, 4), 3);
  EXPECT_EQ(pn_threshold(2, 2, 2, 7), 15);
  EXPECT_EQ(pn_threshold(3, 1, 3, 5), 12);
  EXPECT_THROW(pn_threshold(2, 2, 2, 6), HypothesisNotMetError);
  EXPECT_EQ(pn_check(2, 2, 2, 7).verdict, Verdict::kConsistent);
  EXPECT_EQ(pn_check(2, 16, 2, 200).verdict, Verdict::kConsistent);
}

TEST(BoundsTest, GenusFormula) {
  EXPECT_EQ(genus_rhs(2, 2, 1), 27);
  EXPECT_EQ(genus_rhs(2, 1, 1), 12);
  EXPECT_EQ(genus_threshold(2, 2, 1), Rational(-25, 2));
  EXPECT_EQ(genus_rhs(2, 2, 20), -11);
  EXPECT_EQ(genus_threshold(2, 2, 20), Rational(13, 2));
  EXPECT_THROW(genus_rhs(1, 2, 1), InvalidInputError);
}

TEST(BoundsTest, CanonicalTermOnThePlane) {
  // K.K = 9, K.D = -3k, chi = 3 gives 6k + 2.
  for (long k = 1; k <= 10; ++k) EXPECT_EQ(canonical_term(9, -3 * k, 3), 6 * k + 2);
}

TEST(BoundsTest, SurfaceBoundOnThePlane) {
  BoundReport r = surface_bound(plane_input(2, 2, 1, 0));
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 27);
  EXPECT_TRUE(r.holds);
  BoundInput missing = input(2, 6, 1, 2);
  EXPECT_THROW(surface_bound(missing), InvalidInputError);
}

TEST(BoundsTest, GenusFormulaIsThePlaneSurfaceBound) {
  for (long d = 2; d <= 6; ++d)
    for (long k = 1; k <= 10; ++k)
      for (long n = 1; n <= 50; ++n)
        ASSERT_EQ(genus_rhs(d, k, n), surface_bound(plane_input(d, k, n)).rhs)
            << d << " " << k << " " << n;
}

TEST(BoundsTest, VirtualGenus) {
  EXPECT_EQ(virtual_genus_plane(1), 0);
  EXPECT_EQ(virtual_genus_plane(2), 0);
  EXPECT_EQ(virtual_genus_plane(3), 1);
  EXPECT_EQ(virtual_genus_plane(4), 3);
  // D.D = k^2, D.K = -3k on the plane.
  for (long k = 1; k <= 10; ++k) {
    EXPECT_EQ(virtual_genus(k * k, -3 * k), virtual_genus_plane(k));
  }
}

TEST(BoundsTest, AbelianBound) {
  EXPECT_EQ(abelian_bound(4, 2, 3, 2, 1), 1);
  EXPECT_EQ(abelian_bound(6, 2, 4, 3, 1), 6);
  EXPECT_THROW(abelian_bound(4, 2, 2, 2, 1), HypothesisNotMetError);
  EXPECT_THROW(abelian_bound(5, 2, 4, 2, 1), InvalidInputError);
}

TEST(BoundsTest, SurfaceBoundDecreasesWithGenus) {
  Rational previous = surface_bound(plane_input(3, 3, 5, 0)).lhs;
  for (long g = 1; g < 20; ++g) {
    BoundReport r = surface_bound(plane_input(3, 3, 5, g));
    EXPECT_LT(r.lhs, previous);
    previous = r.lhs;
  }
}

TEST(BoundsTest, VerdictFlipsAtThePoincareBound) {
  SeededRng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const long h0 = static_cast<long>(rng.uniform(1, 30));
    const long n = h0 + static_cast<long>(rng.uniform(1, 40));
    const long deg_x = static_cast<long>(rng.uniform(1, 3));
    const long deg_f = deg_x + static_cast<long>(rng.uniform(0, 6));
    const Rational bound = poincare_degree_bound(input(1, h0, n, deg_f, deg_x));
    // Binary search for the least degree whose verdict flips.
    long lo = 0, hi = 1;
    while (theorem1_check(input(hi, h0, n, deg_f, deg_x)).holds) hi *= 2;
    while (hi - lo > 1) {
      const long mid = (lo + hi) / 2;
      (theorem1_check(input(mid, h0, n, deg_f, deg_x)).holds ? lo : hi) = mid;
    }
    EXPECT_LE(Rational(lo), bound);
    EXPECT_GT(Rational(hi), bound);
  }
}

}  // namespace
}  // namespace extatica::bounds
