#include <gtest/gtest.h>

#include "extatica/determinant.hpp"
#include "extatica/errors.hpp"
#include "helpers.hpp"

namespace extatica {
namespace {

using testing::P;

TEST(DeterminantTest, SmallExamples) {
  RingPtr r = make_ring({"x", "y"});
  PolyMatrix id(r, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = Polynomial(r, 1);
  EXPECT_EQ(det_fraction_free(id), Polynomial(r, 1));
  EXPECT_EQ(det_modular(id), Polynomial(r, 1));

  PolyMatrix m(r, 2, 2);
  m(0, 0) = P("x", r);
  m(0, 1) = P("y", r);
  m(1, 0) = P("1", r);
  m(1, 1) = P("1", r);
  EXPECT_EQ(det_fraction_free(m), P("x - y", r));
  EXPECT_EQ(det_modular(m), P("x - y", r));
}

TEST(DeterminantTest, ZeroRowGivesZero) {
  RingPtr r = make_ring({"x", "y"});
  PolyMatrix m = testing::random_matrix(r, 4, 2, 3);
  for (std::size_t j = 0; j < 4; ++j) m(2, j) = Polynomial(r);
  EXPECT_TRUE(det_fraction_free(m).is_zero());
  EXPECT_TRUE(det_modular(m).is_zero());
}

TEST(DeterminantTest, RationalEntries) {
  RingPtr r = make_ring({"x", "y"});
  PolyMatrix m(r, 2, 2);
  m(0, 0) = P("1/2*x", r);
  m(0, 1) = P("1/3", r);
  m(1, 0) = P("y", r);
  m(1, 1) = P("5/7*x + y", r);
  const Polynomial expected = P("5/14*x^2 + 1/2*x*y - 1/3*y", r);
  EXPECT_EQ(det_fraction_free(m), expected);
  EXPECT_EQ(det_modular(m), expected);
}

TEST(DeterminantTest, NonSquareThrows) {
  RingPtr r = make_ring({"x"});
  PolyMatrix m(r, 2, 3);
  EXPECT_THROW(det_fraction_free(m), Error);
  EXPECT_THROW(det_modular(m), Error);
}

class DeterminantEngineTest : public ::testing::TestWithParam<int> {};

TEST_P(DeterminantEngineTest, EnginesMatchPermutationExpansion) {
  const int seed = GetParam();
  RingPtr r = make_ring({"x", "y"});
  const std::size_t n = 1 + static_cast<std::size_t>(seed % 5);
  PolyMatrix m = testing::random_matrix(r, n, 2, static_cast<std::uint64_t>(seed));
  const Polynomial oracle = testing::det_by_permutations(m);
  EXPECT_EQ(det_fraction_free(m), oracle);
  EXPECT_EQ(det_modular(m), oracle);
}

TEST_P(DeterminantEngineTest, JobsDoNotChangeTheResult) {
  const int seed = GetParam();
  RingPtr r = default_ring(3);
  PolyMatrix m = testing::random_matrix(r, 4, 2, static_cast<std::uint64_t>(seed) + 99);
  EXPECT_EQ(det_modular(m, {1}).to_string(), det_modular(m, {3}).to_string());
}

INSTANTIATE_TEST_SUITE_P(Seeds, DeterminantEngineTest, ::testing::Range(1, 16));

TEST(DeterminantTest, HomogeneousMatrixThroughModularEngine) {
  // Graded matrices go through the dehomogenized path.
  RingPtr r = default_ring(3);
  PolyMatrix m(r, 3, 3);
  const char* entries[] = {"x", "y", "z", "x^2", "x*y", "z^2", "x^3", "y^3", "x*y*z"};
  for (std::size_t i = 0; i < 9; ++i) {
    // Row i has degree i+1 so that entry degrees are a_i + b_j with b = 0.
    m(i / 3, i % 3) = P(entries[i], r);
  }
  EXPECT_EQ(det_modular(m), testing::det_by_permutations(m));
}

}  // namespace
}  // namespace extatica
