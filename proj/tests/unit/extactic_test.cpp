#include <gtest/gtest.h>

#include "extatica/corpus.hpp"
#include "extatica/errors.hpp"
#include "extatica/extactic.hpp"
#include "helpers.hpp"

namespace extatica {
namespace {

using testing::P;

// Vanishing of the Jacobian of (A/B, H) in two variables.
bool functionally_dependent(const Polynomial& a, const Polynomial& b,
                            const Polynomial& h) {
  const Polynomial rx = partial_derivative(a, 0) * b - a * partial_derivative(b, 0);
  const Polynomial ry = partial_derivative(a, 1) * b - a * partial_derivative(b, 1);
  return (rx * partial_derivative(h, 1) - ry * partial_derivative(h, 0)).is_zero();
}

class ExtacticTest : public ::testing::Test {
 protected:
  RingPtr xy = make_ring({"x", "y"});
  RingPtr xyz = default_ring(3);
};

TEST_F(ExtacticTest, MonomialSystems) {
  auto v = monomial_system(xy, 1, SystemKind::kAffine);
  ASSERT_EQ(v.dimension(), 3u);
  EXPECT_EQ(v.basis()[0], P("1", xy));
  EXPECT_EQ(v.basis()[1], P("x", xy));
  EXPECT_EQ(v.basis()[2], P("y", xy));
  EXPECT_EQ(monomial_system(xy, 2, SystemKind::kAffine).dimension(), 6u);
  auto h = monomial_system(xyz, 2, SystemKind::kHomogeneous);
  std::vector<std::string> names;
  for (const auto& s : h.basis()) names.push_back(s.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
  EXPECT_THROW(monomial_system(xy, 0, SystemKind::kAffine), InvalidInputError);
  EXPECT_THROW(LinearSystem({P("x", xy), P("2*x", xy)}), InvalidInputError);
}

TEST_F(ExtacticTest, JetMatrixRows) {
  VectorField x({P("x", xy), P("2*y", xy)}, FieldMode::kAffine);
  PolyMatrix m = jet_matrix(x, monomial_system(xy, 1, SystemKind::kAffine));
  const char* expected[3][3] = {{"1", "0", "0"}, {"x", "x", "x"}, {"y", "2*y", "4*y"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m(i, j).to_string(), expected[i][j]);
}

TEST_F(ExtacticTest, HomogeneousFieldNeedsHomogeneousSystem) {
  VectorField x({P("x", xy), P("2*y", xy)}, FieldMode::kHomogeneous);
  EXPECT_THROW(jet_matrix(x, monomial_system(xy, 1, SystemKind::kAffine)), ContextError);
}

TEST_F(ExtacticTest, WeightedAndRadialExamples) {
  auto v = monomial_system(xy, 1, SystemKind::kAffine);
  VectorField weighted({P("x", xy), P("2*y", xy)}, FieldMode::kAffine);
  ExtacticReport r = extactic(weighted, v);
  EXPECT_EQ(r.extactic, P("2*x*y", xy));
  EXPECT_FALSE(r.identically_zero);
  EXPECT_EQ(r.degree, 2);

  VectorField radial({P("x", xy), P("y", xy)}, FieldMode::kAffine);
  ExtacticReport z = extactic(radial, v);
  EXPECT_TRUE(z.identically_zero);
  EXPECT_EQ(z.degree, kMinusInfinity);
}

TEST_F(ExtacticTest, DegreeBoundFormula) {
  EXPECT_EQ(extactic_degree_bound(3, 1, 4), 12);
  EXPECT_EQ(extactic_degree_bound(6, 2, 2), 27);
  EXPECT_EQ(extactic_degree_bound(1, 5, 3), 5);
  EXPECT_EQ(extactic_degree_bound(3, 1, 2, 2), 3);
}

TEST_F(ExtacticTest, DividesExtactic) {
  VectorField weighted({P("x", xy), P("2*y", xy)}, FieldMode::kAffine);
  ExtacticReport r = extactic(weighted, monomial_system(xy, 1, SystemKind::kAffine));
  EXPECT_TRUE(divides_extactic(P("x", xy), r));
  EXPECT_FALSE(divides_extactic(P("x + y", xy), r));
  VectorField radial({P("x", xy), P("y", xy)}, FieldMode::kAffine);
  ExtacticReport z = extactic(radial, monomial_system(xy, 1, SystemKind::kAffine));
  EXPECT_THROW(divides_extactic(P("x", xy), z), VacuousQueryError);
}

TEST_F(ExtacticTest, ResourceGuard) {
  VectorField x = corpus::random_field(3, 2, 1, FieldMode::kHomogeneous);
  ExtacticOptions opt;
  opt.max_dimension = 5;
  EXPECT_THROW(extactic(x, monomial_system(x.ring(), 2, SystemKind::kHomogeneous), opt),
               ResourceGuardError);
}

// Kernel of a rational matrix given as rows; test-side Gaussian elimination.
std::vector<std::vector<Rational>> kernel(std::vector<std::vector<Rational>> a,
                                          std::size_t n) {
  std::vector<int> pivot_of(n, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of[c] = static_cast<int>(row++);
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_of[f] >= 0) continue;
    std::vector<Rational> v(n, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of[c] >= 0) v[c] = -a[pivot_of[c]][f];
    out.push_back(v);
  }
  return out;
}

// Invariant conics of a quadratic homogeneous field in three variables,
// found by scanning linear cofactors with small half-integer coefficients
// and solving X(F) = K*F linearly in the six coefficients of F.
std::vector<Polynomial> invariant_conics(const VectorField& x) {
  RingPtr r = x.ring();
  auto basis = monomial_system(r, 2, SystemKind::kHomogeneous).basis();
  auto cubics = monomial_system(r, 3, SystemKind::kHomogeneous).basis();
  std::vector<Polynomial> found;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c) {
        Polynomial k = Rational(a, 2) * P("x", r) + Rational(b, 2) * P("y", r) +
                       Rational(c, 2) * P("z", r);
        std::vector<std::vector<Rational>> rows(cubics.size(),
                                                std::vector<Rational>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j) {
          Polynomial image = apply_derivation(x, basis[j]) - k * basis[j];
          for (const auto& t : image.terms())
            for (std::size_t i = 0; i < cubics.size(); ++i)
              if (cubics[i].leading_term().monomial == t.monomial) rows[i][j] = t.coefficient;
        }
        for (const auto& v : kernel(rows, basis.size())) {
          Polynomial f(r);
          for (std::size_t j = 0; j < basis.size(); ++j) f += v[j] * basis[j];
          if (f.size() > 1) found.push_back(f);
        }
      }
  return found;
}

TEST_F(ExtacticTest, SlvOneConicDividesTheDegreeTwoExtactic) {
  VectorField slv1 = corpus::slv(1).field;
  auto conics = invariant_conics(slv1);
  ASSERT_EQ(conics.size(), 1u);
  const Polynomial& conic = conics.front();
  auto k = check_invariance(slv1, conic);
  ASSERT_TRUE(k);
  EXPECT_EQ(k->cofactor, P("2*z", xyz));
  // The oracle's normalization is arbitrary; compare up to scale.
  const Polynomial expected = P("4*x^2 - 4*x*y + y^2 - 2*y*z", xyz);
  EXPECT_EQ(conic * expected.leading_term().coefficient,
            expected * conic.leading_term().coefficient);

  ExtacticReport r = extactic(slv1, monomial_system(xyz, 2, SystemKind::kHomogeneous));
  ASSERT_FALSE(r.identically_zero);
  EXPECT_EQ(r.degree, 27);
  EXPECT_TRUE(divides_extactic(conic, r));
  for (const char* line : {"x", "y", "z"}) EXPECT_TRUE(divides_extactic(P(line, xyz), r));
}

TEST_F(ExtacticTest, SlvExtacticsDoNotVanish) {
  for (long ell = 1; ell <= 4; ++ell) {
    VectorField f = corpus::slv(ell).field;
    EXPECT_TRUE(extactic_nonzero_witness(
        f, monomial_system(f.ring(), 1, SystemKind::kHomogeneous), 1));
    EXPECT_TRUE(extactic_nonzero_witness(
        f, monomial_system(f.ring(), 2, SystemKind::kHomogeneous), 1));
  }
}

TEST_F(ExtacticTest, FirstIntegralOfRadialField) {
  VectorField radial({P("x", xy), P("y", xy)}, FieldMode::kAffine);
  FirstIntegral fi = extract_first_integral(radial, monomial_system(xy, 1, SystemKind::kAffine));
  ASSERT_EQ(fi.status, FirstIntegralStatus::kFound);
  EXPECT_EQ(fi.rank, 2u);
  const Polynomial& a = *fi.numerator;
  const Polynomial& b = *fi.denominator;
  EXPECT_TRUE((apply_derivation(radial, a) * b - a * apply_derivation(radial, b)).is_zero());
  EXPECT_FALSE((a * b.leading_term().coefficient - b * a.leading_term().coefficient)
                   .is_zero());
}

TEST_F(ExtacticTest, FirstIntegralOfHamiltonian) {
  const Polynomial h = P("x^2 + y^2", xy);
  VectorField x = corpus::hamiltonian(h).field;
  auto v = monomial_system(xy, 2, SystemKind::kAffine);
  EXPECT_TRUE(extactic(x, v).identically_zero);
  FirstIntegral fi = extract_first_integral(x, v);
  ASSERT_EQ(fi.status, FirstIntegralStatus::kFound);
  EXPECT_TRUE(functionally_dependent(*fi.numerator, *fi.denominator, h));
}

TEST_F(ExtacticTest, ExactCramerRouteAgrees) {
  const Polynomial h = P("x^3 - 2*x*y + y^2", xy);
  VectorField x = corpus::hamiltonian(h).field;
  auto v = monomial_system(xy, 3, SystemKind::kAffine);
  FirstIntegralOptions exact;
  exact.sampled_shortcut = false;
  FirstIntegral slow = extract_first_integral(x, v, exact);
  FirstIntegral fast = extract_first_integral(x, v);
  ASSERT_EQ(slow.status, FirstIntegralStatus::kFound);
  ASSERT_EQ(fast.status, FirstIntegralStatus::kFound);
  EXPECT_EQ(slow.rank, fast.rank);
  EXPECT_TRUE(functionally_dependent(*slow.numerator, *slow.denominator, h));
  EXPECT_TRUE(functionally_dependent(*fast.numerator, *fast.denominator, h));
}

TEST_F(ExtacticTest, CertifiedZeroMatchesTheDeterminant) {
  VectorField x = corpus::pencil_field(P("x^2 + y", xy), P("x*y + 1", xy)).field;
  ExtacticOptions opt;
  opt.engine = Engine::kModular;
  opt.cross_check = true;
  ExtacticReport r = extactic(x, monomial_system(xy, 2, SystemKind::kAffine), opt);
  EXPECT_TRUE(r.identically_zero);
  EXPECT_EQ(det_fraction_free(jet_matrix(x, monomial_system(xy, 2, SystemKind::kAffine))),
            Polynomial(xy));
}

TEST_F(ExtacticTest, FirstIntegralRefusesNonzeroExtactic) {
  VectorField weighted({P("x", xy), P("2*y + x^2", xy)}, FieldMode::kAffine);
  FirstIntegral fi = extract_first_integral(weighted, monomial_system(xy, 1, SystemKind::kAffine));
  EXPECT_EQ(fi.status, FirstIntegralStatus::kExtacticNonzero);
  EXPECT_FALSE(fi.numerator);
}

TEST_F(ExtacticTest, EngineNames) {
  EXPECT_EQ(engine_from_string("modular"), Engine::kModular);
  EXPECT_EQ(to_string(Engine::kFractionFree), "fraction-free");
  EXPECT_THROW(engine_from_string("gauss"), InvalidInputError);
}

class ExtacticSymmetryTest : public ::testing::TestWithParam<int> {
 protected:
  VectorField field() const {
    return corpus::random_field(3, 2, static_cast<std::uint64_t>(GetParam()),
                                FieldMode::kHomogeneous);
  }
  LinearSystem system(const VectorField& x) const {
    return monomial_system(x.ring(), 1, SystemKind::kHomogeneous);
  }
};

TEST_P(ExtacticSymmetryTest, RadialInvariance) {
  VectorField x = field();
  Polynomial g = corpus::random_polynomial(x.ring(), 1, true, -5, 5, GetParam() + 50);
  VectorField shifted = x + scale(g, radial_field(x.ring()));
  EXPECT_EQ(extactic(shifted, system(x)).extactic, extactic(x, system(x)).extactic);
}

TEST_P(ExtacticSymmetryTest, ScalingCovariance) {
  VectorField x = field();
  Polynomial h = corpus::random_polynomial(x.ring(), 1, true, -5, 5, GetParam() + 80);
  const auto v = system(x);
  const unsigned c = static_cast<unsigned>(binomial(v.dimension(), 2));
  EXPECT_EQ(extactic(scale(h, x), v).extactic, power(h, c) * extactic(x, v).extactic);
}

TEST_P(ExtacticSymmetryTest, BasisChangeCovariance) {
  VectorField x = field();
  const auto v = system(x);
  const std::size_t m = v.dimension();
  SeededRng rng(static_cast<std::uint64_t>(GetParam()) + 7);
  std::vector<Rational> a(m * m);
  for (auto& e : a) e = static_cast<long>(rng.uniform(-4, 4));
  const Rational det_a = det_rational(a, m);
  if (det_a == 0) GTEST_SKIP() << "singular change of basis";
  std::vector<Polynomial> changed;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial s(x.ring());
    for (std::size_t j = 0; j < m; ++j) s += a[i * m + j] * v.basis()[j];
    changed.push_back(s);
  }
  EXPECT_EQ(extactic(x, LinearSystem(changed)).extactic,
            det_a * extactic(x, v).extactic);
}

TEST_P(ExtacticSymmetryTest, EnginesAgreeOnExtactics) {
  VectorField x = field();
  auto v = monomial_system(x.ring(), 2, SystemKind::kHomogeneous);
  ExtacticOptions ff, mod;
  ff.engine = Engine::kFractionFree;
  mod.engine = Engine::kModular;
  EXPECT_EQ(extactic(x, v, ff).extactic, extactic(x, v, mod).extactic);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ExtacticSymmetryTest, ::testing::Range(1, 9));

}  // namespace
}  // namespace extatica
