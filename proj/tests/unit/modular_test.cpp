#include <gtest/gtest.h>

#include "extatica/determinant.hpp"
#include "extatica/errors.hpp"
#include "extatica/modular.hpp"
#include "extatica/random.hpp"

namespace extatica::modular {
namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

TEST(ModularTest, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime((1ULL << 61) - 1));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST(ModularTest, PrimeTableIsDescendingBelowTwoToThe61) {
  std::uint64_t previous = 1ULL << 61;
  for (std::size_t i = 0; i < 20; ++i) {
    const std::uint64_t p = table_prime(i);
    EXPECT_LT(p, previous);
    EXPECT_TRUE(is_prime(p));
    previous = p;
  }
  EXPECT_EQ(table_prime(0), (1ULL << 61) - 1);
}

TEST(ModularTest, InverseAndPower) {
  const std::uint64_t p = table_prime(3);
  SeededRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t a = rng.next() % (p - 1) + 1;
    EXPECT_EQ(mul_mod(a, inv_mod(a, p), p), 1u);
    EXPECT_EQ(pow_mod(a, p - 1, p), 1u);  // Fermat
  }
  EXPECT_THROW(inv_mod(0, p), BadPrimeError);
}

TEST(ModularTest, ReduceRationals) {
  const std::uint64_t p = 101;
  EXPECT_EQ(reduce(mpq_class(1, 2), p), 51u);
  EXPECT_EQ(reduce(mpz_class(-1), p), 100u);
  EXPECT_THROW(reduce(mpq_class(1, 101), p), BadPrimeError);
}

TEST(ModularTest, SymmetricLift) {
  EXPECT_EQ(symmetric_lift(mpz_class(3), mpz_class(7)), 3);
  EXPECT_EQ(symmetric_lift(mpz_class(5), mpz_class(7)), -2);
}

TEST(ModularTest, DeterminantModPMatchesExactRational) {
  SeededRng rng(5);
  const std::uint64_t p = table_prime(0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<Rational> a(n * n);
    std::vector<std::uint64_t> am(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      a[i] = static_cast<long>(rng.uniform(-20, 20));
      am[i] = reduce(a[i], p);
    }
    const Rational exact = det_rational(a, n);
    EXPECT_EQ(det_mod(am, n, p), reduce(exact, p));
  }
}

}  // namespace
}  // namespace extatica::modular
