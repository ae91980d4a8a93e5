#include "extatica/modular.hpp"

#include <array>
#include <mutex>
#include <utility>

#include "extatica/errors.hpp"

namespace extatica::modular {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw BadPrimeError("element is not invertible modulo p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                              19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kTableSize = 512;

const std::vector<std::uint64_t>& prime_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> primes;
    primes.reserve(kTableSize);
    std::uint64_t candidate = (1ULL << 61U) - 1;
    while (primes.size() < kTableSize) {
      if (is_prime(candidate)) primes.push_back(candidate);
      candidate -= 2;
    }
    return primes;
  }();
  return table;
}

}  // namespace

std::uint64_t table_prime(std::size_t i) {
  const auto& table = prime_table();
  if (i >= table.size()) {
    throw InternalConsistencyError("modular prime table exhausted");
  }
  return table[i];
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t reduce(const mpq_class& q, std::uint64_t p) {
  std::uint64_t den = reduce(q.get_den(), p);
  if (den == 0) throw BadPrimeError("denominator vanishes modulo p");
  std::uint64_t num = reduce(q.get_num(), p);
  return den == 1 ? num : mul_mod(num, inv_mod(den, p), p);
}

std::uint64_t det_mod(std::vector<std::uint64_t>& a, std::size_t n,
                      std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) {
        std::swap(a[k * n + j], a[pivot * n + j]);
      }
      det = det == 0 ? 0 : p - det;
    }
    const std::uint64_t pv = a[k * n + k];
    det = mul_mod(det, pv, p);
    const std::uint64_t inv = inv_mod(pv, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = mul_mod(a[i * n + k], inv, p);
      if (factor == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = sub_mod(a[i * n + j], mul_mod(factor, a[k * n + j], p),
                               p);
      }
    }
  }
  return det;
}

mpz_class symmetric_lift(const mpz_class& r, const mpz_class& m) {
  mpz_class half = m / 2;
  return r > half ? mpz_class(r - m) : r;
}

}  // namespace extatica::modular
