#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace extatica::modular {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t p);

/// Inverse of a modulo p; requires a != 0 mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The i-th prime of the fixed table, in decreasing order starting from
/// 2^61 - 1. The table is generated once and never changes.
std::uint64_t table_prime(std::size_t i);

std::uint64_t reduce(const mpz_class& z, std::uint64_t p);

/// n/d mod p. Throws BadPrimeError when d = 0 mod p.
std::uint64_t reduce(const mpq_class& q, std::uint64_t p);

/// Determinant of a dense n x n matrix over Z/p (row-major, consumed).
std::uint64_t det_mod(std::vector<std::uint64_t>& a, std::size_t n,
                      std::uint64_t p);

/// Symmetric representative of r in (-m/2, m/2].
mpz_class symmetric_lift(const mpz_class& r, const mpz_class& m);

}  // namespace extatica::modular
