#pragma once

#include <string>

#include "extatica/corpus.hpp"
#include "extatica/determinant.hpp"
#include "extatica/parser.hpp"
#include "extatica/random.hpp"

namespace extatica::testing {

inline Polynomial P(const std::string& text, const RingPtr& ring) {
  return parse_polynomial(text, ring);
}

inline PolyMatrix random_matrix(const RingPtr& ring, std::size_t n, int max_degree,
                                std::uint64_t seed) {
  SeededRng rng(seed);
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int d = static_cast<int>(rng.uniform(0, max_degree));
      m(i, j) = corpus::random_polynomial(ring, d, false, -9, 9, rng.next(), 60);
    }
  }
  return m;
}

inline std::vector<Rational> random_rational_point(SeededRng& rng, std::size_t n) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    p.emplace_back(static_cast<long>(rng.uniform(-50, 50)),
                   static_cast<unsigned long>(rng.uniform(1, 7)));
    p.back().canonicalize();
  }
  return p;
}

// Leibniz expansion over permutations; independent of both engines.
inline Polynomial det_by_permutations(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial total(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial t(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t *= m(i, perm[i]);
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace extatica::testing
