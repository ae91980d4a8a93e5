#pragma once

#include <optional>
#include <string>

#include "extatica/polynomial.hpp"

namespace extatica::bounds {

/// Numerical data of a foliation, an invariant divisor D and its linear
/// system |D|. Cohomological quantities are supplied by the caller; only the
/// plane helpers below fill them in.
struct BoundInput {
  long deg_d = 0;
  long h0 = 1;
  /// Number of invariant divisors in |D|.
  long n_invariant = 0;
  long deg_f = 0;
  long deg_x = 1;

  // Surface data.
  std::optional<long> h1;
  std::optional<long> h0_k_minus_d;
  std::optional<long> k_dot_k;
  std::optional<long> k_dot_d;
  std::optional<long> chi_top;
  /// Virtual genus of D.
  std::optional<long> genus;
};

enum class Verdict { kConsistent, kForcesFirstIntegral };

std::string to_string(Verdict verdict);

struct BoundReport {
  std::string formula;
  Rational lhs;
  Rational rhs;
  bool holds = true;
  Verdict verdict = Verdict::kConsistent;
  std::optional<Rational> threshold;
};

/// deg(D)*(N - h0) <= (deg F - deg X)*C(h0, 2).
BoundReport theorem1_check(const BoundInput& in);

/// Largest degree of D compatible with no rational first integral,
/// (deg F - deg X)*C(h0, 2)/(N - h0). Requires N > h0.
Rational poincare_degree_bound(const BoundInput& in);

/// deg(D) against poincare_degree_bound.
BoundReport poincare_check(const BoundInput& in);

/// (d-1)*C(C(n+k,k), 2)/(N - C(n+k,k)) for foliations of degree d on P^n.
Rational pn_threshold(long d, long k, long n, long n_invariant);

/// k against pn_threshold; k above it forces a rational first integral.
BoundReport pn_check(long d, long k, long n, long n_invariant);

/// [d(k^3+6k^2+11k+6) - k^3 - 6k^2 + 13k + 2]/4 - 2N.
Rational genus_rhs(long d, long k, long n_invariant);

/// (2 - genus_rhs)/2. An invariant degree-k curve of virtual genus below it
/// forces a first integral of degree <= k.
Rational genus_threshold(long d, long k, long n_invariant);

/// 2 - 2g <= genus_rhs on P^2.
BoundReport genus_check(long d, long k, long n_invariant, long genus);

/// 2 - 2g <= 2h1 - 2h0(K-D) + 2(deg F - deg X)/deg D * C(h0, 2)
///           + (K.K - 12 K.D + chi)/6 - 2N.
BoundReport surface_bound(const BoundInput& in);

/// (K.K - 12 K.D + chi)/6.
Rational canonical_term(long k_dot_k, long k_dot_d, long chi_top);

/// Plane data for a degree-k curve: h0 = C(k+2, 2), h1 = h0(K-D) = 0,
/// K.K = 9, K.D = -3k, chi = 3, deg X = 1.
BoundInput plane_input(long d, long k, long n_invariant, long genus = 0);

/// D.(D-K)/2 + D.K + 1.
Rational virtual_genus(long d_dot_d, long d_dot_k);

/// (k-1)(k-2)/2.
long virtual_genus_plane(long k);

/// Poincare bound on an abelian n-fold where h0 = D^n/n!.
Rational abelian_bound(long d_selfint_n, long n, long n_invariant, long deg_f,
                       long deg_x);

/// deg(D) against abelian_bound.
BoundReport abelian_check(long deg_d, long d_selfint_n, long n,
                          long n_invariant, long deg_f, long deg_x);

}  // namespace extatica::bounds
