#include "extatica/bounds.hpp"

#include "extatica/errors.hpp"

namespace extatica::bounds {

std::string to_string(Verdict verdict) {
  return verdict == Verdict::kConsistent ? "consistent-with-no-first-integral"
                                         : "forces-first-integral";
}

namespace {

Rational choose2(long n) { return Rational(n) * (n - 1) / 2; }

Rational choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(r);
}

void validate(const BoundInput& in) {
  if (in.deg_d < 0 || in.n_invariant < 0 || in.deg_f < 0) {
    throw InvalidInputError("counts and degrees must be non-negative");
  }
  if (in.deg_x < 1) throw InvalidInputError("deg X must be at least 1");
  if (in.h0 < 1) throw InvalidInputError("h0 must be at least 1");
}

BoundReport make_report(std::string formula, Rational lhs, Rational rhs,
                        std::optional<Rational> threshold = std::nullopt) {
  BoundReport r;
  r.formula = std::move(formula);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.holds = r.lhs <= r.rhs;
  r.verdict = r.holds ? Verdict::kConsistent : Verdict::kForcesFirstIntegral;
  r.threshold = std::move(threshold);
  return r;
}

void validate_plane(long d, long k, long n_invariant) {
  if (d < 2) throw InvalidInputError("foliation degree must be at least 2");
  if (k < 1) throw InvalidInputError("curve degree must be at least 1");
  if (n_invariant < 1) {
    throw InvalidInputError("the invariant curve itself must be counted");
  }
}

}  // namespace

BoundReport theorem1_check(const BoundInput& in) {
  validate(in);
  Rational lhs = Rational(in.deg_d) * (in.n_invariant - in.h0);
  Rational rhs = Rational(in.deg_f - in.deg_x) * choose2(in.h0);
  std::optional<Rational> threshold;
  if (in.n_invariant > in.h0) threshold = poincare_degree_bound(in);
  return make_report("theorem1", std::move(lhs), std::move(rhs),
                     std::move(threshold));
}

Rational poincare_degree_bound(const BoundInput& in) {
  validate(in);
  if (in.n_invariant <= in.h0) {
    throw HypothesisNotMetError("the bound needs N > h0 (N = " +
                                std::to_string(in.n_invariant) +
                                ", h0 = " + std::to_string(in.h0) + ")");
  }
  return Rational(in.deg_f - in.deg_x) * choose2(in.h0) /
         Rational(in.n_invariant - in.h0);
}

BoundReport poincare_check(const BoundInput& in) {
  Rational bound = poincare_degree_bound(in);
  return make_report("poin", Rational(in.deg_d), bound, bound);
}

Rational pn_threshold(long d, long k, long n, long n_invariant) {
  if (d < 2) throw InvalidInputError("foliation degree must be at least 2");
  if (k < 1 || n < 1) throw InvalidInputError("k and n must be positive");
  const Rational h0 = choose(n + k, k);
  if (Rational(n_invariant) <= h0) {
    throw HypothesisNotMetError("the threshold needs N > C(n+k, k) = " +
                                h0.get_str());
  }
  const long h = h0.get_num().get_si();
  return Rational(d - 1) * choose2(h) / (Rational(n_invariant) - h0);
}

BoundReport pn_check(long d, long k, long n, long n_invariant) {
  Rational t = pn_threshold(d, k, n, n_invariant);
  return make_report("pn", Rational(k), t, t);
}

Rational genus_rhs(long d, long k, long n_invariant) {
  validate_plane(d, k, n_invariant);
  const Rational kk(k);
  Rational numerator = Rational(d) * (kk * kk * kk + 6 * kk * kk + 11 * kk + 6) -
                       kk * kk * kk - 6 * kk * kk + 13 * kk + 2;
  return numerator / 4 - 2 * Rational(n_invariant);
}

Rational genus_threshold(long d, long k, long n_invariant) {
  return (2 - genus_rhs(d, k, n_invariant)) / 2;
}

BoundReport genus_check(long d, long k, long n_invariant, long genus) {
  return make_report("gen", Rational(2 - 2 * genus),
                     genus_rhs(d, k, n_invariant),
                     genus_threshold(d, k, n_invariant));
}

Rational canonical_term(long k_dot_k, long k_dot_d, long chi_top) {
  return Rational(k_dot_k - 12 * k_dot_d + chi_top) / 6;
}

BoundReport surface_bound(const BoundInput& in) {
  validate(in);
  if (!in.h1 || !in.h0_k_minus_d || !in.k_dot_k || !in.k_dot_d ||
      !in.chi_top || !in.genus) {
    throw InvalidInputError(
        "surface bound needs h1, h0(K-D), K.K, K.D, chi and the genus");
  }
  if (in.deg_d <= 0) throw InvalidInputError("deg D must be positive");
  Rational rhs = Rational(2 * *in.h1) - 2 * *in.h0_k_minus_d +
                 2 * Rational(in.deg_f - in.deg_x) / in.deg_d * choose2(in.h0) +
                 canonical_term(*in.k_dot_k, *in.k_dot_d, *in.chi_top) -
                 2 * Rational(in.n_invariant);
  return make_report("cor", Rational(2 - 2 * *in.genus), std::move(rhs));
}

BoundInput plane_input(long d, long k, long n_invariant, long genus) {
  BoundInput in;
  in.deg_d = k;
  in.h0 = (k + 1) * (k + 2) / 2;
  in.n_invariant = n_invariant;
  in.deg_f = d;
  in.deg_x = 1;
  in.h1 = 0;
  in.h0_k_minus_d = 0;
  in.k_dot_k = 9;
  in.k_dot_d = -3 * k;
  in.chi_top = 3;
  in.genus = genus;
  return in;
}

Rational virtual_genus(long d_dot_d, long d_dot_k) {
  return Rational(d_dot_d - d_dot_k) / 2 + d_dot_k + 1;
}

long virtual_genus_plane(long k) {
  if (k < 1) throw InvalidInputError("curve degree must be at least 1");
  return (k - 1) * (k - 2) / 2;
}

Rational abelian_bound(long d_selfint_n, long n, long n_invariant, long deg_f,
                       long deg_x) {
  if (n < 1 || d_selfint_n < 0) {
    throw InvalidInputError("dimension and self-intersection must be valid");
  }
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
  if (mpz_divisible_p(mpz_class(d_selfint_n).get_mpz_t(),
                      factorial.get_mpz_t()) == 0) {
    throw InvalidInputError("D^n is not divisible by n!");
  }
  const long h0 = mpz_class(mpz_class(d_selfint_n) / factorial).get_si();
  if (h0 < 1) throw InvalidInputError("h0 = D^n/n! must be positive");
  BoundInput in;
  in.h0 = h0;
  in.n_invariant = n_invariant;
  in.deg_f = deg_f;
  in.deg_x = deg_x;
  return poincare_degree_bound(in);
}

BoundReport abelian_check(long deg_d, long d_selfint_n, long n,
                          long n_invariant, long deg_f, long deg_x) {
  Rational bound = abelian_bound(d_selfint_n, n, n_invariant, deg_f, deg_x);
  return make_report("abelian", Rational(deg_d), bound, bound);
}

}  // namespace extatica::bounds
