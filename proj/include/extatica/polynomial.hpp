#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace extatica {

/// Exact rational coefficient. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Total degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Ordered list of variable names shared by a family of polynomials.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// x, y, z, w for up to four variables, x0, x1, ... beyond that.
RingPtr default_ring(std::size_t nvars);

/// Structural equality; two rings with the same names are interchangeable.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws ContextError unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 6>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(Exponents exponents);

  static Monomial variable(std::size_t nvars, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t size() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  std::uint32_t degree() const { return degree_; }
  const Exponents& exponents() const { return exponents_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires divides(other) == true on `divisor`.
  Monomial divided_by(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  /// Graded lexicographic: total degree first, then lexicographic with the
  /// first ring variable most significant.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

 private:
  Exponents exponents_;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

struct DegreeInfo {
  int total_degree = kMinusInfinity;
  bool is_homogeneous = true;

  bool is_zero() const { return total_degree == kMinusInfinity; }
  friend bool operator==(const DegreeInfo&, const DegreeInfo&) = default;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are stored in strictly decreasing graded-lex order and never carry a
/// zero coefficient, so structural equality is mathematical equality and the
/// text form is canonical.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, const Rational& constant);

  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial monomial,
                             const Rational& coefficient = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero when absent).
  Rational constant_term() const;
  /// Greatest term in graded-lex order. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }

  int total_degree() const;
  /// Largest exponent of one variable; kMinusInfinity for zero.
  int degree_in(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    return a *= s;
  }

  /// Same terms and same variable names.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Part of exact degree `degree` (zero if none).
  Polynomial homogeneous_part(int degree) const;

  /// Same polynomial viewed in another ring with the same variable count.
  Polynomial with_ring(RingPtr ring) const;

  /// Canonical text form, e.g. `1/2*x*y + x*z`.
  std::string to_string() const;

 private:
  friend class PolynomialBuilder;
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms, bool /*tag*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class RingOp { kAdd, kSub, kMul };

/// f op g with a context check.
Polynomial ring_arithmetic(const Polynomial& f, const Polynomial& g, RingOp op);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// q with f = q*g, or nullopt when g does not divide f.
/// Throws DivisionByZeroError when g == 0.
std::optional<Polynomial> divide_exact(const Polynomial& f,
                                       const Polynomial& g);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);

/// Value modulo the prime p; each coefficient n/d maps to n*d^-1 mod p.
/// Throws BadPrimeError when some denominator vanishes mod p.
std::uint64_t evaluate_mod(const Polynomial& f,
                           std::span<const std::uint64_t> point,
                           std::uint64_t p);

DegreeInfo degree_info(const Polynomial& f);

Polynomial power(const Polynomial& f, unsigned exponent);

/// Appends `new_var` to the ring and pads every term up to `target_degree`.
Polynomial homogenize(const Polynomial& f, std::string_view new_var,
                      int target_degree);

/// Substitutes `value` for variable `var` and removes it from the ring.
Polynomial dehomogenize(const Polynomial& f, std::size_t var,
                        const Rational& value = 1);

/// Least common multiple of all coefficient denominators (1 for zero).
Integer denominator_lcm(const Polynomial& f);

std::string rational_to_string(const Rational& q);

}  // namespace extatica
