#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extatica/determinant.hpp"
#include "extatica/foliation.hpp"
#include "extatica/polynomial.hpp"

namespace extatica {

enum class SystemKind {
  kAffine,       ///< all monomials of degree <= k
  kHomogeneous,  ///< all monomials of degree exactly k
  kCustom,       ///< caller-supplied independent polynomials
};

std::string to_string(SystemKind kind);

/// Ordered basis of a linear system V. Monomial systems list monomials by
/// increasing degree, and by decreasing lexicographic order within a degree.
class LinearSystem {
 public:
  /// Custom basis; throws InvalidInputError unless linearly independent.
  explicit LinearSystem(std::vector<Polynomial> basis);

  const std::vector<Polynomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  SystemKind kind() const { return kind_; }
  /// System degree: k for monomial systems, max basis degree otherwise.
  int degree() const { return degree_; }
  const RingPtr& ring() const { return basis_.front().ring(); }
  /// True when every basis element is homogeneous of the system degree.
  bool is_homogeneous() const;

 private:
  friend LinearSystem monomial_system(const RingPtr&, int, SystemKind);
  LinearSystem(std::vector<Polynomial> basis, SystemKind kind, int degree)
      : basis_(std::move(basis)), kind_(kind), degree_(degree) {}

  std::vector<Polynomial> basis_;
  SystemKind kind_ = SystemKind::kCustom;
  int degree_ = 0;
};

/// C(n, k) for small non-negative arguments.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Complete monomial system of degree k (kind must be affine or homogeneous).
LinearSystem monomial_system(const RingPtr& ring, int k, SystemKind kind);

/// entry(i, j) = X^j(s_i), j = 0..m-1. The 1/j! factors of the Taylor jet are
/// dropped; they rescale columns by nonzero constants only.
PolyMatrix jet_matrix(const VectorField& field, const LinearSystem& system);

enum class Engine { kFractionFree, kModular, kAuto };

std::string to_string(Engine engine);
Engine engine_from_string(const std::string& name);

struct ExtacticOptions {
  Engine engine = Engine::kAuto;
  unsigned jobs = 1;
  /// Largest accepted dimension m.
  std::size_t max_dimension = 21;
  /// Also run the other engine and compare.
  bool cross_check = false;
};

struct ExtacticReport {
  Polynomial extactic;
  bool identically_zero = false;
  /// kMinusInfinity when identically zero.
  int degree = kMinusInfinity;
  int degree_bound = 0;
  int field_degree = 0;
  std::size_t dimension = 0;
  int system_degree = 0;
  Engine engine_used = Engine::kAuto;
};

/// Determinant with the chosen engine. kAuto is fraction-free up to 4x4.
Polynomial determinant(const PolyMatrix& m, Engine engine, unsigned jobs = 1);

ExtacticReport extactic(const VectorField& field, const LinearSystem& system,
                        const ExtacticOptions& options = {});

/// m*k + (d - deg X)*C(m, 2).
long extactic_degree_bound(std::size_t m, int k, int field_degree,
                           int variety_degree = 1);

/// Whether f divides the extactic. Throws VacuousQueryError when the
/// extactic is identically zero.
bool divides_extactic(const Polynomial& f, const ExtacticReport& report);

/// Evaluates the jet matrix at a random integer point and returns true when
/// the determinant there is nonzero, which proves E is not identically zero.
/// A false result proves nothing.
bool extactic_nonzero_witness(const VectorField& field,
                              const LinearSystem& system, std::uint64_t seed,
                              int attempts = 2);

enum class FirstIntegralStatus { kFound, kFailed, kExtacticNonzero };

std::string to_string(FirstIntegralStatus status);

struct FirstIntegral {
  FirstIntegralStatus status = FirstIntegralStatus::kFailed;
  std::optional<Polynomial> numerator;
  std::optional<Polynomial> denominator;
  /// Rank r of the jet matrix; equal to m when the extactic is nonzero.
  std::size_t rank = 0;
  /// Rows of the nonsingular r x r block, in selection order.
  std::vector<std::size_t> rows;
  std::string diagnostic;
};

struct FirstIntegralOptions {
  Engine engine = Engine::kAuto;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed;
  std::size_t max_dimension = 21;
  /// Look for P/Q with P, Q in V from sampled minors before computing the
  /// Cramer minors exactly.
  bool sampled_shortcut = true;
};

/// Rational first integral A/B from the Cramer solution of the rank-r
/// dependency among the jet rows. When the ratio equals P/Q for some P, Q in
/// V, that smaller pair is returned instead of the r x r minors. In every
/// case X(A)*B - A*X(B) = 0 is checked exactly before returning kFound.
FirstIntegral extract_first_integral(const VectorField& field,
                                     const LinearSystem& system,
                                     const FirstIntegralOptions& options = {});

}  // namespace extatica
