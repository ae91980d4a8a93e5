#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extatica/polynomial.hpp"

namespace extatica {

enum class FieldMode { kAffine, kHomogeneous };

std::string to_string(FieldMode mode);

/// Polynomial derivation X = sum_i P_i d/dx_i.
///
/// Affine fields live on C^n. Homogeneous fields present a foliation on
/// P^(n-1); all nonzero components then share one degree d.
class VectorField {
 public:
  VectorField(std::vector<Polynomial> components, FieldMode mode);

  /// Homogeneous when every component is homogeneous of one common degree,
  /// affine otherwise.
  static VectorField with_inferred_mode(std::vector<Polynomial> components);

  const RingPtr& ring() const { return components_.front().ring(); }
  std::size_t dimension() const { return components_.size(); }
  FieldMode mode() const { return mode_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  bool is_zero() const;
  /// Largest component degree (kMinusInfinity for the zero field).
  int max_degree() const;

  /// Comma-separated canonical component list.
  std::string to_string() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  std::vector<Polynomial> components_;
  FieldMode mode_;
};

/// X(f) = sum_i P_i df/dx_i.
Polynomial apply_derivation(const VectorField& field, const Polynomial& f);

VectorField operator+(const VectorField& a, const VectorField& b);
/// h*X, keeping the mode when the product is still homogeneous.
VectorField scale(const Polynomial& h, const VectorField& field);

struct FoliationDegree {
  /// Projective degree d.
  int degree = 0;
  int max_component_degree = 0;
  /// Affine only: the top-degree part is g*R for the radial field R.
  bool radial_top = false;
  /// degree < 1: the projective completion is a degree-0 foliation.
  bool degenerate = false;
};

/// Homogeneous: the common component degree. Affine: the max component
/// degree, minus one when the top part is a multiple of the radial field
/// (the completion then leaves the line at infinity non-invariant).
FoliationDegree foliation_degree(const VectorField& field);

struct CotangentDegree {
  int degree = 0;
  bool non_positive = false;
};

/// deg(T_F^*) = deg(F) - deg(X).
CotangentDegree cotangent_degree(int foliation_degree, int variety_degree);

/// Certified relation X(f) = K*f.
struct Cofactor {
  Polynomial cofactor;
};

/// Cofactor of f when f = 0 is invariant, nullopt otherwise. The returned
/// cofactor has been re-multiplied and checked.
std::optional<Cofactor> check_invariance(const VectorField& field,
                                         const Polynomial& f);

/// R = sum_i x_i d/dx_i in homogeneous mode.
VectorField radial_field(const RingPtr& ring);
VectorField radial_field(std::size_t n);

}  // namespace extatica
