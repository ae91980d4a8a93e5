#include "extatica/foliation.hpp"

#include <algorithm>

#include "extatica/errors.hpp"

namespace extatica {

std::string to_string(FieldMode mode) {
  return mode == FieldMode::kAffine ? "affine" : "homogeneous";
}

namespace {

// Common degree of the nonzero components when all are homogeneous.
std::optional<int> common_homogeneous_degree(
    const std::vector<Polynomial>& components) {
  std::optional<int> degree;
  for (const auto& p : components) {
    if (p.is_zero()) continue;
    DegreeInfo info = degree_info(p);
    if (!info.is_homogeneous) return std::nullopt;
    if (degree && *degree != info.total_degree) return std::nullopt;
    degree = info.total_degree;
  }
  return degree;
}

}  // namespace

VectorField::VectorField(std::vector<Polynomial> components, FieldMode mode)
    : components_(std::move(components)), mode_(mode) {
  if (components_.empty()) {
    throw ContextError("a vector field needs at least one component");
  }
  const RingPtr& r = components_.front().ring();
  if (components_.size() != r->size()) {
    throw ContextError("vector field has " +
                       std::to_string(components_.size()) +
                       " components for " + std::to_string(r->size()) +
                       " variables");
  }
  for (const auto& p : components_) require_same_ring(r, p.ring());
  if (mode_ == FieldMode::kHomogeneous && !is_zero() &&
      !common_homogeneous_degree(components_)) {
    throw ContextError(
        "homogeneous mode requires homogeneous components of one degree");
  }
}

VectorField VectorField::with_inferred_mode(
    std::vector<Polynomial> components) {
  const bool homogeneous = common_homogeneous_degree(components).has_value();
  return VectorField(std::move(components), homogeneous
                                                ? FieldMode::kHomogeneous
                                                : FieldMode::kAffine);
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

int VectorField::max_degree() const {
  int d = kMinusInfinity;
  for (const auto& p : components_) d = std::max(d, p.total_degree());
  return d;
}

std::string VectorField::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].to_string();
  }
  return out;
}

Polynomial apply_derivation(const VectorField& field, const Polynomial& f) {
  require_same_ring(field.ring(), f.ring());
  Polynomial result(f.ring());
  for (std::size_t i = 0; i < field.dimension(); ++i) {
    if (field[i].is_zero()) continue;
    Polynomial d = partial_derivative(f, i);
    if (d.is_zero()) continue;
    result += field[i] * d;
  }
  return result;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.dimension() != b.dimension()) {
    throw ContextError("vector fields of different dimension");
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < a.dimension(); ++i) out.push_back(a[i] + b[i]);
  if (a.mode() == FieldMode::kHomogeneous &&
      b.mode() == FieldMode::kHomogeneous) {
    return VectorField::with_inferred_mode(std::move(out));
  }
  return VectorField(std::move(out), FieldMode::kAffine);
}

VectorField scale(const Polynomial& h, const VectorField& field) {
  std::vector<Polynomial> out;
  for (const auto& p : field.components()) out.push_back(h * p);
  if (field.mode() == FieldMode::kHomogeneous) {
    return VectorField::with_inferred_mode(std::move(out));
  }
  return VectorField(std::move(out), FieldMode::kAffine);
}

FoliationDegree foliation_degree(const VectorField& field) {
  if (field.is_zero()) {
    throw DegenerateFieldError("the zero vector field defines no foliation");
  }
  FoliationDegree out;
  out.max_component_degree = field.max_degree();
  out.degree = out.max_component_degree;
  if (field.mode() == FieldMode::kAffine) {
    const int top = out.max_component_degree;
    std::vector<Polynomial> tops;
    for (const auto& p : field.components()) tops.push_back(p.homogeneous_part(top));
    // Radial multiple: T_i = x_i * g for a single g.
    std::optional<Polynomial> g;
    for (std::size_t i = 0; i < tops.size() && !g; ++i) {
      if (tops[i].is_zero()) continue;
      g = divide_exact(tops[i], Polynomial::variable(field.ring(), i));
      if (!g) break;
    }
    if (g) {
      bool radial = true;
      for (std::size_t i = 0; i < tops.size() && radial; ++i) {
        radial = tops[i] == Polynomial::variable(field.ring(), i) * *g;
      }
      if (radial) {
        out.radial_top = true;
        out.degree = top - 1;
      }
    }
  }
  out.degenerate = out.degree < 1;
  return out;
}

CotangentDegree cotangent_degree(int foliation_degree, int variety_degree) {
  CotangentDegree out;
  out.degree = foliation_degree - variety_degree;
  out.non_positive = out.degree <= 0;
  return out;
}

std::optional<Cofactor> check_invariance(const VectorField& field,
                                         const Polynomial& f) {
  require_same_ring(field.ring(), f.ring());
  if (f.is_constant()) {
    throw InvalidDivisorError("invariance needs a non-constant polynomial");
  }
  if (field.mode() == FieldMode::kHomogeneous &&
      !degree_info(f).is_homogeneous) {
    throw InvalidDivisorError(
        "homogeneous fields only act on homogeneous curves");
  }
  Polynomial xf = apply_derivation(field, f);
  auto k = divide_exact(xf, f);
  if (!k) return std::nullopt;
  if (!(xf - *k * f).is_zero()) {
    throw InternalConsistencyError("cofactor failed re-verification");
  }
  if (field.mode() == FieldMode::kHomogeneous && !k->is_zero() &&
      k->total_degree() != field.max_degree() - 1) {
    throw InternalConsistencyError("cofactor has the wrong degree");
  }
  return Cofactor{std::move(*k)};
}

VectorField radial_field(const RingPtr& ring) {
  if (ring->size() < 2) {
    throw ContextError("the radial field needs at least two variables");
  }
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    comps.push_back(Polynomial::variable(ring, i));
  }
  return VectorField(std::move(comps), FieldMode::kHomogeneous);
}

VectorField radial_field(std::size_t n) { return radial_field(default_ring(n)); }

}  // namespace extatica
