#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extatica/foliation.hpp"

namespace extatica::corpus {

/// How a fact is backed: checked by a computation at construction, or
/// quoted from the literature.
enum class Backing { kVerified, kCited };

std::string to_string(Backing backing);

struct Fact {
  /// invariant | first-integral | no-first-integral | degree |
  /// algebraic-solution
  std::string kind;
  std::string statement;
  Backing backing = Backing::kVerified;
  /// Oracle for verified facts, citation for cited ones.
  std::string source;
};

struct CorpusEntry {
  std::string name;
  VectorField field;
  std::vector<Fact> facts;
  std::string provenance;
};

/// Moulin Ollagnier's Lotka-Volterra family on three homogeneous variables:
/// x(y/2 + z), y(2z + x), z(y - (2l+1)/(2l-1) x).
CorpusEntry slv(long ell);

/// X_H = (-dH/dy, dH/dx) on two variables; H is a polynomial first integral.
CorpusEntry hamiltonian(const Polynomial& h);

/// X = (f g_y - g f_y, g f_x - f g_x) on two variables, tangent to the
/// pencil spanned by f and g; f/g is a rational first integral.
CorpusEntry pencil_field(const Polynomial& f, const Polynomial& g);

/// Homogeneous field with P_i = x_i * q_i, q_i random of degree d-1 with
/// coefficients in [-5, 5]. Every coordinate hyperplane is invariant.
CorpusEntry planted_lines_field(std::size_t n, int d, std::uint64_t seed);

/// Dense random field of degree d, coefficients in [-9, 9], no zero
/// component. Homogeneous fields use degree-d forms, affine fields use all
/// monomials of degree <= d.
VectorField random_field(std::size_t n, int d, std::uint64_t seed,
                         FieldMode mode = FieldMode::kAffine);

/// Random polynomial of degree <= d (or exactly-d form) on `ring` with
/// coefficients in [lo, hi]; `density` is the percentage of kept monomials.
Polynomial random_polynomial(const RingPtr& ring, int d, bool homogeneous,
                             long lo, long hi, std::uint64_t seed,
                             int density = 100);

/// Entry lookup by a `name:argument` spec such as `slv:1`.
CorpusEntry by_spec(const std::string& spec);

}  // namespace extatica::corpus
