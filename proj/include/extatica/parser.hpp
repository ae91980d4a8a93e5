#pragma once

#include <string_view>

#include "extatica/foliation.hpp"
#include "extatica/polynomial.hpp"

namespace extatica {

/// Parses one polynomial over the declared variables.
///
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := factor (('*' factor) | ('/' uint))*
///   factor     := ('+'|'-') factor | primary ('^' uint)*
///   primary    := uint | variable | '(' expression ')'
///
/// Division is accepted only by an integer literal, so `1/2*x` and `y/2`
/// parse while `x/(y)` is a syntax error. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated components, one per ring variable. Without an explicit
/// mode the field is homogeneous when all components are homogeneous of one
/// degree.
VectorField parse_vector_field(std::string_view text, const RingPtr& ring);
VectorField parse_vector_field(std::string_view text, const RingPtr& ring,
                               FieldMode mode);

/// Parses `x,y,z` into a ring.
RingPtr parse_variable_list(std::string_view text);

}  // namespace extatica
