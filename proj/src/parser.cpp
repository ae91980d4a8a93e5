#include "extatica/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "extatica/errors.hpp"

namespace extatica {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial expression() {
    Polynomial result = term();
    for (;;) {
      skip_space();
      if (peek() == '+') {
        advance();
        result += term();
      } else if (peek() == '-') {
        advance();
        result -= term();
      } else {
        return result;
      }
    }
  }

  void expect_end() {
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
  }

  bool consume(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  bool at_end() const { return pos_ >= text_.size(); }

 private:
  Polynomial term() {
    Polynomial result = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        advance();
        result *= factor();
      } else if (peek() == '/') {
        advance();
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("division is only allowed by an integer literal");
        }
        Integer d = integer();
        if (d == 0) fail("zero denominator");
        result *= Rational(Integer(1), d);
      } else {
        return result;
      }
    }
  }

  Polynomial factor() {
    skip_space();
    if (peek() == '-') {
      advance();
      return -factor();
    }
    if (peek() == '+') {
      advance();
      return factor();
    }
    Polynomial base = primary();
    for (;;) {
      skip_space();
      if (peek() != '^') return base;
      advance();
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected a non-negative integer exponent");
      }
      Integer e = integer();
      if (e > kMaxExponent) fail("exponent too large");
      base = power(base, static_cast<unsigned>(e.get_ui()));
    }
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial(ring_, Rational(integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t line = line_, column = column_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_')) {
        name += peek();
        advance();
      }
      auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", line, column);
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Parser parser(text, ring);
  Polynomial p = parser.expression();
  parser.expect_end();
  return p;
}

VectorField parse_vector_field(std::string_view text, const RingPtr& ring) {
  Parser parser(text, ring);
  std::vector<Polynomial> comps;
  comps.push_back(parser.expression());
  while (parser.consume(',')) comps.push_back(parser.expression());
  parser.expect_end();
  if (comps.size() != ring->size()) {
    throw ParseError("expected " + std::to_string(ring->size()) +
                         " components, found " + std::to_string(comps.size()),
                     1, 1);
  }
  return VectorField::with_inferred_mode(std::move(comps));
}

VectorField parse_vector_field(std::string_view text, const RingPtr& ring,
                               FieldMode mode) {
  VectorField inferred = parse_vector_field(text, ring);
  try {
    return VectorField(inferred.components(), mode);
  } catch (const ContextError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

RingPtr parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  names.push_back(current);
  try {
    return make_ring(std::move(names));
  } catch (const ContextError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace extatica
