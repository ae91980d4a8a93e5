#include "extatica/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <utility>

#include "extatica/errors.hpp"
#include "extatica/modular.hpp"

namespace extatica {

// ---------------------------------------------------------------------------
// Ring

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) {
      throw ContextError("invalid variable name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw ContextError("duplicate variable name '" + names_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

RingPtr default_ring(std::size_t nvars) {
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) {
    names.push_back(nvars <= 4 ? std::string(kShort[i])
                               : "x" + std::to_string(i));
  }
  return make_ring(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw ContextError("mismatched ring contexts");
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Exponents exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint32_t power) {
  Monomial m(nvars);
  m.exponents_.at(index) = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.exponents_.resize(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    m.exponents_[i] = exponents_[i] + other.exponents_[i];
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial m;
  m.exponents_.resize(exponents_.size());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    m.exponents_[i] = exponents_[i] - divisor.exponents_[i];
  }
  m.degree_ = degree_ - divisor.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if (a.exponents_[i] != b.exponents_[i]) {
      return a.exponents_[i] <=> b.exponents_[i];
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

class PolynomialBuilder {
 public:
  static Polynomial sorted(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms), true);
  }
};

namespace {

bool term_greater(const Term& a, const Term& b) {
  return a.monomial > b.monomial;
}

// Merges a + sign*b where both are sorted descending.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
  }
  return out;
}

Monomial::Exponents max_exponents(const std::vector<Term>& terms,
                                  std::size_t nvars) {
  Monomial::Exponents e(nvars, 0);
  for (const auto& t : terms) {
    for (std::size_t v = 0; v < nvars; ++v) {
      e[v] = std::max(e[v], t.monomial[v]);
    }
  }
  return e;
}

std::vector<Term> multiply_dense(const std::vector<Term>& a,
                                 const std::vector<Term>& b,
                                 const Monomial::Exponents& bound,
                                 std::size_t slots) {
  const std::size_t nvars = bound.size();
  std::vector<std::size_t> stride(nvars, 1);
  for (std::size_t v = nvars; v-- > 1;) {
    stride[v - 1] = stride[v] * (bound[v] + 1);
  }
  auto index_of = [&](const Monomial& m) {
    std::size_t idx = 0;
    for (std::size_t v = 0; v < nvars; ++v) idx += m[v] * stride[v];
    return idx;
  };
  std::vector<std::size_t> ia(a.size()), ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ia[i] = index_of(a[i].monomial);
  for (std::size_t j = 0; j < b.size(); ++j) ib[j] = index_of(b[j].monomial);

  std::vector<mpq_class> acc(slots);
  std::vector<char> touched(slots, 0);
  std::vector<std::size_t> used;
  mpq_class product;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t idx = ia[i] + ib[j];
      mpq_mul(product.get_mpq_t(), a[i].coefficient.get_mpq_t(),
              b[j].coefficient.get_mpq_t());
      if (!touched[idx]) {
        touched[idx] = 1;
        used.push_back(idx);
        mpq_swap(acc[idx].get_mpq_t(), product.get_mpq_t());
      } else {
        mpq_add(acc[idx].get_mpq_t(), acc[idx].get_mpq_t(),
                product.get_mpq_t());
      }
    }
  }
  std::vector<Term> out;
  out.reserve(used.size());
  for (std::size_t idx : used) {
    if (acc[idx] == 0) continue;
    Monomial::Exponents e(nvars, 0);
    std::size_t rest = idx;
    for (std::size_t v = 0; v < nvars; ++v) {
      e[v] = static_cast<std::uint32_t>(rest / stride[v]);
      rest %= stride[v];
    }
    out.push_back(Term{Monomial(std::move(e)), std::move(acc[idx])});
  }
  std::sort(out.begin(), out.end(), term_greater);
  return out;
}

std::vector<Term> multiply_sparse(const std::vector<Term>& a,
                                  const std::vector<Term>& b) {
  std::map<Monomial, mpq_class, std::greater<>> acc;
  mpq_class product;
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      mpq_mul(product.get_mpq_t(), ta.coefficient.get_mpq_t(),
              tb.coefficient.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial);
      if (inserted) {
        mpq_swap(it->second.get_mpq_t(), product.get_mpq_t());
      } else {
        it->second += product;
      }
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back(Term{m, std::move(c)});
  }
  return out;
}

std::vector<Term> multiply_terms(const std::vector<Term>& a,
                                 const std::vector<Term>& b,
                                 std::size_t nvars) {
  if (a.empty() || b.empty()) return {};
  Monomial::Exponents ea = max_exponents(a, nvars);
  Monomial::Exponents eb = max_exponents(b, nvars);
  Monomial::Exponents bound(nvars, 0);
  double slots = 1;
  for (std::size_t v = 0; v < nvars; ++v) {
    bound[v] = ea[v] + eb[v];
    slots *= bound[v] + 1.0;
  }
  const double pairs = static_cast<double>(a.size()) * b.size();
  if (slots <= 4 * pairs + 64 && slots < 1e7) {
    return multiply_dense(a, b, bound, static_cast<std::size_t>(slots));
  }
  return multiply_sparse(a, b);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw ContextError("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant)
    : Polynomial(std::move(ring)) {
  if (constant != 0) {
    terms_.push_back(Term{Monomial(ring_->size()), constant});
  }
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) {
    throw ContextError("variable index out of range");
  }
  const std::size_t n = ring->size();
  return monomial(std::move(ring), Monomial::variable(n, index));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial monomial,
                                const Rational& coefficient) {
  if (monomial.size() != ring->size()) {
    throw ContextError("monomial length does not match the ring");
  }
  Polynomial p(std::move(ring));
  if (coefficient != 0) {
    p.terms_.push_back(Term{std::move(monomial), coefficient});
  }
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.monomial.size() != ring->size()) {
      throw ContextError("monomial length does not match the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coefficient == 0; });
  return Polynomial(std::move(ring), std::move(out), true);
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coefficient;
  }
  return 0;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? kMinusInfinity
                        : static_cast<int>(terms_.front().monomial.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  if (var >= ring_->size()) throw ContextError("variable index out of range");
  int d = kMinusInfinity;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial[var]));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = multiply_terms(terms_, other.terms_, ring_->size());
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  return Polynomial(a.ring_, multiply_terms(a.terms_, b.terms_, a.num_vars()),
                    true);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.monomial.degree()) == degree) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::with_ring(RingPtr ring) const {
  if (ring->size() != ring_->size()) {
    throw ContextError("ring change requires the same variable count");
  }
  return Polynomial(std::move(ring), terms_, true);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational magnitude = abs(t.coefficient);
    bool need_star = false;
    if (t.monomial.is_one()) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) {
      out << magnitude.get_str();
      need_star = true;
    }
    for (std::size_t v = 0; v < t.monomial.size(); ++v) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << ring_->name(v);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Named operations

Polynomial ring_arithmetic(const Polynomial& f, const Polynomial& g,
                           RingOp op) {
  switch (op) {
    case RingOp::kAdd:
      return f + g;
    case RingOp::kSub:
      return f - g;
    case RingOp::kMul:
      return f * g;
  }
  throw ContextError("unknown ring operation");
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.num_vars()) throw ContextError("variable index out of range");
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial::Exponents ex = t.monomial.exponents();
    ex[var] = e - 1;
    out.push_back(Term{Monomial(std::move(ex)), t.coefficient * e});
  }
  // Lowering one exponent by one preserves the relative graded-lex order of
  // the surviving terms.
  return PolynomialBuilder::sorted(f.ring(), std::move(out));
}

std::optional<Polynomial> divide_exact(const Polynomial& f,
                                       const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
  if (f.is_zero()) return Polynomial(f.ring());
  const Term& lead = g.leading_term();
  if (g.size() == 1) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      out.push_back(Term{t.monomial.divided_by(lead.monomial),
                         t.coefficient / lead.coefficient});
    }
    return PolynomialBuilder::sorted(f.ring(), std::move(out));
  }
  if (f.total_degree() < g.total_degree()) return std::nullopt;

  // Leading-term elimination. If g | f then LT(f) = LT(q) LT(g), so a failed
  // monomial division proves non-divisibility.
  std::map<Monomial, mpq_class, std::greater<>> rem;
  for (const auto& t : f.terms()) rem.emplace(t.monomial, t.coefficient);
  std::vector<Term> quotient;
  mpq_class c, product;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    Monomial qm = top->first.divided_by(lead.monomial);
    mpq_div(c.get_mpq_t(), top->second.get_mpq_t(),
            lead.coefficient.get_mpq_t());
    rem.erase(top);
    for (std::size_t i = 1; i < g.size(); ++i) {
      const Term& gt = g.terms()[i];
      mpq_mul(product.get_mpq_t(), c.get_mpq_t(), gt.coefficient.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(qm * gt.monomial);
      if (inserted) {
        it->second = -product;
      } else {
        it->second -= product;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back(Term{std::move(qm), c});
  }
  return PolynomialBuilder::sorted(f.ring(), std::move(quotient));
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.num_vars()) {
    throw ContextError("evaluation point has the wrong length");
  }
  const std::size_t n = f.num_vars();
  std::vector<std::vector<Rational>> powers(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int d = std::max(f.degree_in(v), 0);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (int e = 1; e <= d; ++e) powers[v][e] = powers[v][e - 1] * point[v];
  }
  Rational sum = 0, term;
  for (const auto& t : f.terms()) {
    term = t.coefficient;
    for (std::size_t v = 0; v < n; ++v) {
      if (t.monomial[v] != 0) term *= powers[v][t.monomial[v]];
    }
    sum += term;
  }
  return sum;
}

std::uint64_t evaluate_mod(const Polynomial& f,
                           std::span<const std::uint64_t> point,
                           std::uint64_t p) {
  using modular::add_mod;
  using modular::mul_mod;
  if (point.size() != f.num_vars()) {
    throw ContextError("evaluation point has the wrong length");
  }
  std::uint64_t sum = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t term = modular::reduce(t.coefficient, p);
    for (std::size_t v = 0; v < f.num_vars(); ++v) {
      if (t.monomial[v] != 0) {
        term = mul_mod(term, modular::pow_mod(point[v] % p, t.monomial[v], p),
                       p);
      }
    }
    sum = add_mod(sum, term, p);
  }
  return sum;
}

DegreeInfo degree_info(const Polynomial& f) {
  DegreeInfo info;
  if (f.is_zero()) return info;
  info.total_degree = f.total_degree();
  info.is_homogeneous =
      static_cast<int>(f.terms().back().monomial.degree()) == info.total_degree;
  return info;
}

Polynomial power(const Polynomial& f, unsigned exponent) {
  Polynomial result(f.ring(), 1);
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial homogenize(const Polynomial& f, std::string_view new_var,
                      int target_degree) {
  if (target_degree < f.total_degree()) {
    throw DegreeError("homogenization target degree below the polynomial "
                      "degree");
  }
  std::vector<std::string> names = f.ring()->names();
  names.emplace_back(new_var);
  RingPtr ring = make_ring(std::move(names));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial::Exponents e = t.monomial.exponents();
    e.push_back(static_cast<std::uint32_t>(target_degree) - t.monomial.degree());
    out.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(std::move(ring), std::move(out));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t var,
                        const Rational& value) {
  if (var >= f.num_vars()) throw ContextError("variable index out of range");
  std::vector<std::string> names = f.ring()->names();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(var));
  RingPtr ring = make_ring(std::move(names));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial::Exponents e = t.monomial.exponents();
    const auto power_of_var = e[var];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var));
    Rational c = t.coefficient;
    if (power_of_var != 0) {
      Rational scale;
      mpz_pow_ui(scale.get_num_mpz_t(), value.get_num_mpz_t(), power_of_var);
      mpz_pow_ui(scale.get_den_mpz_t(), value.get_den_mpz_t(), power_of_var);
      c *= scale;
    }
    out.push_back(Term{Monomial(std::move(e)), std::move(c)});
  }
  return Polynomial::from_terms(std::move(ring), std::move(out));
}

Integer denominator_lcm(const Polynomial& f) {
  Integer l = 1;
  for (const auto& t : f.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  return l;
}

}  // namespace extatica
