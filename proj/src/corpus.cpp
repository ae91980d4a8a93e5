#include "extatica/corpus.hpp"

#include <sstream>

#include "extatica/errors.hpp"
#include "extatica/extactic.hpp"
#include "extatica/parser.hpp"
#include "extatica/random.hpp"

namespace extatica::corpus {

std::string to_string(Backing backing) {
  return backing == Backing::kVerified ? "verified" : "cited";
}

namespace {

constexpr const char* kLotkaVolterraSource =
    "J. Moulin Ollagnier, Lotka-Volterra family SLV(l)";

Fact verified(std::string kind, std::string statement, std::string oracle) {
  return Fact{std::move(kind), std::move(statement), Backing::kVerified,
              std::move(oracle)};
}

Fact cited(std::string kind, std::string statement, std::string source) {
  return Fact{std::move(kind), std::move(statement), Backing::kCited,
              std::move(source)};
}

// Asserts an invariance claim and records it.
Fact invariant_fact(const VectorField& field, const Polynomial& f,
                    const Polynomial& expected_cofactor) {
  auto k = check_invariance(field, f);
  if (!k || !(k->cofactor == expected_cofactor)) {
    throw InternalConsistencyError("corpus invariance claim failed for " +
                                   f.to_string());
  }
  return verified("invariant",
                  f.to_string() + " = 0 is invariant with cofactor " +
                      k->cofactor.to_string(),
                  "check_invariance");
}

void require_two_variables(const Polynomial& p) {
  if (p.num_vars() != 2) {
    throw InvalidInputError("expected a polynomial in two variables");
  }
}

}  // namespace

CorpusEntry slv(long ell) {
  if (ell < 1) throw InvalidInputError("SLV(l) needs l >= 1");
  RingPtr ring = default_ring(3);
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  const Polynomial z = Polynomial::variable(ring, 2);
  const Rational c(2 * ell + 1, 2 * ell - 1);
  const Polynomial kx = Rational(1, 2) * y + z;
  const Polynomial ky = 2 * z + x;
  const Polynomial kz = y - c * x;
  VectorField field({x * kx, y * ky, z * kz}, FieldMode::kHomogeneous);

  CorpusEntry entry{"slv:" + std::to_string(ell), field, {},
                    std::string(kLotkaVolterraSource)};
  const FoliationDegree deg = foliation_degree(field);
  if (deg.degree != 2) {
    throw InternalConsistencyError("SLV field is not of degree 2");
  }
  entry.facts.push_back(verified("degree", "foliation degree 2",
                                 "foliation_degree"));
  entry.facts.push_back(invariant_fact(field, x, kx));
  entry.facts.push_back(invariant_fact(field, y, ky));
  entry.facts.push_back(invariant_fact(field, z, kz));
  entry.facts.push_back(cited("no-first-integral",
                              "admits no rational first integral",
                              kLotkaVolterraSource));
  entry.facts.push_back(cited("algebraic-solution",
                              "has an irreducible invariant curve of degree " +
                                  std::to_string(2 * ell),
                              kLotkaVolterraSource));
  return entry;
}

CorpusEntry hamiltonian(const Polynomial& h) {
  require_two_variables(h);
  if (h.is_constant()) {
    throw InvalidInputError("a Hamiltonian must be non-constant");
  }
  VectorField field({-partial_derivative(h, 1), partial_derivative(h, 0)},
                    FieldMode::kAffine);
  if (!apply_derivation(field, h).is_zero()) {
    throw InternalConsistencyError("X_H(H) does not vanish");
  }
  CorpusEntry entry{"hamiltonian:" + h.to_string(), field, {},
                    "Hamiltonian field of a polynomial"};
  entry.facts.push_back(verified("first-integral",
                                 h.to_string() + " is a first integral",
                                 "X_H(H) = 0"));
  return entry;
}

CorpusEntry pencil_field(const Polynomial& f, const Polynomial& g) {
  require_two_variables(f);
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero() ||
      (f * g.leading_term().coefficient - g * f.leading_term().coefficient)
          .is_zero()) {
    throw InvalidInputError("pencil members must be non-proportional");
  }
  const Polynomial fx = partial_derivative(f, 0);
  const Polynomial fy = partial_derivative(f, 1);
  const Polynomial gx = partial_derivative(g, 0);
  const Polynomial gy = partial_derivative(g, 1);
  VectorField field({f * gy - g * fy, g * fx - f * gx}, FieldMode::kAffine);
  if (field.is_zero()) {
    throw InvalidInputError("pencil members are functionally dependent");
  }
  const Polynomial cross =
      apply_derivation(field, f) * g - f * apply_derivation(field, g);
  if (!cross.is_zero()) {
    throw InternalConsistencyError("pencil field is not tangent to the pencil");
  }
  CorpusEntry entry{"pencil:" + f.to_string() + ";" + g.to_string(), field, {},
                    "field tangent to a pencil of curves"};
  entry.facts.push_back(
      verified("first-integral",
               "(" + f.to_string() + ")/(" + g.to_string() +
                   ") is a rational first integral",
               "X(f)*g - f*X(g) = 0"));
  return entry;
}

Polynomial random_polynomial(const RingPtr& ring, int d, bool homogeneous,
                             long lo, long hi, std::uint64_t seed,
                             int density) {
  SeededRng rng(seed);
  const int low = homogeneous ? d : 0;
  std::vector<Polynomial> monomials;
  for (int e = low; e <= d; ++e) {
    if (e == 0) {
      monomials.emplace_back(ring, 1);
      continue;
    }
    auto sys = monomial_system(ring, e, SystemKind::kHomogeneous);
    for (const auto& m : sys.basis()) monomials.push_back(m);
  }
  for (;;) {
    Polynomial p(ring);
    for (const auto& m : monomials) {
      const bool keep = rng.uniform(1, 100) <= density;
      const long c = rng.uniform(lo, hi);
      if (keep && c != 0) p += Rational(c) * m;
    }
    if (!p.is_zero()) return p;
  }
}

VectorField random_field(std::size_t n, int d, std::uint64_t seed,
                         FieldMode mode) {
  if (n < 2 || d < 0) throw InvalidInputError("random_field needs n >= 2, d >= 0");
  RingPtr ring = default_ring(n);
  SeededRng rng(seed);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    comps.push_back(random_polynomial(ring, d, mode == FieldMode::kHomogeneous,
                                      -9, 9, rng.next()));
  }
  return VectorField(std::move(comps), mode);
}

CorpusEntry planted_lines_field(std::size_t n, int d, std::uint64_t seed) {
  if (n < 2 || d < 1) {
    throw InvalidInputError("planted_lines_field needs n >= 2, d >= 1");
  }
  RingPtr ring = default_ring(n);
  SeededRng rng(seed);
  std::vector<Polynomial> q, comps;
  for (std::size_t i = 0; i < n; ++i) {
    q.push_back(random_polynomial(ring, d - 1, true, -5, 5, rng.next()));
    comps.push_back(Polynomial::variable(ring, i) * q.back());
  }
  VectorField field(std::move(comps), FieldMode::kHomogeneous);
  std::ostringstream name;
  name << "planted:" << n << "," << d << "," << seed;
  CorpusEntry entry{name.str(), field, {},
                    "random field with planted invariant hyperplanes"};
  for (std::size_t i = 0; i < n; ++i) {
    entry.facts.push_back(
        invariant_fact(field, Polynomial::variable(ring, i), q[i]));
  }
  return entry;
}

namespace {

std::vector<long> parse_numbers(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInputError("bad corpus argument '" + item + "'");
    }
  }
  return out;
}

}  // namespace

CorpusEntry by_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (name == "slv") {
    auto v = parse_numbers(args);
    if (v.size() != 1) throw InvalidInputError("usage: slv:<l>");
    return slv(v[0]);
  }
  if (name == "planted") {
    auto v = parse_numbers(args);
    if (v.size() != 3 || v[0] < 2 || v[1] < 1) {
      throw InvalidInputError("usage: planted:<n>,<d>,<seed>");
    }
    return planted_lines_field(static_cast<std::size_t>(v[0]),
                               static_cast<int>(v[1]),
                               static_cast<std::uint64_t>(v[2]));
  }
  if (name == "random" || name == "random-homogeneous") {
    auto v = parse_numbers(args);
    if (v.size() != 3 || v[0] < 2 || v[1] < 0) {
      throw InvalidInputError("usage: " + name + ":<n>,<d>,<seed>");
    }
    const auto mode = name == "random" ? FieldMode::kAffine
                                       : FieldMode::kHomogeneous;
    VectorField field = random_field(static_cast<std::size_t>(v[0]),
                                     static_cast<int>(v[1]),
                                     static_cast<std::uint64_t>(v[2]), mode);
    return CorpusEntry{spec, field, {}, "seeded random field"};
  }
  RingPtr plane = make_ring({"x", "y"});
  if (name == "hamiltonian") {
    return hamiltonian(parse_polynomial(args, plane));
  }
  if (name == "pencil") {
    const auto semi = args.find(';');
    if (semi == std::string::npos) {
      throw InvalidInputError("usage: pencil:<f>;<g>");
    }
    return pencil_field(parse_polynomial(args.substr(0, semi), plane),
                        parse_polynomial(args.substr(semi + 1), plane));
  }
  throw InvalidInputError("unknown corpus entry '" + spec + "'");
}

}  // namespace extatica::corpus
