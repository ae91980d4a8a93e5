#include "extatica/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "extatica/bounds.hpp"
#include "extatica/corpus.hpp"
#include "extatica/errors.hpp"
#include "extatica/extactic.hpp"
#include "extatica/parser.hpp"

namespace extatica::cli {

using json = nlohmann::json;

namespace {

struct FieldArgs {
  std::string vars;
  std::string field;
  std::string corpus;
  std::string mode;
};

struct SystemArgs {
  int k = 0;
  std::string system = "affine";
  std::string engine = "auto";
  unsigned jobs = 1;
};

struct BoundArgs {
  std::string formula;
  std::optional<long> deg_d, h0, count, deg_f, deg_x, d, k, n, genus, h1,
      h0_k_minus_d, k_dot_k, k_dot_d, chi, self_int;
};

void add_field_options(CLI::App* app, FieldArgs& a) {
  app->add_option("--vars", a.vars, "comma-separated variable names");
  auto* field = app->add_option("--field", a.field, "comma-separated components");
  auto* corpus = app->add_option("--field-corpus", a.corpus,
                                 "built-in field such as slv:1 or planted:3,2,7");
  field->excludes(corpus);
  app->add_option("--mode", a.mode, "homogeneous or affine (default: inferred)")
      ->check(CLI::IsMember({"homogeneous", "affine"}));
}

void add_system_options(CLI::App* app, SystemArgs& a) {
  app->add_option("--k", a.k, "degree of the monomial system")->required();
  app->add_option("--system", a.system,
                  "affine (all monomials of degree <= k, default) or homogeneous")
      ->check(CLI::IsMember({"homogeneous", "affine"}));
  app->add_option("--engine", a.engine, "fraction-free, modular or auto")
      ->check(CLI::IsMember({"fraction-free", "modular", "auto"}));
  app->add_option("--jobs", a.jobs, "worker threads for the modular engine")
      ->check(CLI::PositiveNumber);
}

// Number of top-level comma-separated parts.
std::size_t component_count(const std::string& text) {
  std::size_t count = 1;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) ++count;
  }
  return count;
}

VectorField load_field(const FieldArgs& a) {
  std::optional<FieldMode> mode;
  if (a.mode == "homogeneous") mode = FieldMode::kHomogeneous;
  if (a.mode == "affine") mode = FieldMode::kAffine;
  if (!a.corpus.empty()) {
    VectorField field = corpus::by_spec(a.corpus).field;
    if (!a.vars.empty()) {
      RingPtr ring = parse_variable_list(a.vars);
      if (!same_ring(ring, field.ring())) {
        throw InvalidInputError("--vars does not match the corpus field variables");
      }
    }
    if (mode && *mode != field.mode()) {
      field = VectorField(field.components(), *mode);
    }
    return field;
  }
  if (a.field.empty()) throw InvalidInputError("one of --field or --field-corpus is required");
  RingPtr ring = a.vars.empty() ? default_ring(component_count(a.field))
                                : parse_variable_list(a.vars);
  return mode ? parse_vector_field(a.field, ring, *mode)
              : parse_vector_field(a.field, ring);
}

std::string vars_text(const RingPtr& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i) out += ",";
    out += ring->name(i);
  }
  return out;
}

// An affine system needs an affine field; without an explicit --mode the
// inferred homogeneous mode yields to it.
VectorField field_for_system(const FieldArgs& f, const SystemArgs& s) {
  VectorField field = load_field(f);
  if (s.system == "affine" && f.mode.empty() &&
      field.mode() == FieldMode::kHomogeneous) {
    field = VectorField(field.components(), FieldMode::kAffine);
  }
  return field;
}

LinearSystem make_system(const VectorField& field, const SystemArgs& a) {
  const SystemKind kind = a.system == "homogeneous" ? SystemKind::kHomogeneous
                                                    : SystemKind::kAffine;
  return monomial_system(field.ring(), a.k, kind);
}

std::size_t max_dimension() {
  const char* env = std::getenv("EXTATICA_MAX_DIM");
  if (env == nullptr || *env == '\0') return 21;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw InvalidInputError("EXTATICA_MAX_DIM must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

json run_extactic(const FieldArgs& f, const SystemArgs& s) {
  VectorField field = field_for_system(f, s);
  LinearSystem system = make_system(field, s);
  ExtacticOptions opt;
  opt.engine = engine_from_string(s.engine);
  opt.jobs = s.jobs;
  opt.max_dimension = max_dimension();
  ExtacticReport r = extactic(field, system, opt);
  json out;
  out["command"] = "extactic";
  out["vars"] = vars_text(field.ring());
  out["field"] = field.to_string();
  out["mode"] = to_string(field.mode());
  out["k"] = s.k;
  out["m"] = r.dimension;
  out["engine"] = to_string(r.engine_used);
  out["extactic"] = r.extactic.to_string();
  out["degree"] = r.identically_zero ? json(nullptr) : json(r.degree);
  out["degree_bound"] = r.degree_bound;
  out["identically_zero"] = r.identically_zero;
  return out;
}

json run_invariant(const FieldArgs& f, const std::string& curve_text) {
  VectorField field = load_field(f);
  Polynomial curve = parse_polynomial(curve_text, field.ring());
  auto k = check_invariance(field, curve);
  json out;
  out["command"] = "invariant-check";
  out["field"] = field.to_string();
  out["curve"] = curve.to_string();
  out["invariant"] = k.has_value();
  out["cofactor"] = k ? json(k->cofactor.to_string()) : json(nullptr);
  return out;
}

json run_first_integral(const FieldArgs& f, const SystemArgs& s) {
  VectorField field = field_for_system(f, s);
  LinearSystem system = make_system(field, s);
  FirstIntegralOptions opt;
  opt.engine = engine_from_string(s.engine);
  opt.jobs = s.jobs;
  opt.max_dimension = max_dimension();
  FirstIntegral fi = extract_first_integral(field, system, opt);
  json out;
  out["command"] = "first-integral";
  out["status"] = to_string(fi.status);
  out["numerator"] = fi.numerator ? json(fi.numerator->to_string()) : json(nullptr);
  out["denominator"] =
      fi.denominator ? json(fi.denominator->to_string()) : json(nullptr);
  out["rank"] = fi.rank;
  return out;
}

long need(const std::optional<long>& v, const char* flag,
          const std::string& formula) {
  if (!v) {
    throw InvalidInputError(std::string("bound ") + formula + " needs " + flag);
  }
  return *v;
}

bounds::BoundInput general_input(const BoundArgs& a) {
  bounds::BoundInput in;
  in.deg_d = need(a.deg_d, "--deg-d", a.formula);
  in.h0 = need(a.h0, "--h0", a.formula);
  in.n_invariant = need(a.count, "--count", a.formula);
  in.deg_f = need(a.deg_f, "--deg-f", a.formula);
  in.deg_x = a.deg_x.value_or(1);
  return in;
}

json run_bound(const BoundArgs& a) {
  using namespace bounds;
  BoundReport r;
  const std::string& f = a.formula;
  if (f == "theorem1") {
    r = theorem1_check(general_input(a));
  } else if (f == "poin") {
    r = poincare_check(general_input(a));
  } else if (f == "pn") {
    r = pn_check(need(a.d, "--d", f), need(a.k, "--k", f), need(a.n, "--n", f),
                 need(a.count, "--count", f));
  } else if (f == "gen") {
    const long k = need(a.k, "--k", f);
    r = genus_check(need(a.d, "--d", f), k, need(a.count, "--count", f),
                    a.genus.value_or(virtual_genus_plane(k)));
  } else if (f == "cor") {
    BoundInput in;
    if (a.d && a.k) {
      in = plane_input(*a.d, *a.k, need(a.count, "--count", f),
                       a.genus.value_or(virtual_genus_plane(*a.k)));
    } else {
      in = general_input(a);
      in.h1 = need(a.h1, "--h1", f);
      in.h0_k_minus_d = need(a.h0_k_minus_d, "--h0-k-minus-d", f);
      in.k_dot_k = need(a.k_dot_k, "--kk", f);
      in.k_dot_d = need(a.k_dot_d, "--kd", f);
      in.chi_top = need(a.chi, "--chi", f);
      in.genus = need(a.genus, "--genus", f);
    }
    r = surface_bound(in);
  } else if (f == "abelian") {
    r = abelian_check(need(a.deg_d, "--deg-d", f),
                      need(a.self_int, "--self-int", f), need(a.n, "--n", f),
                      need(a.count, "--count", f), need(a.deg_f, "--deg-f", f),
                      a.deg_x.value_or(1));
  } else {
    throw InvalidInputError("unknown formula '" + f + "'");
  }
  json out;
  out["command"] = "bound";
  out["formula"] = r.formula;
  out["lhs"] = rational_to_string(r.lhs);
  out["rhs"] = rational_to_string(r.rhs);
  out["threshold"] =
      r.threshold ? json(rational_to_string(*r.threshold)) : json(nullptr);
  out["verdict"] = to_string(r.verdict);
  return out;
}

json run_corpus(const std::string& spec) {
  corpus::CorpusEntry e = corpus::by_spec(spec);
  json facts = json::array();
  for (const auto& fact : e.facts) {
    facts.push_back({{"kind", fact.kind},
                     {"statement", fact.statement},
                     {"backing", corpus::to_string(fact.backing)},
                     {"source", fact.source}});
  }
  json out;
  out["command"] = "corpus";
  out["name"] = e.name;
  out["vars"] = vars_text(e.field.ring());
  out["mode"] = to_string(e.field.mode());
  out["field"] = e.field.to_string();
  out["facts"] = facts;
  out["provenance"] = e.provenance;
  return out;
}

json run_parse(const FieldArgs& f, const std::string& poly) {
  json out;
  out["command"] = "parse";
  if (!poly.empty()) {
    if (!f.field.empty() || !f.corpus.empty()) {
      throw InvalidInputError("give either --poly or a field, not both");
    }
    if (f.vars.empty()) throw InvalidInputError("--poly needs --vars");
    RingPtr ring = parse_variable_list(f.vars);
    out["vars"] = vars_text(ring);
    out["polynomial"] = parse_polynomial(poly, ring).to_string();
    return out;
  }
  VectorField field = load_field(f);
  out["vars"] = vars_text(field.ring());
  out["field"] = field.to_string();
  out["mode"] = to_string(field.mode());
  return out;
}

void add_bound_option(CLI::App* app, const std::string& name,
                      std::optional<long>& target, const std::string& help) {
  app->add_option(name, target, help);
}

int fail(std::ostream& err, int code, const std::string& message) {
  err << json{{"error", message}}.dump() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact extactic divisors of polynomial foliations", "extatica"};
  app.require_subcommand(1);

  FieldArgs field_args;
  SystemArgs system_args;
  BoundArgs bound_args;
  std::string curve, corpus_spec, poly;

  auto* ext = app.add_subcommand("extactic", "extactic divisor of a field");
  add_field_options(ext, field_args);
  add_system_options(ext, system_args);

  auto* inv = app.add_subcommand("invariant-check", "test X(f) = K*f");
  add_field_options(inv, field_args);
  inv->add_option("--curve", curve, "polynomial f")->required();

  auto* fi = app.add_subcommand("first-integral", "rational first integral");
  add_field_options(fi, field_args);
  add_system_options(fi, system_args);

  auto* bnd = app.add_subcommand("bound", "numerical bounds");
  bnd->add_option("formula", bound_args.formula,
                  "theorem1, poin, pn, gen, cor or abelian")
      ->required()
      ->check(CLI::IsMember({"theorem1", "poin", "pn", "gen", "cor", "abelian"}));
  add_bound_option(bnd, "--deg-d", bound_args.deg_d, "degree of D");
  add_bound_option(bnd, "--h0", bound_args.h0, "h0 of D");
  add_bound_option(bnd, "--count", bound_args.count, "number N of invariant divisors");
  add_bound_option(bnd, "--deg-f", bound_args.deg_f, "degree of the foliation");
  add_bound_option(bnd, "--deg-x", bound_args.deg_x, "degree of the variety");
  add_bound_option(bnd, "--d", bound_args.d, "foliation degree");
  add_bound_option(bnd, "--k", bound_args.k, "curve degree");
  add_bound_option(bnd, "--n", bound_args.n, "dimension");
  add_bound_option(bnd, "--genus", bound_args.genus, "virtual genus");
  add_bound_option(bnd, "--h1", bound_args.h1, "h1 of D");
  add_bound_option(bnd, "--h0-k-minus-d", bound_args.h0_k_minus_d, "h0(K - D)");
  add_bound_option(bnd, "--kk", bound_args.k_dot_k, "K.K");
  add_bound_option(bnd, "--kd", bound_args.k_dot_d, "K.D");
  add_bound_option(bnd, "--chi", bound_args.chi, "topological Euler characteristic");
  add_bound_option(bnd, "--self-int", bound_args.self_int, "D^n");

  auto* cor = app.add_subcommand("corpus", "print a built-in field");
  cor->add_option("spec", corpus_spec, "e.g. slv:1, hamiltonian:x^2+y^3")->required();

  auto* prs = app.add_subcommand("parse", "parse and print canonically");
  add_field_options(prs, field_args);
  prs->add_option("--poly", poly, "single polynomial");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, kInputError, e.what());
  }

  try {
    json result;
    if (*ext) result = run_extactic(field_args, system_args);
    else if (*inv) result = run_invariant(field_args, curve);
    else if (*fi) result = run_first_integral(field_args, system_args);
    else if (*bnd) result = run_bound(bound_args);
    else if (*cor) result = run_corpus(corpus_spec);
    else result = run_parse(field_args, poly);
    out << result.dump() << "\n";
    return kOk;
  } catch (const HypothesisNotMetError& e) {
    return fail(err, kHypothesisNotMet, e.what());
  } catch (const ResourceGuardError& e) {
    return fail(err, kResourceGuard, e.what());
  } catch (const InternalConsistencyError& e) {
    return fail(err, kInternal, e.what());
  } catch (const Error& e) {
    return fail(err, kInputError, e.what());
  } catch (const std::exception& e) {
    return fail(err, kInternal, e.what());
  }
}

}  // namespace extatica::cli
