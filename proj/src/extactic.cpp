#include "extatica/extactic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "extatica/errors.hpp"
#include "extatica/random.hpp"

namespace extatica {

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::kAffine:
      return "affine";
    case SystemKind::kHomogeneous:
      return "homogeneous";
    case SystemKind::kCustom:
      return "custom";
  }
  return "custom";
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::kFractionFree:
      return "fraction-free";
    case Engine::kModular:
      return "modular";
    case Engine::kAuto:
      return "auto";
  }
  return "auto";
}

Engine engine_from_string(const std::string& name) {
  if (name == "fraction-free") return Engine::kFractionFree;
  if (name == "modular") return Engine::kModular;
  if (name == "auto") return Engine::kAuto;
  throw InvalidInputError("unknown engine '" + name + "'");
}

std::string to_string(FirstIntegralStatus status) {
  switch (status) {
    case FirstIntegralStatus::kFound:
      return "found";
    case FirstIntegralStatus::kFailed:
      return "failed";
    case FirstIntegralStatus::kExtacticNonzero:
      return "extactic-nonzero";
  }
  return "failed";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// Linear systems

namespace {

std::size_t rank_of(const std::vector<Polynomial>& polys) {
  std::map<Monomial, std::size_t, std::greater<>> column;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) column.try_emplace(t.monomial, 0);
  }
  std::size_t c = 0;
  for (auto& [m, idx] : column) idx = c++;
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : polys) {
    std::vector<Rational> row(c, 0);
    for (const auto& t : p.terms()) row[column[t.monomial]] = t.coefficient;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < c; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

void monomials_of_degree(std::size_t nvars, std::uint32_t degree,
                         std::vector<Monomial>& out) {
  Monomial::Exponents e(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec =
      [&](std::size_t v, std::uint32_t remaining) {
        if (v + 1 == nvars) {
          e[v] = remaining;
          out.emplace_back(e);
          return;
        }
        for (std::uint32_t a = remaining + 1; a-- > 0;) {
          e[v] = a;
          rec(v + 1, remaining - a);
        }
      };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(e);
    return;
  }
  rec(0, degree);
}

}  // namespace

LinearSystem::LinearSystem(std::vector<Polynomial> basis)
    : basis_(std::move(basis)) {
  if (basis_.empty()) throw InvalidInputError("a linear system needs a basis");
  for (const auto& p : basis_) {
    require_same_ring(basis_.front().ring(), p.ring());
    degree_ = std::max(degree_, p.total_degree());
  }
  if (rank_of(basis_) != basis_.size()) {
    throw InvalidInputError("linear system basis is not linearly independent");
  }
}

bool LinearSystem::is_homogeneous() const {
  return std::all_of(basis_.begin(), basis_.end(), [&](const Polynomial& p) {
    DegreeInfo info = degree_info(p);
    return info.is_homogeneous && info.total_degree == degree_;
  });
}

LinearSystem monomial_system(const RingPtr& ring, int k, SystemKind kind) {
  if (ring->size() < 1) throw InvalidInputError("monomial systems need variables");
  if (k < 1) throw InvalidInputError("system degree must be at least 1");
  if (kind == SystemKind::kCustom) {
    throw InvalidInputError("monomial systems are affine or homogeneous");
  }
  std::vector<Monomial> monomials;
  const auto top = static_cast<std::uint32_t>(k);
  const std::uint32_t low = kind == SystemKind::kAffine ? 0 : top;
  for (std::uint32_t d = low; d <= top; ++d) {
    monomials_of_degree(ring->size(), d, monomials);
  }
  std::vector<Polynomial> basis;
  basis.reserve(monomials.size());
  for (auto& m : monomials) basis.push_back(Polynomial::monomial(ring, m));
  return LinearSystem(std::move(basis), kind, k);
}

// ---------------------------------------------------------------------------
// Jet matrix and determinants

PolyMatrix jet_matrix(const VectorField& field, const LinearSystem& system) {
  require_same_ring(field.ring(), system.ring());
  if (field.mode() == FieldMode::kHomogeneous && !system.is_homogeneous()) {
    throw ContextError(
        "homogeneous fields require a homogeneous linear system");
  }
  const std::size_t m = system.dimension();
  PolyMatrix jet(field.ring(), m, m);
  for (std::size_t i = 0; i < m; ++i) {
    jet(i, 0) = system.basis()[i];
    for (std::size_t j = 1; j < m; ++j) {
      jet(i, j) = apply_derivation(field, jet(i, j - 1));
    }
  }
  return jet;
}

namespace {

// Laplace expansion along rows or columns holding a single nonzero entry.
PolyMatrix strip_singletons(const PolyMatrix& m, Polynomial& factor) {
  std::vector<std::size_t> rows(m.rows()), cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  bool changed = true;
  while (changed && rows.size() > 1) {
    changed = false;
    for (std::size_t a = 0; a < rows.size() && !changed; ++a) {
      std::size_t count = 0, where = 0;
      for (std::size_t b = 0; b < cols.size(); ++b) {
        if (!m(rows[a], cols[b]).is_zero()) {
          ++count;
          where = b;
        }
      }
      if (count == 0) {
        factor = Polynomial(m.ring());
        return PolyMatrix(m.ring(), 0, 0);
      }
      if (count == 1) {
        factor *= m(rows[a], cols[where]);
        if ((a + where) % 2 == 1) factor = -factor;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(a));
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(where));
        changed = true;
      }
    }
    for (std::size_t b = 0; b < cols.size() && !changed; ++b) {
      std::size_t count = 0, where = 0;
      for (std::size_t a = 0; a < rows.size(); ++a) {
        if (!m(rows[a], cols[b]).is_zero()) {
          ++count;
          where = a;
        }
      }
      if (count == 0) {
        factor = Polynomial(m.ring());
        return PolyMatrix(m.ring(), 0, 0);
      }
      if (count == 1) {
        factor *= m(rows[where], cols[b]);
        if ((where + b) % 2 == 1) factor = -factor;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(where));
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(b));
        changed = true;
      }
    }
  }
  return m.select(rows, cols);
}

Engine resolve(Engine engine, std::size_t n) {
  if (engine != Engine::kAuto) return engine;
  return n <= 4 ? Engine::kFractionFree : Engine::kModular;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, Engine engine, unsigned jobs) {
  if (m.rows() != m.cols()) throw ContextError("matrix is not square");
  Polynomial factor(m.ring(), 1);
  PolyMatrix core = strip_singletons(m, factor);
  if (factor.is_zero()) return factor;
  if (core.rows() == 0) return factor;
  Polynomial det = resolve(engine, core.rows()) == Engine::kFractionFree
                       ? det_fraction_free(core)
                       : det_modular(core, ModularOptions{jobs});
  return factor * det;
}

long extactic_degree_bound(std::size_t m, int k, int field_degree,
                           int variety_degree) {
  const auto pairs = static_cast<long>(binomial(m, 2));
  return static_cast<long>(m) * k +
         static_cast<long>(field_degree - variety_degree) * pairs;
}

namespace {

std::vector<Rational> random_point(SeededRng& rng, std::size_t n) {
  std::vector<Rational> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.emplace_back(static_cast<long>(rng.uniform(-10000, 10000)));
  }
  return p;
}

Rational numeric_minor(const std::vector<Rational>& values, std::size_t m,
                       const std::vector<std::size_t>& rows,
                       std::size_t ncols) {
  std::vector<Rational> a;
  a.reserve(rows.size() * ncols);
  for (std::size_t r : rows) {
    for (std::size_t c = 0; c < ncols; ++c) a.push_back(values[r * m + c]);
  }
  return det_rational(std::move(a), rows.size());
}

std::vector<std::size_t> first_columns(std::size_t r) {
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  return c;
}

// Basis of {u : rows * u = 0} over Q.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows,
                                             std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> u(cols, 0);
    u[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) u[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(u));
  }
  return basis;
}

// Scales P and Q by one rational so that together they are primitive
// integer polynomials with positive leading coefficient of Q.
void normalize_pair(Polynomial& p, Polynomial& q) {
  Integer l = lcm(denominator_lcm(p), denominator_lcm(q));
  Integer g = 0;
  for (const Polynomial* f : {&p, &q}) {
    for (const auto& t : f->terms()) {
      g = gcd(g, Integer(t.coefficient.get_num() * (l / t.coefficient.get_den())));
    }
  }
  Rational s(l, g);
  if (q.leading_term().coefficient < 0) s = -s;
  p = s * p;
  q = s * q;
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  return (a * b.leading_term().coefficient - b * a.leading_term().coefficient)
      .is_zero();
}

bool is_first_integral(const VectorField& field, const Polynomial& a,
                       const Polynomial& b) {
  return (apply_derivation(field, a) * b - a * apply_derivation(field, b)).is_zero();
}

// Jet matrix evaluated at random integer points.
struct Samples {
  std::vector<std::vector<Rational>> points;
  std::vector<std::vector<Rational>> values;
};

Samples sample(const PolyMatrix& jet, SeededRng& rng, std::size_t count) {
  Samples s;
  for (std::size_t i = 0; i < count; ++i) {
    s.points.push_back(random_point(rng, jet.ring()->size()));
    s.values.push_back(jet.evaluate(s.points.back()));
  }
  return s;
}

// Greedy row selection on the first two samples: grow I while some bordered
// minor on the first r+1 columns is nonzero at a sample.
std::vector<std::size_t> numeric_rows(const Samples& s, std::size_t m) {
  std::vector<std::size_t> selected;
  std::vector<bool> used(m, false);
  while (selected.size() < m) {
    std::optional<std::size_t> next;
    for (std::size_t t = 0; t < 2 && !next; ++t) {
      for (std::size_t i = 0; i < m && !next; ++i) {
        if (used[i]) continue;
        auto rows = selected;
        rows.push_back(i);
        if (numeric_minor(s.values[t], m, rows, rows.size()) != 0) next = i;
      }
    }
    if (!next) break;
    selected.push_back(*next);
    used[*next] = true;
  }
  return selected;
}

std::vector<std::size_t> replace_row(std::vector<std::size_t> rows,
                                     std::size_t slot, std::size_t row) {
  rows[slot] = row;
  return rows;
}

// P, Q in V with P*B = Q*A at every sample, where a and b hold the values of
// A and B there. The pair is accepted only once X(P)*Q - P*X(Q) = 0 holds
// exactly; the smallest such pair is returned.
std::optional<std::pair<Polynomial, Polynomial>> pair_in_system(
    const VectorField& field, const LinearSystem& system, const Samples& s,
    const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const auto& basis = system.basis();
  const std::size_t m = basis.size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t t = 0; t < s.points.size(); ++t) {
    std::vector<Rational> row(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational v = evaluate(basis[i], s.points[t]);
      row[i] = v * b[t];
      row[m + i] = -v * a[t];
    }
    rows.push_back(std::move(row));
  }
  std::optional<std::pair<Polynomial, Polynomial>> best;
  for (const auto& u : nullspace(std::move(rows), 2 * m)) {
    Polynomial p(field.ring()), q(field.ring());
    for (std::size_t i = 0; i < m; ++i) {
      if (u[i] != 0) p += u[i] * basis[i];
      if (u[m + i] != 0) q += u[m + i] * basis[i];
    }
    if (p.is_zero() || q.is_zero() || proportional(p, q)) continue;
    if (!is_first_integral(field, p, q)) continue;
    const int size = std::max(p.total_degree(), q.total_degree());
    if (!best || size < std::max(best->first.total_degree(),
                                 best->second.total_degree())) {
      best.emplace(std::move(p), std::move(q));
    }
  }
  if (best) normalize_pair(best->first, best->second);
  return best;
}

// First integral P/Q with P, Q in V, from Cramer minors evaluated at the
// samples only.
std::optional<std::pair<Polynomial, Polynomial>> sampled_first_integral(
    const VectorField& field, const LinearSystem& system, const Samples& s,
    const std::vector<std::size_t>& selected) {
  const std::size_t m = system.dimension();
  const std::size_t r = selected.size();
  if (r == 0 || r == m) return std::nullopt;
  std::vector<Rational> b;
  for (const auto& v : s.values) b.push_back(numeric_minor(v, m, selected, r));
  for (std::size_t i = 0; i < m; ++i) {
    if (std::find(selected.begin(), selected.end(), i) != selected.end()) continue;
    for (std::size_t slot = 0; slot < r; ++slot) {
      const auto rows = replace_row(selected, slot, i);
      std::vector<Rational> a;
      for (const auto& v : s.values) a.push_back(numeric_minor(v, m, rows, r));
      if (a[0] * b[1] == a[1] * b[0]) continue;
      if (auto pq = pair_in_system(field, system, s, a, b)) return pq;
    }
  }
  return std::nullopt;
}

std::size_t sample_count(std::size_t m) { return 2 * m + 6; }

constexpr std::uint64_t kZeroProbeSeed = 0x5eed;

}  // namespace

ExtacticReport extactic(const VectorField& field, const LinearSystem& system,
                        const ExtacticOptions& options) {
  const std::size_t m = system.dimension();
  if (m > options.max_dimension) {
    throw ResourceGuardError("linear system dimension " + std::to_string(m) +
                             " exceeds the limit " +
                             std::to_string(options.max_dimension));
  }
  ExtacticReport report{Polynomial(field.ring())};
  report.dimension = m;
  report.system_degree = system.degree();
  report.field_degree = field.mode() == FieldMode::kHomogeneous
                            ? foliation_degree(field).max_component_degree
                            : foliation_degree(field).degree;
  report.degree_bound = static_cast<int>(
      extactic_degree_bound(m, report.system_degree, report.field_degree));

  PolyMatrix jet = jet_matrix(field, system);
  const Engine engine = resolve(options.engine, m);
  report.engine_used = engine;

  // A vanishing extactic is certified by a first integral P/Q with P, Q in
  // V: u - (P/Q) v is then a nonzero kernel vector of the jet matrix, where
  // u and v are the coordinates of P and Q.
  bool certified_zero = false;
  if (engine == Engine::kModular && m > 2) {
    SeededRng rng(kZeroProbeSeed);
    Samples s = sample(jet, rng, sample_count(m));
    if (det_rational(s.values[0], m) == 0 && det_rational(s.values[1], m) == 0) {
      certified_zero =
          sampled_first_integral(field, system, s, numeric_rows(s, m)).has_value();
    }
  }
  if (!certified_zero) report.extactic = determinant(jet, engine, options.jobs);
  if (options.cross_check) {
    const Engine other = engine == Engine::kFractionFree ? Engine::kModular
                                                         : Engine::kFractionFree;
    if (!(determinant(jet, other, options.jobs) == report.extactic)) {
      throw InternalConsistencyError(
          "determinant engines disagree on the extactic");
    }
  }
  report.identically_zero = report.extactic.is_zero();
  report.degree = report.extactic.total_degree();
  return report;
}

bool divides_extactic(const Polynomial& f, const ExtacticReport& report) {
  if (report.identically_zero) {
    throw VacuousQueryError(
        "the extactic vanishes identically; every curve is contained in it");
  }
  if (f.is_constant()) {
    throw InvalidDivisorError("divisibility needs a non-constant polynomial");
  }
  return divide_exact(report.extactic, f).has_value();
}

bool extactic_nonzero_witness(const VectorField& field,
                              const LinearSystem& system, std::uint64_t seed,
                              int attempts) {
  PolyMatrix jet = jet_matrix(field, system);
  SeededRng rng(seed);
  const std::size_t m = system.dimension();
  for (int a = 0; a < attempts; ++a) {
    auto point = random_point(rng, field.ring()->size());
    if (det_rational(jet.evaluate(point), m) != 0) return true;
  }
  return false;
}

FirstIntegral extract_first_integral(const VectorField& field,
                                     const LinearSystem& system,
                                     const FirstIntegralOptions& options) {
  const std::size_t m = system.dimension();
  if (m > options.max_dimension) {
    throw ResourceGuardError("linear system dimension " + std::to_string(m) +
                             " exceeds the limit " +
                             std::to_string(options.max_dimension));
  }
  FirstIntegral out;
  PolyMatrix jet = jet_matrix(field, system);
  SeededRng rng(options.seed);
  const Samples samples = sample(jet, rng, sample_count(m));

  std::vector<std::size_t> selected = numeric_rows(samples, m);
  if (selected.size() == m) {
    out.rank = m;
    out.rows = selected;
    out.status = FirstIntegralStatus::kExtacticNonzero;
    out.diagnostic = "jet matrix has full rank " + std::to_string(m);
    return out;
  }
  if (auto pq = options.sampled_shortcut
                    ? sampled_first_integral(field, system, samples, selected)
                    : std::nullopt) {
    out.status = FirstIntegralStatus::kFound;
    out.rank = selected.size();
    out.rows = selected;
    out.numerator = std::move(pq->first);
    out.denominator = std::move(pq->second);
    out.diagnostic = "rank " + std::to_string(out.rank) + " of " + std::to_string(m) +
                     "; first integral inside the linear system";
    return out;
  }

  // Exact route: confirm the rank symbolically where the samples could not
  // find a nonzero bordered minor, then use the Cramer minors themselves.
  std::vector<bool> used(m, false);
  for (auto i : selected) used[i] = true;
  while (selected.size() < m) {
    const std::size_t r = selected.size();
    std::optional<std::size_t> next;
    for (std::size_t i = 0; i < m && !next; ++i) {
      if (used[i]) continue;
      auto rows = selected;
      rows.push_back(i);
      if (!determinant(jet.select(rows, first_columns(r + 1)), options.engine,
                       options.jobs)
               .is_zero()) {
        next = i;
      }
    }
    if (!next) break;
    selected.push_back(*next);
    used[*next] = true;
  }
  out.rank = selected.size();
  out.rows = selected;
  if (out.rank == m) {
    out.status = FirstIntegralStatus::kExtacticNonzero;
    out.diagnostic = "jet matrix has full rank " + std::to_string(m);
    return out;
  }
  if (out.rank == 0) {
    out.diagnostic = "rank profile: 0";
    return out;
  }

  const std::size_t r = out.rank;
  const auto cols = first_columns(r);
  // Cramer: row i restricted to the first r columns equals
  // sum_l c_l * row_l, c_l = det(M_I with row l replaced by row i) / det(M_I).
  struct Candidate {
    std::size_t row;
    std::size_t slot;
  };
  std::vector<Candidate> probable, unknown;
  const Rational b0 = numeric_minor(samples.values[0], m, selected, r);
  const Rational b1 = numeric_minor(samples.values[1], m, selected, r);
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    for (std::size_t slot = 0; slot < r; ++slot) {
      // The ratio is non-constant when its values at two samples differ.
      const auto rows = replace_row(selected, slot, i);
      Rational a0 = numeric_minor(samples.values[0], m, rows, r);
      Rational a1 = numeric_minor(samples.values[1], m, rows, r);
      (a0 * b1 != a1 * b0 ? probable : unknown).push_back({i, slot});
    }
  }

  const Polynomial denominator =
      determinant(jet.select(selected, cols), options.engine, options.jobs);
  if (denominator.is_zero()) {
    throw InternalConsistencyError("selected minor vanishes identically");
  }

  std::vector<Candidate> order = probable;
  order.insert(order.end(), unknown.begin(), unknown.end());
  for (const auto& c : order) {
    Polynomial numerator = determinant(jet.select(replace_row(selected, c.slot, c.row), cols),
                                       options.engine, options.jobs);
    if (numerator.is_zero() || proportional(numerator, denominator)) continue;
    if (!is_first_integral(field, numerator, denominator)) {
      std::ostringstream msg;
      msg << "rank profile: " << r << " of " << m
          << "; Cramer ratio failed the first-integral identity";
      out.diagnostic = msg.str();
      return out;
    }
    out.status = FirstIntegralStatus::kFound;
    std::vector<Rational> a, b;
    for (const auto& pt : samples.points) {
      a.push_back(evaluate(numerator, pt));
      b.push_back(evaluate(denominator, pt));
    }
    if (auto reduced = pair_in_system(field, system, samples, a, b)) {
      out.numerator = std::move(reduced->first);
      out.denominator = std::move(reduced->second);
    } else {
      out.numerator = std::move(numerator);
      out.denominator = denominator;
    }
    out.diagnostic = "rank " + std::to_string(r) + " of " + std::to_string(m);
    return out;
  }
  out.diagnostic = "rank profile: " + std::to_string(r) + " of " +
                   std::to_string(m) + "; every Cramer ratio is constant";
  return out;
}

}  // namespace extatica
