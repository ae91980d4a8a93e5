#include "extatica/determinant.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <thread>

#include "extatica/errors.hpp"
#include "extatica/modular.hpp"

namespace extatica {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = (*this)(rows.at(i), cols.at(j));
    }
  }
  return out;
}

std::vector<Rational> PolyMatrix::evaluate(
    std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(data_.size());
  for (const auto& p : data_) out.push_back(extatica::evaluate(p, point));
  return out;
}

Rational det_rational(std::vector<Rational> a, std::size_t n) {
  if (a.size() != n * n) throw ContextError("matrix is not square");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) {
        std::swap(a[k * n + j], a[pivot * n + j]);
      }
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      Rational factor = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] -= factor * a[k * n + j];
      }
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Bareiss

Polynomial det_fraction_free(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw ContextError("matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(m.ring(), 1);

  std::vector<Polynomial> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.push_back(m(i, j));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Polynomial& {
    return a[i * n + j];
  };

  bool negate = false;
  Polynomial previous(m.ring(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = k; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      if (!pivot || at(i, k).size() < at(*pivot, k).size()) pivot = i;
    }
    if (!pivot) return Polynomial(m.ring());
    if (*pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(*pivot, j));
      negate = !negate;
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = at(k, k) * at(i, j);
        if (!at(i, k).is_zero() && !at(k, j).is_zero()) {
          num -= at(i, k) * at(k, j);
        }
        auto q = divide_exact(num, previous);
        if (!q) {
          throw InternalConsistencyError(
              "fraction-free elimination produced an inexact division");
        }
        at(i, j) = std::move(*q);
      }
      at(i, k) = Polynomial(m.ring());
    }
    previous = at(k, k);
  }
  Polynomial det = at(n - 1, n - 1);
  return negate ? -det : det;
}

// ---------------------------------------------------------------------------
// Evaluation / interpolation

namespace {

using modular::add_mod;
using modular::mul_mod;
using modular::sub_mod;

struct ModTerm {
  Monomial::Exponents exponents;
  std::uint64_t coefficient;
};

// Potentials a_i + b_j = deg(entry) on every nonzero entry, all entries
// homogeneous. Every nonzero permutation term then has degree sum(a)+sum(b).
std::optional<int> graded_degree(const std::vector<Polynomial>& e,
                                 std::size_t n) {
  for (const auto& p : e) {
    if (!degree_info(p).is_homogeneous) return std::nullopt;
  }
  std::vector<std::optional<long>> row(n), col(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (row[root]) continue;
    row[root] = 0;
    // Queue of (is_row, index).
    std::queue<std::pair<bool, std::size_t>> q;
    q.emplace(true, root);
    while (!q.empty()) {
      auto [is_row, idx] = q.front();
      q.pop();
      for (std::size_t other = 0; other < n; ++other) {
        const Polynomial& p = is_row ? e[idx * n + other] : e[other * n + idx];
        if (p.is_zero()) continue;
        const long d = p.total_degree();
        if (is_row) {
          const long want = d - *row[idx];
          if (!col[other]) {
            col[other] = want;
            q.emplace(false, other);
          } else if (*col[other] != want) {
            return std::nullopt;
          }
        } else {
          const long want = d - *col[idx];
          if (!row[other]) {
            row[other] = want;
            q.emplace(true, other);
          } else if (*row[other] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  long total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!row[i] || !col[i]) return std::nullopt;
    total += *row[i] + *col[i];
  }
  if (total < 0) return std::nullopt;
  return static_cast<int>(total);
}

mpz_class one_norm(const Polynomial& p) {
  mpz_class s = 0;
  for (const auto& t : p.terms()) s += abs(t.coefficient.get_num());
  return s;
}

// Converts values at nodes 0..b (stride apart) to monomial coefficients.
void interpolate_line(std::vector<std::uint64_t>& data, std::size_t offset,
                      std::size_t stride, std::size_t count,
                      const std::vector<std::uint64_t>& inverses,
                      std::uint64_t p, std::vector<std::uint64_t>& scratch) {
  scratch.resize(count);
  for (std::size_t i = 0; i < count; ++i) scratch[i] = data[offset + i * stride];
  // Divided differences on equally spaced nodes.
  for (std::size_t k = 1; k < count; ++k) {
    for (std::size_t i = count - 1; i >= k; --i) {
      scratch[i] =
          mul_mod(sub_mod(scratch[i], scratch[i - 1], p), inverses[k], p);
    }
  }
  // Newton form to monomial basis by Horner on (x - node).
  std::vector<std::uint64_t> poly(count, 0);
  poly[0] = scratch[count - 1];
  std::size_t len = 1;
  for (std::size_t k = count - 1; k-- > 0;) {
    const std::uint64_t node = k % p;
    // poly = poly * (x - node) + scratch[k]
    poly[len] = 0;
    for (std::size_t i = len; i > 0; --i) {
      poly[i] = sub_mod(poly[i - 1], mul_mod(poly[i], node, p), p);
    }
    poly[0] = sub_mod(0, mul_mod(poly[0], node, p), p);
    poly[0] = add_mod(poly[0], scratch[k], p);
    ++len;
  }
  for (std::size_t i = 0; i < count; ++i) data[offset + i * stride] = poly[i];
}

}  // namespace

Polynomial det_modular(const PolyMatrix& m, const ModularOptions& options) {
  if (m.rows() != m.cols()) throw ContextError("matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(m.ring(), 1);

  std::vector<Polynomial> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries.push_back(m(i, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool row_zero = true, col_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      row_zero = row_zero && entries[i * n + j].is_zero();
      col_zero = col_zero && entries[j * n + i].is_zero();
    }
    if (row_zero || col_zero) return Polynomial(m.ring());
  }

  // Integer rows; the determinant picks up the product of the row scales.
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              denominator_lcm(entries[i * n + j]).get_mpz_t());
    }
    if (l != 1) {
      for (std::size_t j = 0; j < n; ++j) entries[i * n + j] *= Rational(l);
    }
    scale *= l;
  }

  // Homogeneous graded matrices are interpolated on the affine chart of the
  // last variable and rehomogenized afterwards.
  std::optional<int> graded;
  if (m.ring()->size() >= 1) graded = graded_degree(entries, n);
  RingPtr eval_ring = m.ring();
  if (graded) {
    for (auto& e : entries) e = dehomogenize(e, m.ring()->size() - 1);
    if (!entries.empty()) eval_ring = entries.front().ring();
  }
  const std::size_t nv = eval_ring->size();

  // Per-variable degree bounds from the column and row maxima.
  std::vector<std::size_t> bound(nv, 0);
  std::vector<std::uint32_t> max_exp(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    long by_col = 0, by_row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      int c = 0, r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        c = std::max(c, entries[i * n + j].degree_in(v));
        r = std::max(r, entries[j * n + i].degree_in(v));
      }
      by_col += c;
      by_row += r;
      max_exp[v] = std::max<std::uint32_t>(max_exp[v], std::max(c, r));
    }
    bound[v] = static_cast<std::size_t>(std::min(by_col, by_row));
  }

  // Coefficient height: |coeff(det)| <= ||det||_1 <= prod of row (or column)
  // sums of entry 1-norms.
  mpz_class row_product = 1, col_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class rs = 0, cs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rs += one_norm(entries[i * n + j]);
      cs += one_norm(entries[j * n + i]);
    }
    row_product *= rs;
    col_product *= cs;
  }
  const mpz_class target = 2 * std::min(row_product, col_product) + 1;

  std::vector<std::size_t> stride(nv, 1);
  std::size_t grid = 1;
  for (std::size_t v = nv; v-- > 0;) {
    stride[v] = grid;
    grid *= bound[v] + 1;
  }

  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<mpz_class> acc(grid);
  mpz_class modulus = 1;
  std::size_t prime_index = 0;
  while (modulus < target) {
    const std::uint64_t p = modular::table_prime(prime_index++);
    std::vector<std::vector<ModTerm>> mod_entries(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      for (const auto& t : entries[k].terms()) {
        const std::uint64_t c = modular::reduce(t.coefficient, p);
        if (c != 0) mod_entries[k].push_back({t.monomial.exponents(), c});
      }
    }
    // powers[v][t * (max_exp+1) + e] = t^e mod p
    std::vector<std::vector<std::uint64_t>> powers(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      const std::size_t w = max_exp[v] + 1;
      powers[v].resize((bound[v] + 1) * w);
      for (std::size_t t = 0; t <= bound[v]; ++t) {
        std::uint64_t acc_pow = 1;
        for (std::size_t e = 0; e < w; ++e) {
          powers[v][t * w + e] = acc_pow;
          acc_pow = mul_mod(acc_pow, t, p);
        }
      }
    }

    std::vector<std::uint64_t> values(grid);
    auto work = [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint64_t> mat(n * n);
      std::vector<std::size_t> coord(nv);
      for (std::size_t g = begin; g < end; ++g) {
        std::size_t rest = g;
        for (std::size_t v = 0; v < nv; ++v) {
          coord[v] = rest / stride[v];
          rest %= stride[v];
        }
        for (std::size_t k = 0; k < n * n; ++k) {
          std::uint64_t sum = 0;
          for (const auto& t : mod_entries[k]) {
            std::uint64_t term = t.coefficient;
            for (std::size_t v = 0; v < nv; ++v) {
              const auto e = t.exponents[v];
              if (e != 0) {
                term = mul_mod(term, powers[v][coord[v] * (max_exp[v] + 1) + e],
                               p);
              }
            }
            sum = add_mod(sum, term, p);
          }
          mat[k] = sum;
        }
        values[g] = modular::det_mod(mat, n, p);
      }
    };
    if (jobs == 1 || grid < 64) {
      work(0, grid);
    } else {
      std::vector<std::thread> threads;
      const std::size_t chunk = (grid + jobs - 1) / jobs;
      for (unsigned t = 0; t < jobs; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(grid, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(work, begin, end);
      }
      for (auto& th : threads) th.join();
    }

    // Interpolate one variable at a time.
    std::vector<std::uint64_t> scratch;
    for (std::size_t v = 0; v < nv; ++v) {
      const std::size_t count = bound[v] + 1;
      if (count == 1) continue;
      std::vector<std::uint64_t> inverses(count, 1);
      for (std::size_t k = 1; k < count; ++k) {
        inverses[k] = modular::inv_mod(k, p);
      }
      for (std::size_t g = 0; g < grid; ++g) {
        if ((g / stride[v]) % count != 0) continue;
        interpolate_line(values, g, stride[v], count, inverses, p, scratch);
      }
    }

    // Incremental CRT.
    if (modulus == 1) {
      for (std::size_t g = 0; g < grid; ++g) acc[g] = values[g];
    } else {
      const std::uint64_t m_inv = modular::inv_mod(modular::reduce(modulus, p), p);
      for (std::size_t g = 0; g < grid; ++g) {
        const std::uint64_t current = modular::reduce(acc[g], p);
        const std::uint64_t delta =
            mul_mod(sub_mod(values[g], current, p), m_inv, p);
        if (delta != 0) acc[g] += modulus * delta;
      }
    }
    modulus *= p;
  }

  std::vector<Term> terms;
  for (std::size_t g = 0; g < grid; ++g) {
    if (acc[g] == 0) continue;
    mpz_class value = modular::symmetric_lift(acc[g], modulus);
    if (value == 0) continue;
    Monomial::Exponents e(nv, 0);
    std::size_t rest = g;
    for (std::size_t v = 0; v < nv; ++v) {
      e[v] = static_cast<std::uint32_t>(rest / stride[v]);
      rest %= stride[v];
    }
    if (graded) {
      std::uint32_t deg = 0;
      for (auto x : e) deg += x;
      if (static_cast<int>(deg) > *graded) {
        throw InternalConsistencyError(
            "interpolated determinant exceeds its homogeneous degree");
      }
      e.push_back(static_cast<std::uint32_t>(*graded) - deg);
    }
    Rational c(value, scale);
    c.canonicalize();
    terms.push_back(Term{Monomial(std::move(e)), std::move(c)});
  }
  return Polynomial::from_terms(m.ring(), std::move(terms));
}

}  // namespace extatica
