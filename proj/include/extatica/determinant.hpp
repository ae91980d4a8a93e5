#pragma once

#include <cstddef>
#include <vector>

#include "extatica/polynomial.hpp"

namespace extatica {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  Polynomial& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Polynomial& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// Submatrix on the given rows and columns, in the order given.
  PolyMatrix select(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) const;

  /// Entrywise evaluation over Q, row-major.
  std::vector<Rational> evaluate(std::span<const Rational> point) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// Determinant by Bareiss fraction-free elimination over Q[x].
Polynomial det_fraction_free(const PolyMatrix& m);

struct ModularOptions {
  /// Worker threads for the evaluation phase; 0 means one.
  unsigned jobs = 1;
};

/// Determinant by evaluation at a tensor grid modulo word-size primes,
/// per-prime interpolation and Chinese remaindering. Rows are first scaled
/// to integer coefficients and the number of primes is fixed in advance by a
/// norm bound, so the result is exact and never probabilistic.
Polynomial det_modular(const PolyMatrix& m, const ModularOptions& options = {});

/// Determinant of a square rational matrix (row-major) by Gaussian
/// elimination.
Rational det_rational(std::vector<Rational> a, std::size_t n);

}  // namespace extatica
