#pragma once

// Seeded generators of small random quaternions and matrices.

#include <cstdint>
#include <random>

#include "ncdet/determinant.hpp"

namespace ncdet {

using Rng = std::mt19937_64;

struct RandomRange {
  int magnitude = 5;  // numerators in [-magnitude, magnitude]
  int max_den = 3;    // denominators in [1, max_den]
};

template <class F>
F random_scalar(Rng& rng, const RandomRange& range = {}) {
  std::uniform_int_distribution<int> num(-range.magnitude, range.magnitude);
  std::uniform_int_distribution<int> den(1, range.max_den);
  int p = num(rng);
  int q = den(rng);
  F out = scalar_traits<F>::from_int(p) / scalar_traits<F>::from_int(q);
  return out;
}

template <class F>
Quaternion<F> random_quaternion(Rng& rng, const Algebra<F>& alg, const RandomRange& range = {}) {
  F x0 = random_scalar<F>(rng, range);
  F x1 = random_scalar<F>(rng, range);
  F x2 = random_scalar<F>(rng, range);
  F x3 = random_scalar<F>(rng, range);
  return Quaternion<F>(alg, std::move(x0), std::move(x1), std::move(x2), std::move(x3));
}

template <class F>
Quaternion<F> random_nonzero_quaternion(Rng& rng, const Algebra<F>& alg, const RandomRange& range = {}) {
  for (;;) {
    Quaternion<F> q = random_quaternion(rng, alg, range);
    if (!q.is_zero())
      return q;
  }
}

template <class F>
QMatrix<F> random_matrix(Rng& rng, const Algebra<F>& alg, Index rows, Index cols, const RandomRange& range = {}) {
  std::vector<Quaternion<F>> e;
  e.reserve(rows * cols);
  for (Index k = 0; k < rows * cols; ++k)
    e.push_back(random_quaternion(rng, alg, range));
  return QMatrix<F>(alg, rows, cols, std::move(e));
}

/// Entries with zero imaginary part.
template <class F>
QMatrix<F> random_real_matrix(Rng& rng, const Algebra<F>& alg, Index n, const RandomRange& range = {}) {
  std::vector<Quaternion<F>> e;
  for (Index k = 0; k < n * n; ++k)
    e.push_back(Quaternion<F>::scalar(alg, random_scalar<F>(rng, range)));
  return QMatrix<F>(alg, n, n, std::move(e));
}

/// Random square matrix with ddet != 0 (resampled until found).
template <class F>
QMatrix<F> random_invertible(Rng& rng, const Algebra<F>& alg, Index n, const RandomRange& range = {}) {
  for (;;) {
    QMatrix<F> m = random_matrix(rng, alg, n, n, range);
    DetOptions fast;
    fast.verify_hermitian = false;
    fast.cross_check_ddet = false;
    if (!scalar_traits<F>::is_zero(ddet(m, fast)))
      return m;
  }
}

} // namespace ncdet
