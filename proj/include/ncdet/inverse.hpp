#pragma once

// Double cofactors, the determinantal inverse and Cramer-type solvers for
// right systems A x = y and left systems x A = y.

#include <utility>

#include "ncdet/determinant.hpp"

namespace ncdet {

template <class F>
struct DoubleCofactors {
  QMatrix<F> left;   // L_ij = cdet_j (A*A)_{.j}(a*_{.i})
  QMatrix<F> right;  // R_ij = rdet_i (AA*)_{i.}(a*_{j.})
};

template <class F>
DoubleCofactors<F> double_cofactors(const QMatrix<F>& a, const DetOptions& opts = {}) {
  require_square(a, "double_cofactors");
  const Index n = a.rows();
  const QMatrix<F> as = a.adjoint();
  const QMatrix<F> left_h = as * a;
  const QMatrix<F> right_h = a * as;
  DoubleCofactors<F> out{QMatrix<F>(a.algebra(), n, n), QMatrix<F>(a.algebra(), n, n)};
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      out.left.set(i, j, cdet(replace_col(left_h, j, as.col(i)), j, opts));
      out.right.set(i, j, rdet(replace_row(right_h, i, as.row(j)), i, opts));
    }
  return out;
}

namespace detail {

template <class F>
F nonzero_ddet(const QMatrix<F>& a, const DetOptions& opts, const char* what) {
  F d = ddet(a, opts);
  if (scalar_traits<F>::is_zero(d))
    throw singular_matrix(std::string(what) + ": ddet A = 0");
  return d;
}

/// Entry (j,i) of the result is cof(i,j) / d.
template <class F>
QMatrix<F> transpose_scaled(const QMatrix<F>& cof, const F& d) {
  const Index n = cof.rows();
  F inv = scalar_traits<F>::one() / d;
  QMatrix<F> out(cof.algebra(), n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      out.set(j, i, cof(i, j) * inv);
  return out;
}

} // namespace detail

/// A^{-1} = (1 / ddet A) [L_ij placed at (j,i)]. Throws singular_matrix when ddet A = 0.
template <class F>
QMatrix<F> inverse(const QMatrix<F>& a, const DetOptions& opts = {}) {
  require_square(a, "inverse");
  F d = detail::nonzero_ddet(a, opts, "inverse");
  return detail::transpose_scaled(double_cofactors(a, opts).left, d);
}

/// The same inverse assembled from the right double cofactors.
template <class F>
QMatrix<F> inverse_from_right_cofactors(const QMatrix<F>& a, const DetOptions& opts = {}) {
  require_square(a, "inverse");
  F d = detail::nonzero_ddet(a, opts, "inverse");
  return detail::transpose_scaled(double_cofactors(a, opts).right, d);
}

namespace detail {

template <class F>
void check_rhs(const QMatrix<F>& a, const QMatrix<F>& y, bool column, const char* what) {
  require_square(a, what);
  a.check_algebra(y);
  bool ok = column ? (y.cols() == 1 && y.rows() == a.rows()) : (y.rows() == 1 && y.cols() == a.cols());
  if (!ok)
    throw shape_error(std::string(what) + ": right-hand side " + y.shape() + " does not fit " + a.shape());
}

} // namespace detail

/// Right system A x = y: x_j = cdet_j (A*A)_{.j}(f) / ddet A with f = A* y.
template <class F>
QMatrix<F> solve_right(const QMatrix<F>& a, const QMatrix<F>& y, const DetOptions& opts = {}) {
  detail::check_rhs(a, y, true, "solve_right");
  F inv = scalar_traits<F>::one() / detail::nonzero_ddet(a, opts, "solve_right");
  const QMatrix<F> as = a.adjoint();
  const QMatrix<F> h = as * a;
  const QMatrix<F> f = as * y;
  QMatrix<F> x(a.algebra(), a.rows(), 1);
  for (Index j = 0; j < a.rows(); ++j)
    x.set(j, 0, cdet(replace_col(h, j, f), j, opts) * inv);
  return x;
}

/// Left system x A = y: x_i = rdet_i (AA*)_{i.}(z) / ddet A with z = y A*.
template <class F>
QMatrix<F> solve_left(const QMatrix<F>& a, const QMatrix<F>& y, const DetOptions& opts = {}) {
  detail::check_rhs(a, y, false, "solve_left");
  F inv = scalar_traits<F>::one() / detail::nonzero_ddet(a, opts, "solve_left");
  const QMatrix<F> as = a.adjoint();
  const QMatrix<F> h = a * as;
  const QMatrix<F> z = y * as;
  QMatrix<F> x(a.algebra(), 1, a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    x.set(0, i, rdet(replace_row(h, i, z), i, opts) * inv);
  return x;
}

namespace detail {

template <class F>
F nonzero_hermitian_det(const QMatrix<F>& a, const DetOptions& opts, const char* what) {
  if (!is_hermitian(a))
    throw not_hermitian(std::string(what) + " requires a Hermitian matrix");
  F d = hermitian_det(a, opts);
  if (scalar_traits<F>::is_zero(d))
    throw singular_matrix(std::string(what) + ": det A = 0");
  return d;
}

} // namespace detail

/// Hermitian right system: x_j = cdet_j A_{.j}(y) / det A.
template <class F>
QMatrix<F> solve_right_hermitian(const QMatrix<F>& a, const QMatrix<F>& y, const DetOptions& opts = {}) {
  detail::check_rhs(a, y, true, "solve_right_hermitian");
  F inv = scalar_traits<F>::one() / detail::nonzero_hermitian_det(a, opts, "solve_right_hermitian");
  QMatrix<F> x(a.algebra(), a.rows(), 1);
  for (Index j = 0; j < a.rows(); ++j)
    x.set(j, 0, cdet(replace_col(a, j, y), j, opts) * inv);
  return x;
}

/// Hermitian left system: x_i = rdet_i A_{i.}(y) / det A.
template <class F>
QMatrix<F> solve_left_hermitian(const QMatrix<F>& a, const QMatrix<F>& y, const DetOptions& opts = {}) {
  detail::check_rhs(a, y, false, "solve_left_hermitian");
  F inv = scalar_traits<F>::one() / detail::nonzero_hermitian_det(a, opts, "solve_left_hermitian");
  QMatrix<F> x(a.algebra(), 1, a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    x.set(0, i, rdet(replace_row(a, i, y), i, opts) * inv);
  return x;
}

} // namespace ncdet
