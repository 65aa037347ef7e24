#pragma once

// Quasideterminants over H(a,b), block inversion, elimination solvers and the
// representation of quasideterminants through row and column determinants.
//
// |A|_{ij} = a_ij - r_i^j (A^{ij})^{-1} c_j^i, where r_i^j is row i without
// entry j and c_j^i is column j without entry i. When A is invertible and
// b = A^{-1}, |A|_{ij} = b_ji^{-1} whenever b_ji is invertible; the two need
// not be defined together (|A|_{12} of the identity is undefined).

#include <optional>
#include <string>

#include "ncdet/inverse.hpp"

namespace ncdet {

enum class FailureKind {
  minor_singular,        // A^{ij} has ddet = 0
  complement_singular,   // complementary block of a block inverse has ddet = 0
  schur_singular,        // Schur-type complement has ddet = 0
  cofactor_zero_norm,    // double cofactor with n = 0
  entry_not_invertible,  // entry of A^{-1} with n = 0
  matrix_singular,       // ddet A = 0
};

inline const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::minor_singular: return "minor_singular";
    case FailureKind::complement_singular: return "complement_singular";
    case FailureKind::schur_singular: return "schur_singular";
    case FailureKind::cofactor_zero_norm: return "cofactor_zero_norm";
    case FailureKind::entry_not_invertible: return "entry_not_invertible";
    case FailureKind::matrix_singular: return "matrix_singular";
  }
  return "?";
}

/// The sub-object that made a value undefined, with 0-based row/column indices.
struct Witness {
  FailureKind kind;
  IndexSet rows;
  IndexSet cols;
  std::string detail;
};

/// Either a value or the witness of why it is undefined.
template <class T>
struct Outcome {
  std::optional<T> value;
  std::optional<Witness> failure;

  static Outcome ok(T v) { return Outcome{std::move(v), std::nullopt}; }
  static Outcome undefined(Witness w) { return Outcome{std::nullopt, std::move(w)}; }

  bool defined() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

template <class F>
using QuasiResult = Outcome<Quaternion<F>>;

struct QuasiOptions {
  DetOptions det;
  /// Compare with b_ji^{-1} when A is invertible and b_ji has nonzero norm.
  bool cross_check = true;
};

/// Thrown by hadamard_inverse; row() and col() are 0-based.
class undefined_entry : public not_invertible {
public:
  undefined_entry(Index r, Index c)
      : not_invertible("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") has zero norm"),
        row_(r), col_(c) {}
  Index row() const noexcept { return row_; }
  Index col() const noexcept { return col_; }

private:
  Index row_, col_;
};

/// Entrywise inverse.
template <class F>
QMatrix<F> hadamard_inverse(const QMatrix<F>& a) {
  QMatrix<F> out(a.algebra(), a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) {
      if (!a(r, c).invertible())
        throw undefined_entry(r, c);
      out.set(r, c, a(r, c).inverse());
    }
  return out;
}

/// |A|_{ij} through the entry (j,i) of A^{-1}.
template <class F>
QuasiResult<F> quasideterminant_via_inverse(const QMatrix<F>& a, Index i, Index j, const DetOptions& opts = {}) {
  require_square(a, "quasideterminant");
  if (scalar_traits<F>::is_zero(ddet(a, opts)))
    return QuasiResult<F>::undefined({FailureKind::matrix_singular, QMatrix<F>::all(a.rows()),
                                      QMatrix<F>::all(a.cols()), "ddet A = 0"});
  Quaternion<F> b = inverse(a, opts).at(j, i);
  if (!b.invertible())
    return QuasiResult<F>::undefined(
        {FailureKind::entry_not_invertible, {j}, {i}, "entry of the inverse has zero norm: " + b.to_string()});
  return QuasiResult<F>::ok(b.inverse());
}

/// |A|_{ij} = a_ij - r_i^j (A^{ij})^{-1} c_j^i; a_11 when n = 1.
template <class F>
QuasiResult<F> quasideterminant(const QMatrix<F>& a, Index i, Index j, const QuasiOptions& opts = {}) {
  require_square(a, "quasideterminant");
  const Index n = a.rows();
  if (n == 0)
    throw shape_error("quasideterminant of an empty matrix");
  if (i >= n || j >= n)
    throw shape_error("quasideterminant: index out of range");
  if (n == 1)
    return QuasiResult<F>::ok(a(0, 0));

  const QMatrix<F> minor = delete_rowcol(a, i, j);
  if (scalar_traits<F>::is_zero(ddet(minor, opts.det)))
    return QuasiResult<F>::undefined({FailureKind::minor_singular, {i}, {j}, "deletion minor has ddet = 0"});

  const IndexSet other_rows = complement(n, {i});
  const IndexSet other_cols = complement(n, {j});
  const QMatrix<F> row = a.select({i}, other_cols);
  const QMatrix<F> col = a.select(other_rows, {j});
  Quaternion<F> value = a(i, j) - (row * inverse(minor, opts.det) * col)(0, 0);

  if (opts.cross_check) {
    QuasiResult<F> other = quasideterminant_via_inverse(a, i, j, opts.det);
    if (other.defined() && !(*other == value))
      throw internal_disagreement("quasideterminant: deletion-minor expression " + value.to_string() +
                                  " differs from the inverse-entry value " + other->to_string());
  }
  return QuasiResult<F>::ok(std::move(value));
}

/// Submatrix (A^{-1})_{J,I} for row set I and column set J of equal size:
/// (A_IJ - A_IJ' (A_I'J')^{-1} A_I'J)^{-1}, primes denoting complements.
template <class F>
Outcome<QMatrix<F>> block_inverse_minor(const QMatrix<F>& a, const IndexSet& rows, const IndexSet& cols,
                                        const DetOptions& opts = {}) {
  require_square(a, "block_inverse_minor");
  if (rows.empty() || rows.size() != cols.size())
    throw shape_error("block_inverse_minor: row and column sets must be nonempty and of equal size");
  const Index n = a.rows();
  const IndexSet crow = complement(n, rows);
  const IndexSet ccol = complement(n, cols);
  if (crow.size() != n - rows.size() || ccol.size() != n - cols.size())
    throw shape_error("block_inverse_minor: repeated or out-of-range index");

  QMatrix<F> schur = a.select(rows, cols);
  if (!crow.empty()) {
    const QMatrix<F> block = a.select(crow, ccol);
    if (scalar_traits<F>::is_zero(ddet(block, opts)))
      return Outcome<QMatrix<F>>::undefined(
          {FailureKind::complement_singular, crow, ccol, "complementary block has ddet = 0"});
    schur = schur - a.select(rows, ccol) * inverse(block, opts) * a.select(crow, cols);
  }
  if (scalar_traits<F>::is_zero(ddet(schur, opts)))
    return Outcome<QMatrix<F>>::undefined({FailureKind::schur_singular, rows, cols, "complement has ddet = 0"});
  return Outcome<QMatrix<F>>::ok(inverse(schur, opts));
}

namespace detail {

/// Among candidates with nonzero norm pick the one of maximal |norm|.
/// Returns `end` when none; sets `nonzero` if any candidate was nonzero.
template <class F, class Get>
Index max_norm_pivot(Index begin, Index end, Get get, bool& nonzero) {
  Index best = end;
  F best_norm = scalar_traits<F>::zero();
  nonzero = false;
  for (Index t = begin; t < end; ++t) {
    const Quaternion<F>& q = get(t);
    if (q.is_zero())
      continue;
    nonzero = true;
    F nrm = scalar_traits<F>::abs(q.norm());
    if (scalar_traits<F>::is_zero(nrm))
      continue;
    if (best == end || best_norm < nrm) {
      best = t;
      best_norm = nrm;
    }
  }
  return best;
}

} // namespace detail

/// Right system A x = y by Gauss-Jordan elimination with left row operations.
template <class F>
QMatrix<F> quasi_solve(const QMatrix<F>& a, const QMatrix<F>& y) {
  detail::check_rhs(a, y, true, "quasi_solve");
  const Index n = a.rows();
  QMatrix<F> m(a.algebra(), n, n + 1);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c)
      m.set(r, c, a(r, c));
    m.set(r, n, y(r, 0));
  }
  for (Index c = 0; c < n; ++c) {
    bool nonzero = false;
    Index p = detail::max_norm_pivot<F>(c, n, [&](Index t) -> const Quaternion<F>& { return m(t, c); }, nonzero);
    if (p == n) {
      if (nonzero) {
        IndexSet rs, cs;
        for (Index t = c; t < n; ++t)
          rs.push_back(t);
        for (Index t = c; t < n; ++t)
          cs.push_back(t);
        throw elimination_stall("quasi_solve: no invertible pivot in column " + std::to_string(c + 1),
                                m.select(rs, cs).to_string());
      }
      throw singular_matrix("quasi_solve: matrix is singular");
    }
    if (p != c)
      for (Index t = 0; t <= n; ++t) {
        Quaternion<F> tmp = m(c, t);
        m.set(c, t, m(p, t));
        m.set(p, t, tmp);
      }
    const Quaternion<F> inv = m(c, c).inverse();
    for (Index t = c; t <= n; ++t)
      m.set(c, t, inv * m(c, t));
    for (Index r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero())
        continue;
      const Quaternion<F> factor = m(r, c);
      for (Index t = c; t <= n; ++t)
        m.set(r, t, m(r, t) - factor * m(c, t));
    }
  }
  return m.select(QMatrix<F>::all(n), {n});
}

/// Left system x A = y by elimination with right column operations.
template <class F>
QMatrix<F> quasi_solve_left(const QMatrix<F>& a, const QMatrix<F>& y) {
  detail::check_rhs(a, y, false, "quasi_solve_left");
  const Index n = a.rows();
  QMatrix<F> m(a.algebra(), n + 1, n);
  for (Index c = 0; c < n; ++c) {
    for (Index r = 0; r < n; ++r)
      m.set(r, c, a(r, c));
    m.set(n, c, y(0, c));
  }
  for (Index r = 0; r < n; ++r) {
    bool nonzero = false;
    Index p = detail::max_norm_pivot<F>(r, n, [&](Index t) -> const Quaternion<F>& { return m(r, t); }, nonzero);
    if (p == n) {
      if (nonzero) {
        IndexSet rs, cs;
        for (Index t = r; t < n; ++t)
          rs.push_back(t);
        for (Index t = r; t < n; ++t)
          cs.push_back(t);
        throw elimination_stall("quasi_solve_left: no invertible pivot in row " + std::to_string(r + 1),
                                m.select(rs, cs).to_string());
      }
      throw singular_matrix("quasi_solve_left: matrix is singular");
    }
    if (p != r)
      for (Index t = 0; t <= n; ++t) {
        Quaternion<F> tmp = m(t, r);
        m.set(t, r, m(t, p));
        m.set(t, p, tmp);
      }
    const Quaternion<F> inv = m(r, r).inverse();
    for (Index t = r; t <= n; ++t)
      m.set(t, r, m(t, r) * inv);
    for (Index c = 0; c < n; ++c) {
      if (c == r || m(r, c).is_zero())
        continue;
      const Quaternion<F> factor = m(r, c);
      for (Index t = r; t <= n; ++t)
        m.set(t, c, m(t, c) - m(t, r) * factor);
    }
  }
  return m.select({n}, QMatrix<F>::all(n));
}

template <class F>
struct CorrespondenceForms {
  QuasiResult<F> column_form;  // ddet A conj(L_pq) / n(L_pq)
  QuasiResult<F> row_form;     // ddet A conj(R_pq) / n(R_pq)
};

/// |A|_{pq} through the double cofactors L_pq = cdet_q (A*A)_{.q}(a*_{.p}) and
/// R_pq = rdet_p (AA*)_{p.}(a*_{q.}). Throws singular_matrix when ddet A = 0.
template <class F>
CorrespondenceForms<F> quasidet_via_rc(const QMatrix<F>& a, Index p, Index q, const DetOptions& opts = {}) {
  require_square(a, "quasidet_via_rc");
  if (p >= a.rows() || q >= a.rows())
    throw shape_error("quasidet_via_rc: index out of range");
  F d = detail::nonzero_ddet(a, opts, "quasidet_via_rc");
  const QMatrix<F> as = a.adjoint();
  const Quaternion<F> left = cdet(replace_col(as * a, q, as.col(p)), q, opts);
  const Quaternion<F> right = rdet(replace_row(a * as, p, as.row(q)), p, opts);
  auto form = [&](const Quaternion<F>& cof, const char* name) {
    F nrm = cof.norm();
    if (scalar_traits<F>::is_zero(nrm))
      return QuasiResult<F>::undefined(
          {FailureKind::cofactor_zero_norm, {p}, {q}, std::string(name) + " double cofactor has zero norm"});
    return QuasiResult<F>::ok(cof.conj() * F(d / nrm));
  };
  return CorrespondenceForms<F>{form(left, "left"), form(right, "right")};
}

} // namespace ncdet
