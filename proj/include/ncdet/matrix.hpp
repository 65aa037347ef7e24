#pragma once

// Dense m x n matrices over H(a,b). Indices are 0-based throughout the
// library; the CLI converts from and to 1-based indices at its boundary.
// Columns are n x 1 matrices and rows are 1 x n matrices.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ncdet/quaternion.hpp"

namespace ncdet {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

template <class F>
class QMatrix {
public:
  using value_type = Quaternion<F>;

  QMatrix(Algebra<F> alg, Index rows, Index cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, value_type::zero(alg)), alg_(std::move(alg)) {}

  QMatrix(Algebra<F> alg, Index rows, Index cols, std::vector<value_type> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)), alg_(std::move(alg)) {
    if (entries_.size() != rows_ * cols_)
      throw shape_error("entry count does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
    for (const auto& e : entries_)
      if (!(e.algebra() == alg_))
        throw algebra_mismatch("matrix entry from a different algebra");
  }

  static QMatrix identity(const Algebra<F>& alg, Index n) {
    QMatrix m(alg, n, n);
    for (Index d = 0; d < n; ++d)
      m.set(d, d, value_type::one(alg));
    return m;
  }

  static QMatrix from_rows(const Algebra<F>& alg, const std::vector<std::vector<value_type>>& rows) {
    Index r = rows.size();
    Index c = r ? rows.front().size() : 0;
    std::vector<value_type> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c)
        throw shape_error("ragged rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return QMatrix(alg, r, c, std::move(flat));
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Algebra<F>& algebra() const { return alg_; }
  const std::vector<value_type>& entries() const { return entries_; }

  const value_type& operator()(Index r, Index c) const { return entries_[r * cols_ + c]; }

  const value_type& at(Index r, Index c) const {
    check_index(r, c);
    return (*this)(r, c);
  }

  void set(Index r, Index c, value_type q) {
    check_index(r, c);
    if (!(q.algebra() == alg_))
      throw algebra_mismatch("matrix entry from a different algebra");
    entries_[r * cols_ + c] = std::move(q);
  }

  QMatrix row(Index r) const { return select(IndexSet{r}, all(cols_)); }
  QMatrix col(Index c) const { return select(all(rows_), IndexSet{c}); }

  /// Submatrix on the given row and column index lists, in the given order.
  QMatrix select(const IndexSet& rs, const IndexSet& cs) const {
    std::vector<value_type> out;
    out.reserve(rs.size() * cs.size());
    for (Index r : rs)
      for (Index c : cs)
        out.push_back(at(r, c));
    return QMatrix(alg_, rs.size(), cs.size(), std::move(out));
  }

  /// (A*)_ij = conj(a_ji)
  QMatrix adjoint() const {
    QMatrix out(alg_, cols_, rows_);
    for (Index r = 0; r < rows_; ++r)
      for (Index c = 0; c < cols_; ++c)
        out.entries_[c * rows_ + r] = (*this)(r, c).conj();
    return out;
  }

  friend QMatrix operator*(const QMatrix& l, const QMatrix& r) {
    l.check_algebra(r);
    if (l.cols_ != r.rows_)
      throw shape_error("matmul: " + l.shape() + " times " + r.shape());
    QMatrix out(l.alg_, l.rows_, r.cols_);
    const auto& p = l.alg_.params();
    detail::Coords<F> term;
    for (Index i = 0; i < l.rows_; ++i)
      for (Index j = 0; j < r.cols_; ++j) {
        detail::Coords<F> acc{};
        for (Index k = 0; k < l.cols_; ++k) {
          detail::mul_into(term, l(i, k).coords(), r(k, j).coords(), p);
          detail::add_into(acc, term);
        }
        out.entries_[i * r.cols_ + j] = value_type(l.alg_, std::move(acc));
      }
    return out;
  }

  friend QMatrix operator+(const QMatrix& l, const QMatrix& r) {
    l.check_same_shape(r);
    QMatrix out = l;
    for (Index k = 0; k < out.entries_.size(); ++k)
      out.entries_[k] += r.entries_[k];
    return out;
  }

  friend QMatrix operator-(const QMatrix& l, const QMatrix& r) {
    l.check_same_shape(r);
    QMatrix out = l;
    for (Index k = 0; k < out.entries_.size(); ++k)
      out.entries_[k] -= r.entries_[k];
    return out;
  }

  friend QMatrix operator*(const QMatrix& m, const F& s) {
    QMatrix out = m;
    for (auto& e : out.entries_)
      e = e * s;
    return out;
  }

  friend bool operator==(const QMatrix& l, const QMatrix& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.alg_ == r.alg_ && l.entries_ == r.entries_;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const value_type& q) { return q.is_zero(); });
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// One row per line, entries in "x0,x1,x2,x3" form separated by "; ".
  std::string to_string() const {
    std::string s;
    for (Index r = 0; r < rows_; ++r) {
      s += "[";
      for (Index c = 0; c < cols_; ++c) {
        if (c)
          s += "; ";
        s += (*this)(r, c).to_string();
      }
      s += "]\n";
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const QMatrix& m) { return os << m.to_string(); }

  void check_algebra(const QMatrix& o) const {
    if (!(alg_ == o.alg_))
      throw algebra_mismatch("matrices belong to different algebras H(a,b)");
  }

  static IndexSet all(Index n) {
    IndexSet s(n);
    for (Index k = 0; k < n; ++k)
      s[k] = k;
    return s;
  }

private:
  void check_index(Index r, Index c) const {
    if (r >= rows_ || c >= cols_)
      throw shape_error("index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range for " + shape());
  }
  void check_same_shape(const QMatrix& o) const {
    check_algebra(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw shape_error("shape mismatch: " + shape() + " vs " + o.shape());
  }

  Index rows_;
  Index cols_;
  std::vector<value_type> entries_;
  Algebra<F> alg_;
};

template <class F>
QMatrix<F> matmul(const QMatrix<F>& a, const QMatrix<F>& b) {
  return a * b;
}

template <class F>
QMatrix<F> hermitian_adjoint(const QMatrix<F>& a) {
  return a.adjoint();
}

template <class F>
void require_square(const QMatrix<F>& a, const char* what) {
  if (!a.is_square())
    throw shape_error(std::string(what) + " requires a square matrix, got " + a.shape());
}

/// a_ij = conj(a_ji) for all i, j; false for non-square matrices.
template <class F>
bool is_hermitian(const QMatrix<F>& a) {
  if (!a.is_square())
    return false;
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = r; c < a.cols(); ++c)
      if (!(a(r, c) == a(c, r).conj()))
        return false;
  return true;
}

/// A_{.j}(b): column j replaced by the column b (n x 1, or 1 x n read as a column).
template <class F>
QMatrix<F> replace_col(const QMatrix<F>& a, Index j, const QMatrix<F>& b) {
  a.check_algebra(b);
  bool as_col = b.cols() == 1 && b.rows() == a.rows();
  bool as_row = b.rows() == 1 && b.cols() == a.rows();
  if (!as_col && !as_row)
    throw shape_error("replace_col: vector " + b.shape() + " does not fit " + a.shape());
  if (j >= a.cols())
    throw shape_error("replace_col: column index out of range");
  QMatrix<F> out = a;
  for (Index r = 0; r < a.rows(); ++r)
    out.set(r, j, as_col ? b(r, 0) : b(0, r));
  return out;
}

/// A_{i.}(b): row i replaced by the row b (1 x n, or n x 1 read as a row).
template <class F>
QMatrix<F> replace_row(const QMatrix<F>& a, Index i, const QMatrix<F>& b) {
  a.check_algebra(b);
  bool as_row = b.rows() == 1 && b.cols() == a.cols();
  bool as_col = b.cols() == 1 && b.rows() == a.cols();
  if (!as_col && !as_row)
    throw shape_error("replace_row: vector " + b.shape() + " does not fit " + a.shape());
  if (i >= a.rows())
    throw shape_error("replace_row: row index out of range");
  QMatrix<F> out = a;
  for (Index c = 0; c < a.cols(); ++c)
    out.set(i, c, as_row ? b(0, c) : b(c, 0));
  return out;
}

/// Complement of `drop` in {0..n-1}, ascending.
inline IndexSet complement(Index n, const IndexSet& drop) {
  IndexSet keep;
  for (Index k = 0; k < n; ++k)
    if (std::find(drop.begin(), drop.end(), k) == drop.end())
      keep.push_back(k);
  return keep;
}

/// Deletes the listed rows and columns; remaining entries keep their relative order.
template <class F>
QMatrix<F> delete_rows_cols(const QMatrix<F>& a, const IndexSet& rows, const IndexSet& cols) {
  for (Index r : rows)
    if (r >= a.rows())
      throw shape_error("delete: row index out of range");
  for (Index c : cols)
    if (c >= a.cols())
      throw shape_error("delete: column index out of range");
  IndexSet kr = complement(a.rows(), rows);
  IndexSet kc = complement(a.cols(), cols);
  if (kr.empty() || kc.empty())
    throw shape_error("delete: empty result from " + a.shape());
  return a.select(kr, kc);
}

/// The minor A^{ij}: row i and column j deleted.
template <class F>
QMatrix<F> delete_rowcol(const QMatrix<F>& a, Index i, Index j) {
  return delete_rows_cols(a, IndexSet{i}, IndexSet{j});
}

/// A(i -> j): column j replaced by column i, then row i and column i deleted.
template <class F>
QMatrix<F> col_replace_then_delete(const QMatrix<F>& a, Index i, Index j) {
  require_square(a, "col_replace_then_delete");
  if (i >= a.rows() || j >= a.rows())
    throw shape_error("col_replace_then_delete: index out of range");
  return delete_rowcol(replace_col(a, j, a.col(i)), i, i);
}

/// Mirror of col_replace_then_delete: row i replaced by row j, then row j and column j deleted.
template <class F>
QMatrix<F> row_replace_then_delete(const QMatrix<F>& a, Index j, Index i) {
  require_square(a, "row_replace_then_delete");
  if (i >= a.rows() || j >= a.rows())
    throw shape_error("row_replace_then_delete: index out of range");
  return delete_rowcol(replace_row(a, i, a.row(j)), j, j);
}

} // namespace ncdet
