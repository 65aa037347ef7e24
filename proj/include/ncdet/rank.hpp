#pragma once

#include <functional>

#include "ncdet/determinant.hpp"

namespace ncdet {

/// Maximal number of right-linearly independent columns.
///
/// Row echelon reduction with left row operations, which preserve right
/// linear relations among columns. The pivot in each column is the first
/// remaining entry with nonzero norm. In a non-division algebra a column may
/// hold nonzero entries none of which is invertible; elimination then stops
/// with elimination_stall carrying the remaining submatrix.
template <class F>
Index rank(const QMatrix<F>& a) {
  QMatrix<F> m = a;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = rows;
    bool nonzero = false;
    for (Index t = r; t < rows; ++t) {
      if (m(t, c).is_zero())
        continue;
      nonzero = true;
      if (m(t, c).invertible()) {
        pivot = t;
        break;
      }
    }
    if (pivot == rows) {
      if (nonzero) {
        IndexSet rs, cs;
        for (Index t = r; t < rows; ++t)
          rs.push_back(t);
        for (Index t = c; t < cols; ++t)
          cs.push_back(t);
        throw elimination_stall("rank: column " + std::to_string(c + 1) + " has nonzero entries but none invertible",
                                m.select(rs, cs).to_string());
      }
      continue;
    }
    if (pivot != r)
      for (Index t = 0; t < cols; ++t) {
        Quaternion<F> tmp = m(r, t);
        m.set(r, t, m(pivot, t));
        m.set(pivot, t, tmp);
      }
    const Quaternion<F> inv = m(r, c).inverse();
    for (Index t = r + 1; t < rows; ++t) {
      if (m(t, c).is_zero())
        continue;
      const Quaternion<F> factor = m(t, c) * inv;
      for (Index u = c; u < cols; ++u)
        m.set(t, u, m(t, u) - factor * m(r, u));
    }
    ++r;
  }
  return r;
}

/// Maximal order of a principal submatrix with nonzero determinant, by
/// exhaustive search over index subsets. Bounded to order 6 unless allow_large.
template <class F>
Index principal_minor_rank(const QMatrix<F>& h, const DetOptions& opts = {}) {
  require_square(h, "principal_minor_rank");
  if (!is_hermitian(h))
    throw not_hermitian("principal_minor_rank requires a Hermitian matrix");
  const Index n = h.rows();
  if (n > 6 && !opts.allow_large)
    throw enumeration_limit("principal_minor_rank: order " + std::to_string(n) + " exceeds 6");

  IndexSet subset;
  std::function<bool(Index, Index)> search = [&](Index from, Index k) -> bool {
    if (subset.size() == k)
      return !scalar_traits<F>::is_zero(hermitian_det(h.select(subset, subset), opts));
    for (Index t = from; t < n; ++t) {
      subset.push_back(t);
      bool hit = search(t + 1, k);
      subset.pop_back();
      if (hit)
        return true;
    }
    return false;
  };
  for (Index k = n; k > 0; --k)
    if (search(0, k))
      return k;
  return 0;
}

} // namespace ncdet
