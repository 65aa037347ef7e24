#pragma once

// Row and column determinants of square matrices over H(a,b), their cofactor
// expansions, the Moore recursion, the determinant of a Hermitian matrix and
// the double determinant.
//
// rdet_i A sums (-1)^(n-r) over all permutations, reading each monomial
// along the left-ordered cycle notation anchored at i: a cycle (c0 c1 .. cl)
// contributes a_{c0 c1} a_{c1 c2} ... a_{cl c0}. cdet_j A uses the mirrored
// right-ordered notation anchored at j and writes factors right to left.
// The identity rdet_j(A*) = conj(cdet_j A) relates the two.

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "ncdet/cycles.hpp"
#include "ncdet/matrix.hpp"

namespace ncdet {

struct DetOptions {
  /// Direct enumeration refuses orders above this unless allow_large is set.
  Index max_order = 9;
  bool allow_large = false;
  /// Worker threads for the permutation sum. The result does not depend on it.
  unsigned workers = 1;
  /// Check that all 2n determinants of a Hermitian matrix coincide.
  bool verify_hermitian = true;
  /// Check det(A*A) = det(AA*) when computing ddet.
  bool cross_check_ddet = true;
};

enum class DetKind { rdet, cdet, mdet, hdet, ddet };

inline const char* to_string(DetKind k) {
  switch (k) {
    case DetKind::rdet: return "rdet";
    case DetKind::cdet: return "cdet";
    case DetKind::mdet: return "mdet";
    case DetKind::hdet: return "hdet";
    case DetKind::ddet: return "ddet";
  }
  return "?";
}

template <class F>
struct DetReport {
  Quaternion<F> value;
  Index index;
  DetKind kind;
  std::uint64_t monomial_count;
};

namespace detail {

template <class F>
struct PartialSum {
  Coords<F> sum{};
  std::uint64_t count = 0;
};

/// Depth-first walk over S_n that builds each monomial incrementally, so
/// permutations sharing a cycle prefix share the corresponding partial product.
/// The walk is split into chunks at a fixed depth; chunk sums are reduced in
/// chunk order, so the result is independent of the number of workers.
template <class F>
class MonomialEnumerator {
public:
  /// column_mode: factors a_{to,from} prepended (cdet); otherwise a_{from,to} appended (rdet).
  MonomialEnumerator(const QMatrix<F>& a, Index leader, bool column_mode)
      : n_(a.rows()), leader_(leader), column_mode_(column_mode), params_(a.algebra().params()) {
    table_.reserve(n_ * n_);
    for (const auto& q : a.entries())
      table_.push_back(q.coords());
  }

  PartialSum<F> run(unsigned workers) const {
    std::vector<Node> tasks;
    {
      std::vector<char> used(n_, 0);
      used[leader_] = 1;
      std::vector<Coords<F>> buf(n_ + 1);
      buf[0] = unit();
      PartialSum<F> unused;
      Walk w{used, buf, unused, split_depth(), &tasks};
      walk(w, leader_, leader_, n_ - 1, 0, 0);
    }

    std::vector<PartialSum<F>> results(tasks.size());
    auto work = [&](std::size_t t) { results[t] = run_task(tasks[t]); };
    if (workers <= 1 || tasks.size() <= 1) {
      for (std::size_t t = 0; t < tasks.size(); ++t)
        work(t);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
      for (unsigned w = 0; w < count; ++w)
        pool.emplace_back([&] {
          for (std::size_t t = next++; t < tasks.size(); t = next++)
            work(t);
        });
    }

    PartialSum<F> total;
    for (const auto& r : results) {
      add_into(total.sum, r.sum);
      total.count += r.count;
    }
    return total;
  }

private:
  struct Node {
    std::vector<char> used;
    Index cur, start, remaining, cycles, depth;
    Coords<F> prod;
    bool leaf;
  };

  struct Walk {
    std::vector<char>& used;
    std::vector<Coords<F>>& buf;
    PartialSum<F>& acc;
    Index stop_depth;
    std::vector<Node>* tasks;  // non-null while collecting chunks
  };

  Index split_depth() const { return std::min<Index>(2, n_); }

  Coords<F> unit() const {
    Coords<F> u{};
    u[0] = scalar_traits<F>::one();
    return u;
  }

  const Coords<F>& entry(Index r, Index c) const { return table_[r * n_ + c]; }

  void extend(Walk& w, Index depth, Index from, Index to) const {
    if (column_mode_)
      mul_into(w.buf[depth + 1], entry(to, from), w.buf[depth], params_);
    else
      mul_into(w.buf[depth + 1], w.buf[depth], entry(from, to), params_);
  }

  void leaf(Walk& w, const Coords<F>& monomial, Index cycles) const {
    if ((n_ - cycles) % 2 == 0)
      add_into(w.acc.sum, monomial);
    else
      sub_into(w.acc.sum, monomial);
    ++w.acc.count;
  }

  void walk(Walk& w, Index cur, Index start, Index remaining, Index cycles, Index depth) const {
    if (w.tasks && depth == w.stop_depth) {
      w.tasks->push_back(Node{w.used, cur, start, remaining, cycles, depth, w.buf[depth], false});
      return;
    }
    // continue the open cycle
    for (Index x = 0; x < n_; ++x) {
      if (w.used[x])
        continue;
      w.used[x] = 1;
      extend(w, depth, cur, x);
      walk(w, x, start, remaining - 1, cycles, depth + 1);
      w.used[x] = 0;
    }
    // close it
    extend(w, depth, cur, start);
    if (remaining == 0) {
      if (w.tasks)
        w.tasks->push_back(Node{w.used, cur, start, 0, cycles + 1, depth + 1, w.buf[depth + 1], true});
      else
        leaf(w, w.buf[depth + 1], cycles + 1);
      return;
    }
    Index m = 0;
    while (w.used[m])
      ++m;
    w.used[m] = 1;
    walk(w, m, m, remaining - 1, cycles + 1, depth + 1);
    w.used[m] = 0;
  }

  PartialSum<F> run_task(const Node& node) const {
    PartialSum<F> acc;
    std::vector<Coords<F>> buf(n_ + 1);
    buf[node.depth] = node.prod;
    std::vector<char> used = node.used;
    Walk w{used, buf, acc, 0, nullptr};
    if (node.leaf)
      leaf(w, node.prod, node.cycles);
    else
      walk(w, node.cur, node.start, node.remaining, node.cycles, node.depth);
    return acc;
  }

  Index n_;
  Index leader_;
  bool column_mode_;
  const AlgebraParams<F>& params_;
  std::vector<Coords<F>> table_;
};

template <class F>
void check_enumerable(const QMatrix<F>& a, Index index, const DetOptions& opts, const char* what) {
  require_square(a, what);
  if (a.rows() == 0)
    throw shape_error(std::string(what) + " of an empty matrix");
  if (index >= a.rows())
    throw shape_error(std::string(what) + ": index out of range");
  if (a.rows() > opts.max_order && !opts.allow_large)
    throw enumeration_limit(std::string(what) + ": order " + std::to_string(a.rows()) +
                            " exceeds the enumeration bound " + std::to_string(opts.max_order));
}

template <class F>
bool equal_all(const std::vector<Quaternion<F>>& vs) {
  for (const auto& v : vs)
    if (!(v == vs.front()))
      return false;
  return true;
}

} // namespace detail

template <class F>
DetReport<F> rdet_report(const QMatrix<F>& a, Index i, const DetOptions& opts = {}) {
  detail::check_enumerable(a, i, opts, "rdet");
  auto part = detail::MonomialEnumerator<F>(a, i, false).run(opts.workers);
  return DetReport<F>{Quaternion<F>(a.algebra(), std::move(part.sum)), i, DetKind::rdet, part.count};
}

template <class F>
DetReport<F> cdet_report(const QMatrix<F>& a, Index j, const DetOptions& opts = {}) {
  detail::check_enumerable(a, j, opts, "cdet");
  auto part = detail::MonomialEnumerator<F>(a, j, true).run(opts.workers);
  return DetReport<F>{Quaternion<F>(a.algebra(), std::move(part.sum)), j, DetKind::cdet, part.count};
}

/// i-th row determinant.
template <class F>
Quaternion<F> rdet(const QMatrix<F>& a, Index i, const DetOptions& opts = {}) {
  return rdet_report(a, i, opts).value;
}

/// j-th column determinant by mirrored enumeration.
template <class F>
Quaternion<F> cdet(const QMatrix<F>& a, Index j, const DetOptions& opts = {}) {
  return cdet_report(a, j, opts).value;
}

/// j-th column determinant through conj(rdet_j(A*)).
template <class F>
Quaternion<F> cdet_via_adjoint(const QMatrix<F>& a, Index j, const DetOptions& opts = {}) {
  return rdet(a.adjoint(), j, opts).conj();
}

// ---------------------------------------------------------------------------
// Cofactor expansions

/// R_ij: rdet_i A = sum_j a_ij R_ij; 1 for a 1x1 matrix.
///   i = j: the first row determinant of the principal minor A^{ii}
///   i != j: -rdet_j of A with column j replaced by column i, row i and column i deleted
template <class F>
Quaternion<F> right_cofactor(const QMatrix<F>& a, Index i, Index j, const DetOptions& opts = {}) {
  require_square(a, "right_cofactor");
  if (i >= a.rows() || j >= a.rows())
    throw shape_error("right_cofactor: index out of range");
  if (a.rows() == 1)
    return Quaternion<F>::one(a.algebra());
  if (i == j)
    return rdet(delete_rowcol(a, i, i), 0, opts);
  return -rdet(col_replace_then_delete(a, i, j), j - (j > i ? 1 : 0), opts);
}

template <class F>
Quaternion<F> rdet_by_expansion(const QMatrix<F>& a, Index i, const DetOptions& opts = {}) {
  require_square(a, "rdet_by_expansion");
  if (a.rows() == 0)
    throw shape_error("rdet_by_expansion of an empty matrix");
  Quaternion<F> sum = Quaternion<F>::zero(a.algebra());
  for (Index j = 0; j < a.cols(); ++j)
    sum += a.at(i, j) * right_cofactor(a, i, j, opts);
  return sum;
}

/// L_ij: cdet_j A = sum_i L_ij a_ij; 1 for a 1x1 matrix.
///   i = j: the first column determinant of A^{jj}
///   i != j: -cdet_i of A with row i replaced by row j, row j and column j deleted
template <class F>
Quaternion<F> left_cofactor(const QMatrix<F>& a, Index i, Index j, const DetOptions& opts = {}) {
  require_square(a, "left_cofactor");
  if (i >= a.rows() || j >= a.rows())
    throw shape_error("left_cofactor: index out of range");
  if (a.rows() == 1)
    return Quaternion<F>::one(a.algebra());
  if (i == j)
    return cdet(delete_rowcol(a, j, j), 0, opts);
  return -cdet(row_replace_then_delete(a, j, i), i - (i > j ? 1 : 0), opts);
}

template <class F>
Quaternion<F> cdet_by_expansion(const QMatrix<F>& a, Index j, const DetOptions& opts = {}) {
  require_square(a, "cdet_by_expansion");
  if (a.rows() == 0)
    throw shape_error("cdet_by_expansion of an empty matrix");
  Quaternion<F> sum = Quaternion<F>::zero(a.algebra());
  for (Index i = 0; i < a.rows(); ++i)
    sum += left_cofactor(a, i, j, opts) * a.at(i, j);
  return sum;
}

// ---------------------------------------------------------------------------
// Hermitian determinants

namespace detail {

// Expansion along the row that continues the open cycle: after choosing
// a_{lead,j} the recursion proceeds in row j of A(lead -> j); after a fixed
// point it restarts at the smallest remaining index.
template <class F>
Quaternion<F> moore(const QMatrix<F>& a, Index lead) {
  const Index n = a.rows();
  if (n == 1)
    return a(0, 0);
  Quaternion<F> sum = a(lead, lead) * moore(delete_rowcol(a, lead, lead), 0);
  for (Index j = 0; j < n; ++j) {
    if (j == lead)
      continue;
    sum -= a(lead, j) * moore(col_replace_then_delete(a, lead, j), j - (j > lead ? 1 : 0));
  }
  return sum;
}

} // namespace detail

/// Moore determinant of a Hermitian matrix by recursion.
template <class F>
Quaternion<F> mdet(const QMatrix<F>& a) {
  require_square(a, "mdet");
  if (a.rows() == 0)
    throw shape_error("mdet of an empty matrix");
  if (!is_hermitian(a))
    throw not_hermitian("mdet requires a Hermitian matrix");
  Quaternion<F> v = detail::moore(a, 0);
  if (!v.is_scalar())
    throw internal_disagreement("Moore determinant of a Hermitian matrix has a nonzero imaginary part: " +
                                v.to_string());
  return v;
}

/// det A of a Hermitian matrix: the common value of all row and column determinants.
template <class F>
F hermitian_det(const QMatrix<F>& a, const DetOptions& opts = {}) {
  require_square(a, "hermitian_det");
  if (!is_hermitian(a))
    throw not_hermitian("hermitian_det requires a Hermitian matrix");
  Quaternion<F> v = rdet(a, 0, opts);
  if (!v.is_scalar())
    throw internal_disagreement("row determinant of a Hermitian matrix is not central: " + v.to_string());
  if (opts.verify_hermitian) {
    std::vector<Quaternion<F>> all{v};
    for (Index k = 0; k < a.rows(); ++k) {
      if (k)
        all.push_back(rdet(a, k, opts));
      all.push_back(cdet(a, k, opts));
    }
    if (!detail::equal_all(all))
      throw internal_disagreement("row and column determinants of a Hermitian matrix differ");
  }
  return v[0];
}

/// ddet A = det(A*A), cross-checked against det(AA*).
template <class F>
F ddet(const QMatrix<F>& a, const DetOptions& opts = {}) {
  require_square(a, "ddet");
  F d = hermitian_det(a.adjoint() * a, opts);
  if (opts.cross_check_ddet) {
    F d2 = hermitian_det(a * a.adjoint(), opts);
    if (!scalar_traits<F>::equal(d, d2))
      throw internal_disagreement("det(A*A) = " + scalar_traits<F>::format(d) + " but det(AA*) = " +
                                  scalar_traits<F>::format(d2));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Elementary property checks

struct PropertyCheck {
  std::string name;
  bool passed;
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed)
        return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.passed)
        out.push_back(c.name);
    return out;
  }
};

/// Verifies on the given A, for row/column k and scalar quaternion q:
/// zero row/column annihilation, left row scaling of rdet_k, right column
/// scaling of cdet_k, and additivity in row k and column k (split b = q a, c = a - b).
template <class F>
PropertyReport basic_property_checks(const QMatrix<F>& a, const Quaternion<F>& q, Index k,
                                     const DetOptions& opts = {}) {
  require_square(a, "basic_property_checks");
  const Index n = a.rows();
  if (k >= n)
    throw shape_error("basic_property_checks: index out of range");
  PropertyReport rep;
  auto all_zero = [&](const QMatrix<F>& m) {
    for (Index t = 0; t < n; ++t)
      if (!rdet(m, t, opts).is_zero() || !cdet(m, t, opts).is_zero())
        return false;
    return true;
  };

  QMatrix<F> zr = a, zc = a;
  for (Index t = 0; t < n; ++t) {
    zr.set(k, t, Quaternion<F>::zero(a.algebra()));
    zc.set(t, k, Quaternion<F>::zero(a.algebra()));
  }
  rep.checks.push_back({"zero row annihilates all determinants", all_zero(zr)});
  rep.checks.push_back({"zero column annihilates all determinants", all_zero(zc)});

  QMatrix<F> rs = a, cs = a, rb = a, rc = a, cb = a, cc = a;
  for (Index t = 0; t < n; ++t) {
    rs.set(k, t, q * a(k, t));
    cs.set(t, k, a(t, k) * q);
    rb.set(k, t, q * a(k, t));
    rc.set(k, t, a(k, t) - q * a(k, t));
    cb.set(t, k, a(t, k) * q);
    cc.set(t, k, a(t, k) - a(t, k) * q);
  }
  rep.checks.push_back({"left row scaling", rdet(rs, k, opts) == q * rdet(a, k, opts)});
  rep.checks.push_back({"right column scaling", cdet(cs, k, opts) == cdet(a, k, opts) * q});

  bool row_add = true, col_add = true;
  for (Index t = 0; t < n; ++t) {
    row_add = row_add && rdet(a, t, opts) == rdet(rb, t, opts) + rdet(rc, t, opts) &&
              cdet(a, t, opts) == cdet(rb, t, opts) + cdet(rc, t, opts);
    col_add = col_add && rdet(a, t, opts) == rdet(cb, t, opts) + rdet(cc, t, opts) &&
              cdet(a, t, opts) == cdet(cb, t, opts) + cdet(cc, t, opts);
  }
  rep.checks.push_back({"row additivity", row_add});
  rep.checks.push_back({"column additivity", col_add});
  return rep;
}

} // namespace ncdet
