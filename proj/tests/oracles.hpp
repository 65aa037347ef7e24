#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls the library's arithmetic: quaternions are multiplied through a
// structure-constant table built from i^2=a, j^2=b, ij=-ji=k, permutations
// come from std::next_permutation, and classical determinants use
// fraction-free (Bareiss) elimination over the integers.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "ncdet/matrix.hpp"

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Quat = std::array<Q, 4>;
using Mat = std::vector<std::vector<Quat>>;

struct Alg {
  Q a, b;
  // table[p][q] = (coefficient, basis index) of e_p e_q with e = (1, i, j, k)
  std::array<std::array<std::pair<Q, int>, 4>, 4> table;

  Alg(Q a_, Q b_) : a(a_), b(b_) {
    Q ab = a * b;
    auto set = [&](int p, int q, Q c, int r) { table[p][q] = {c, r}; };
    for (int p = 0; p < 4; ++p) {
      set(0, p, 1, p);
      set(p, 0, 1, p);
    }
    set(1, 1, a, 0);
    set(2, 2, b, 0);
    set(3, 3, -ab, 0);
    set(1, 2, 1, 3);
    set(2, 1, -1, 3);
    // ik = i(ij) = aj, ki = (ij)i = -i(ij) = -aj
    set(1, 3, a, 2);
    set(3, 1, -a, 2);
    // jk = j(ij) = -(ij)j = -bi, kj = (ij)j = bi
    set(2, 3, -b, 1);
    set(3, 2, b, 1);
  }

  Quat mul(const Quat& x, const Quat& y) const {
    Quat out{0, 0, 0, 0};
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) {
        const auto& [c, r] = table[p][q];
        out[r] += c * x[p] * y[q];
      }
    return out;
  }
};

inline Quat add(const Quat& x, const Quat& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }
inline Quat neg(const Quat& x) { return {-x[0], -x[1], -x[2], -x[3]}; }
inline Quat conj(const Quat& x) { return {x[0], -x[1], -x[2], -x[3]}; }
inline Quat one() { return {1, 0, 0, 0}; }
inline Quat zero() { return {0, 0, 0, 0}; }

inline Q norm(const Alg& h, const Quat& x) { return h.mul(x, conj(x))[0]; }

inline Quat inv(const Alg& h, const Quat& x) {
  Q n = norm(h, x);
  Quat c = conj(x);
  for (auto& v : c)
    v /= n;
  return c;
}

template <class F>
Quat from(const ncdet::Quaternion<F>& q) {
  const auto& c = q.coords();
  return {Q(c[0]), Q(c[1]), Q(c[2]), Q(c[3])};
}

template <class F>
Mat from(const ncdet::QMatrix<F>& m) {
  Mat out(m.rows(), std::vector<Quat>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = from(m(r, c));
  return out;
}

template <class F>
Alg alg_of(const ncdet::QMatrix<F>& m) {
  return Alg(Q(m.algebra().a()), Q(m.algebra().b()));
}

inline Mat matmul(const Alg& h, const Mat& x, const Mat& y) {
  Mat out(x.size(), std::vector<Quat>(y.front().size(), zero()));
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < y.front().size(); ++c)
      for (std::size_t k = 0; k < y.size(); ++k)
        out[r][c] = add(out[r][c], h.mul(x[r][k], y[k][c]));
  return out;
}

inline Mat adjoint(const Mat& x) {
  Mat out(x.front().size(), std::vector<Quat>(x.size()));
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.front().size(); ++c)
      out[c][r] = conj(x[r][c]);
  return out;
}

// Orbit of s under sigma, starting at s.
inline std::vector<std::size_t> orbit(const std::vector<std::size_t>& sigma, std::size_t s) {
  std::vector<std::size_t> o{s};
  for (std::size_t c = sigma[s]; c != s; c = sigma[c])
    o.push_back(c);
  return o;
}

// Cycles of sigma: the one through `leader` first, then the rest by
// increasing minimum element, each starting at that minimum.
inline std::vector<std::vector<std::size_t>> cycles(const std::vector<std::size_t>& sigma, std::size_t leader) {
  std::vector<std::vector<std::size_t>> out{orbit(sigma, leader)};
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t v : out[0])
    seen[v] = true;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s])
      continue;
    out.push_back(orbit(sigma, s));
    for (std::size_t v : out.back())
      seen[v] = true;
  }
  return out;
}

inline Quat rdet(const Alg& h, const Mat& a, std::size_t i) {
  const std::size_t n = a.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Quat sum = zero();
  do {
    auto cs = cycles(sigma, i);
    Quat m = one();
    for (const auto& c : cs)
      for (std::size_t t = 0; t < c.size(); ++t)
        m = h.mul(m, a[c[t]][c[(t + 1) % c.size()]]);
    sum = ((n - cs.size()) % 2 == 0) ? add(sum, m) : add(sum, neg(m));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

// Column determinant: blocks written right to left, leader block rightmost,
// each block a_{s,s_{l-1}} ... a_{s_2,s_1} a_{s_1,s}.
inline Quat cdet(const Alg& h, const Mat& a, std::size_t j) {
  const std::size_t n = a.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Quat sum = zero();
  do {
    auto cs = cycles(sigma, j);
    Quat m = one();
    for (const auto& c : cs)
      for (std::size_t t = 0; t < c.size(); ++t)
        m = h.mul(a[c[(t + 1) % c.size()]][c[t]], m);
    sum = ((n - cs.size()) % 2 == 0) ? add(sum, m) : add(sum, neg(m));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

/// Bareiss elimination on an integer matrix.
inline Z bareiss(std::vector<std::vector<Z>> m) {
  const std::size_t n = m.size();
  Z prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0)
        ++r;
      if (r == n)
        return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c)
        m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Classical determinant of a rational matrix: clear denominators row by row.
inline Q det(const std::vector<std::vector<Q>>& m) {
  if (m.empty())
    return 1;
  std::vector<std::vector<Z>> zm;
  Q scale = 1;
  for (const auto& row : m) {
    Z l = 1;
    for (const auto& v : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Z> zr;
    for (const auto& v : row) {
      Q s = v * l;
      zr.push_back(s.get_num());
    }
    zm.push_back(std::move(zr));
    scale *= l;
  }
  return Q(bareiss(std::move(zm))) / scale;
}

/// Rank over Q of a rational matrix by plain elimination.
inline std::size_t rank(std::vector<std::vector<Q>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[r], m[p]);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0)
        continue;
      Q f = m[k][c] / m[r][c];
      for (std::size_t t = c; t < cols; ++t)
        m[k][t] -= f * m[r][t];
    }
    ++r;
  }
  return r;
}

/// Rational matrix of x -> a x on coordinates (left-regular representation).
inline std::vector<std::vector<Q>> left_regular(const Alg& h, const Quat& a) {
  std::vector<std::vector<Q>> m(4, std::vector<Q>(4));
  for (int c = 0; c < 4; ++c) {
    Quat e = zero();
    e[c] = 1;
    Quat col = h.mul(a, e);
    for (int r = 0; r < 4; ++r)
      m[r][c] = col[r];
  }
  return m;
}

/// 4m x 4n rational block matrix representing x -> A x on column vectors.
inline std::vector<std::vector<Q>> real_embedding(const Alg& h, const Mat& a) {
  std::vector<std::vector<Q>> out(4 * a.size(), std::vector<Q>(4 * a.front().size()));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.front().size(); ++c) {
      auto blk = left_regular(h, a[r][c]);
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          out[4 * r + p][4 * c + q] = blk[p][q];
    }
  return out;
}

/// Column rank over the algebra for a division algebra: the kernel of
/// x -> A x is a right submodule, so real rank is four times it.
inline std::size_t quaternion_rank(const Alg& h, const Mat& a) { return rank(real_embedding(h, a)) / 4; }

/// Closed form for the double determinant of a 2x2 matrix.
inline Q ddet2(const Alg& h, const Mat& a) {
  Quat t = h.mul(h.mul(h.mul(conj(a[0][0]), a[0][1]), conj(a[1][1])), a[1][0]);
  return norm(h, a[0][0]) * norm(h, a[1][1]) + norm(h, a[1][0]) * norm(h, a[0][1]) - 2 * t[0];
}

} // namespace oracle
