#pragma once

// Seeded verification battery over exact rationals. Every suite draws from its
// own generator seeded by (seed, suite index), so results do not depend on the
// order in which suites run or on the worker count.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncdet/io.hpp"
#include "ncdet/quasidet.hpp"
#include "ncdet/random.hpp"
#include "ncdet/rank.hpp"

namespace ncdet::verify {

using Q = Rational;
using QQ = Quaternion<Q>;
using QM = QMatrix<Q>;
using json = nlohmann::json;

enum class Scale { small, full };

inline Scale parse_scale(const std::string& s) {
  if (s == "small")
    return Scale::small;
  if (s == "full")
    return Scale::full;
  throw parse_error("scale must be \"small\" or \"full\", got '" + s + "'");
}

inline constexpr std::uint64_t default_seed = 20100917;

struct Failure {
  std::string message;
  json counterexample;  // .qmat documents of the offending inputs
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string message;
  json counterexample;
  double seconds = 0;
};

struct Report {
  std::uint64_t seed;
  Scale scale;
  std::vector<SuiteResult> suites;

  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed)
        return false;
    return true;
  }
};

struct Context {
  Rng rng;
  std::size_t cases;
  DetOptions opts;
  Algebra<Q> hamilton = Algebra<Q>::hamilton();
  Algebra<Q> other = Algebra<Q>(Q(-2), Q(-3));
};

using SuiteFn = std::function<std::optional<Failure>(Context&)>;

struct Suite {
  std::string name;
  std::size_t small_cases;
  std::size_t full_cases;
  SuiteFn run;
};

namespace detail {

inline json dump_matrices(std::initializer_list<const QM*> ms) {
  json arr = json::array();
  for (const QM* m : ms)
    arr.push_back(io::matrix_to_json(*m));
  return arr;
}

inline json dump_quaternions(std::initializer_list<const QQ*> qs) {
  json arr = json::array();
  for (const QQ* q : qs)
    arr.push_back(q->to_string());
  return arr;
}

inline std::optional<Failure> fail(std::string msg, json ce) { return Failure{std::move(msg), std::move(ce)}; }

/// Classical determinant of the real parts by Gaussian elimination over Q.
inline Q classical_det(const QM& a) {
  const Index n = a.rows();
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      m[r][c] = a(r, c)[0];
  Q det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && sgn(m[p][c]) == 0)
      ++p;
    if (p == n)
      return Q(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (Index r = c + 1; r < n; ++r) {
      Q f = m[r][c] / m[c][c];
      for (Index t = c; t < n; ++t)
        m[r][t] -= f * m[c][t];
    }
  }
  return det;
}

inline Index pick(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

} // namespace detail

inline std::vector<Suite> suites() {
  using namespace detail;
  std::vector<Suite> s;

  s.push_back({"quaternion.associativity", 200, 2000, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   const auto& alg = (t % 2) ? c.other : c.hamilton;
                   QQ p = random_quaternion(c.rng, alg), q = random_quaternion(c.rng, alg),
                      r = random_quaternion(c.rng, alg);
                   if (!((p * q) * r == p * (q * r)))
                     return fail("(pq)r != p(qr)", dump_quaternions({&p, &q, &r}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"quaternion.trace_cyclic", 200, 2000, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   const auto& alg = (t % 2) ? c.other : c.hamilton;
                   QQ p = random_quaternion(c.rng, alg), q = random_quaternion(c.rng, alg);
                   if (!((p * q).trace() == (q * p).trace()) || !(p.conj().trace() == p.trace()))
                     return fail("t(pq) != t(qp)", dump_quaternions({&p, &q}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"quaternion.norm_multiplicative", 200, 2000, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   const auto& alg = (t % 2) ? c.other : c.hamilton;
                   QQ p = random_quaternion(c.rng, alg), q = random_quaternion(c.rng, alg);
                   if ((p * q).norm() != p.norm() * q.norm() || p.conj().norm() != p.norm())
                     return fail("n(pq) != n(p)n(q)", dump_quaternions({&p, &q}));
                   if (!p.is_zero() && sgn(p.norm()) <= 0)
                     return fail("nonzero quaternion with non-positive norm in a definite algebra",
                                 dump_quaternions({&p}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"quaternion.conjugation", 200, 2000, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   const auto& alg = (t % 2) ? c.other : c.hamilton;
                   QQ p = random_quaternion(c.rng, alg), q = random_quaternion(c.rng, alg);
                   if (!((p * q).conj() == q.conj() * p.conj()) || !(p.conj().conj() == p) ||
                       !((p + q).conj() == p.conj() + q.conj()))
                     return fail("conjugation is not an additive anti-involution", dump_quaternions({&p, &q}));
                   if (!p.is_zero() && !(p * p.inverse() == QQ::one(alg) && p.inverse() * p == QQ::one(alg)))
                     return fail("q qinv(q) != 1", dump_quaternions({&p}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"quaternion.trace_rearrangement", 100, 1000, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   const auto& alg = c.hamilton;
                   QQ a11 = random_quaternion(c.rng, alg), a12 = random_quaternion(c.rng, alg),
                      a21 = random_quaternion(c.rng, alg), a22 = random_quaternion(c.rng, alg);
                   QQ lhs = a12 * a22.conj() * a21 * a11.conj() + a11 * a21.conj() * a22 * a12.conj();
                   QQ rhs = a21.conj() * a22 * a12.conj() * a11 + a11.conj() * a12 * a22.conj() * a21;
                   if (!(lhs == rhs))
                     return fail("2x2 trace rearrangement identity", dump_quaternions({&a11, &a12, &a21, &a22}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"matrix.adjoint_and_product", 40, 400, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index m = pick(c.rng, 1, 4), k = pick(c.rng, 1, 4), n = pick(c.rng, 1, 4);
                   QM a = random_matrix(c.rng, c.hamilton, m, k), b = random_matrix(c.rng, c.hamilton, k, n),
                      d = random_matrix(c.rng, c.hamilton, n, 2);
                   if (!(a.adjoint().adjoint() == a) || !((a * b).adjoint() == b.adjoint() * a.adjoint()) ||
                       !((a * b) * d == a * (b * d)))
                     return fail("adjoint/product law", dump_matrices({&a, &b, &d}));
                   if (!is_hermitian(a * a.adjoint()) || !is_hermitian(a.adjoint() * a))
                     return fail("AA* or A*A not Hermitian", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.commutative_degeneration", 20, 100, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, c.cases > 20 ? 6 : 5);
                   QM a = random_real_matrix(c.rng, c.hamilton, n);
                   QQ expect = QQ::scalar(c.hamilton, classical_det(a));
                   for (Index k = 0; k < n; ++k)
                     if (!(rdet(a, k, c.opts) == expect) || !(cdet(a, k, c.opts) == expect))
                       return fail("row/column determinant differs from the classical determinant",
                                   dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.hermitian_equality", 20, 100, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 2, 4);
                   QM b = random_matrix(c.rng, (t % 2) ? c.other : c.hamilton, n, n);
                   QM h = b.adjoint() * b;
                   QQ v = rdet(h, 0, c.opts);
                   if (!v.is_scalar() || !(mdet(h) == v))
                     return fail("Hermitian determinant not central or differs from Moore", dump_matrices({&b}));
                   for (Index k = 0; k < n; ++k)
                     if (!(rdet(h, k, c.opts) == v) || !(cdet(h, k, c.opts) == v))
                       return fail("row/column determinants of B*B differ", dump_matrices({&b}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.conjugation_duality", 20, 100, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 5);
                   QM a = random_matrix(c.rng, (t % 2) ? c.other : c.hamilton, n, n);
                   QM as = a.adjoint();
                   for (Index k = 0; k < n; ++k) {
                     QQ cd = cdet(a, k, c.opts);
                     if (!(rdet(as, k, c.opts) == cd.conj()) || !(cdet_via_adjoint(a, k, c.opts) == cd))
                       return fail("rdet_i(A*) != conj(cdet_i A)", dump_matrices({&a}));
                   }
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.cofactor_expansion", 15, 60, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 5);
                   QM a = random_matrix(c.rng, c.hamilton, n, n);
                   Index k = pick(c.rng, 0, n - 1);
                   if (!(rdet_by_expansion(a, k, c.opts) == rdet(a, k, c.opts)) ||
                       !(cdet_by_expansion(a, k, c.opts) == cdet(a, k, c.opts)))
                     return fail("cofactor expansion differs from enumeration", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.basic_properties", 10, 60, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 4);
                   QM a = random_matrix(c.rng, c.hamilton, n, n);
                   QQ q = random_quaternion(c.rng, c.hamilton);
                   auto rep = basic_property_checks(a, q, pick(c.rng, 0, n - 1), c.opts);
                   if (!rep.all_passed())
                     return fail("property check failed: " + rep.failures().front(), dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.ddet_symmetry", 20, 100, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 4);
                   QM a = random_matrix(c.rng, (t % 2) ? c.other : c.hamilton, n, n);
                   if (hermitian_det(a * a.adjoint(), c.opts) != hermitian_det(a.adjoint() * a, c.opts))
                     return fail("det(AA*) != det(A*A)", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.ddet_multiplicative", 20, 100, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 3);
                   QM a = random_matrix(c.rng, c.hamilton, n, n), b = random_matrix(c.rng, c.hamilton, n, n);
                   if (ddet(a * b, c.opts) != ddet(a, c.opts) * ddet(b, c.opts))
                     return fail("ddet(AB) != ddet A ddet B", dump_matrices({&a, &b}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"det.dependent_column", 20, 100, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 2, 4);
                   QM a = random_matrix(c.rng, c.hamilton, n, n);
                   Index dep = pick(c.rng, 0, n - 1);
                   std::vector<QQ> coef;
                   for (Index k = 0; k < n; ++k)
                     coef.push_back(random_quaternion(c.rng, c.hamilton));
                   for (Index r = 0; r < n; ++r) {
                     QQ sum = QQ::zero(c.hamilton);
                     for (Index k = 0; k < n; ++k)
                       if (k != dep)
                         sum += a(r, k) * coef[k];
                     a.set(r, dep, sum);
                   }
                   if (sgn(ddet(a, c.opts)) != 0)
                     return fail("dependent columns but ddet != 0", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"inverse.two_sided", 10, 50, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 4);
                   QM a = random_invertible(c.rng, c.hamilton, n);
                   QM inv = inverse(a, c.opts);
                   QM id = QM::identity(c.hamilton, n);
                   auto dc = double_cofactors(a, c.opts);
                   if (!(a * inv == id) || !(inv * a == id) || !(dc.left == dc.right) ||
                       !(inverse_from_right_cofactors(a, c.opts) == inv) || !(inverse(inv, c.opts) == a) ||
                       !(inv.adjoint() == inverse(a.adjoint(), c.opts)))
                     return fail("inverse laws", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"solve.agreement", 10, 50, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 1, 4);
                   QM a = random_invertible(c.rng, c.hamilton, n);
                   QM y = random_matrix(c.rng, c.hamilton, n, 1);
                   QM yl = random_matrix(c.rng, c.hamilton, 1, n);
                   QM x = solve_right(a, y, c.opts);
                   QM xl = solve_left(a, yl, c.opts);
                   QM inv = inverse(a, c.opts);
                   if (!(a * x == y) || !(inv * y == x) || !(quasi_solve(a, y) == x))
                     return fail("right solvers disagree", dump_matrices({&a, &y}));
                   if (!(xl * a == yl) || !(yl * inv == xl) || !(quasi_solve_left(a, yl) == xl))
                     return fail("left solvers disagree", dump_matrices({&a, &yl}));
                   QM h = a.adjoint() * a;
                   if (!(solve_right_hermitian(h, y, c.opts) == solve_right(h, y, c.opts)) ||
                       !(solve_left_hermitian(h, yl, c.opts) == solve_left(h, yl, c.opts)))
                     return fail("Hermitian solvers disagree", dump_matrices({&h, &y, &yl}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"quasidet.three_way", 10, 50, [](Context& c) -> std::optional<Failure> {
                 QuasiOptions qo{c.opts, false};
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 2, 4);
                   QM a = random_invertible(c.rng, c.hamilton, n);
                   for (Index p = 0; p < n; ++p)
                     for (Index q = 0; q < n; ++q) {
                       auto direct = quasideterminant(a, p, q, qo);
                       if (!direct.defined())
                         continue;
                       auto via_inv = quasideterminant_via_inverse(a, p, q, c.opts);
                       auto forms = quasidet_via_rc(a, p, q, c.opts);
                       if (!via_inv.defined() || !(*via_inv == *direct) || !forms.column_form.defined() ||
                           !forms.row_form.defined() || !(*forms.column_form == *direct) ||
                           !(*forms.row_form == *direct))
                         return fail("quasideterminant evaluations disagree", dump_matrices({&a}));
                     }
                 }
                 return std::nullopt;
               }});

  s.push_back({"quasidet.block_inverse", 10, 50, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index n = pick(c.rng, 2, 4);
                   QM a = random_invertible(c.rng, c.hamilton, n);
                   Index k = pick(c.rng, 1, n);
                   IndexSet rows, cols;
                   for (Index r = 0; r < k; ++r)
                     rows.push_back(r);
                   for (Index r = n - k; r < n; ++r)
                     cols.push_back(r);
                   auto blk = block_inverse_minor(a, rows, cols, c.opts);
                   if (!blk.defined())
                     continue;
                   if (!(*blk == inverse(a, c.opts).select(cols, rows)))
                     return fail("block inverse minor differs from the inverse", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  s.push_back({"rank.principal_minors", 10, 50, [](Context& c) -> std::optional<Failure> {
                 for (std::size_t t = 0; t < c.cases; ++t) {
                   Index r = pick(c.rng, 1, 3);
                   QM a = random_matrix(c.rng, c.hamilton, 3, r) * random_matrix(c.rng, c.hamilton, r, 4);
                   if (rank(a) != principal_minor_rank(a.adjoint() * a, c.opts))
                     return fail("rank(A) != principal-minor rank of A*A", dump_matrices({&a}));
                 }
                 return std::nullopt;
               }});

  return s;
}

/// Runs every suite. `on_suite` (optional) is called after each suite.
inline Report run(Scale scale, std::uint64_t seed, unsigned workers,
                  const std::function<void(const SuiteResult&)>& on_suite = {}) {
  Report rep{seed, scale, {}};
  auto all = suites();
  for (std::size_t k = 0; k < all.size(); ++k) {
    const Suite& s = all[k];
    Context ctx{Rng(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1))), scale == Scale::small ? s.small_cases : s.full_cases,
                DetOptions{}};
    ctx.opts.workers = workers;
    SuiteResult res;
    res.name = s.name;
    res.cases = ctx.cases;
    auto start = std::chrono::steady_clock::now();
    try {
      if (auto f = s.run(ctx)) {
        res.passed = false;
        res.message = f->message;
        res.counterexample = f->counterexample;
      }
    } catch (const std::exception& e) {
      res.passed = false;
      res.message = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_suite)
      on_suite(res);
    rep.suites.push_back(std::move(res));
  }
  return rep;
}

} // namespace ncdet::verify
