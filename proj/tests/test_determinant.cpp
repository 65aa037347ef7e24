#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing_helpers;

namespace {

std::vector<AlgQ> algebras() { return {AlgQ::hamilton(), AlgQ(Rational(-2), Rational(-3)), AlgQ(Rational(1), Rational(-1))}; }

QQ scalar(const AlgQ& h, long v) { return QQ::scalar(h, Rational(v)); }

} // namespace

TEST(Determinant, ExampleMatrixValues) {
  QM a = example_matrix();
  AlgQ h = a.algebra();
  for (Index k = 0; k < 2; ++k) {
    EXPECT_EQ(rdet(a.adjoint() * a, k), scalar(h, 0));
    EXPECT_EQ(cdet(a.adjoint() * a, k), scalar(h, 0));
  }
  // rdet_1 A = i(-i) - j j = 2, and likewise for the others
  EXPECT_EQ(rdet(a, 0), scalar(h, 2));
  EXPECT_EQ(rdet(a, 1), scalar(h, 2));
  EXPECT_EQ(cdet(a, 0), scalar(h, 2));
  EXPECT_EQ(cdet(a, 1), scalar(h, 2));
  EXPECT_EQ(ddet(a), Rational(0));
}

TEST(Determinant, SmallOrders) {
  AlgQ h = AlgQ::hamilton();
  QM one = mat(h, {{"1,2,3,4"}});
  EXPECT_EQ(rdet(one, 0), q(h, "1,2,3,4"));
  EXPECT_EQ(cdet(one, 0), q(h, "1,2,3,4"));
  QQ a11 = QQ::i(h), a12 = QQ::j(h), a21 = QQ::k(h), a22 = q(h, "1,1,0,0");
  QM a = QM::from_rows(h, {{a11, a12}, {a21, a22}});
  EXPECT_EQ(rdet(a, 0), a11 * a22 - a12 * a21);
  EXPECT_EQ(rdet(a, 1), a22 * a11 - a21 * a12);
  EXPECT_EQ(cdet(a, 0), a22 * a11 - a12 * a21);
  EXPECT_EQ(cdet(a, 1), a11 * a22 - a21 * a12);
}

TEST(Determinant, IdentityIsOne) {
  for (const auto& h : algebras())
    for (Index n = 1; n <= 5; ++n) {
      QM id = QM::identity(h, n);
      for (Index k = 0; k < n; ++k) {
        EXPECT_EQ(rdet(id, k), QQ::one(h));
        EXPECT_EQ(cdet(id, k), QQ::one(h));
      }
    }
}

TEST(Determinant, AgreesWithPermutationOracle) {
  Rng rng(31);
  for (const auto& h : algebras()) {
    oracle::Alg o(h.a(), h.b());
    for (Index n = 1; n <= 5; ++n)
      for (int t = 0; t < 3; ++t) {
        QM a = random_matrix(rng, h, n, n);
        oracle::Mat m = oracle::from(a);
        for (Index k = 0; k < n; ++k) {
          EXPECT_EQ(oracle::from(rdet(a, k)), oracle::rdet(o, m, k)) << "rdet n=" << n << " k=" << k;
          EXPECT_EQ(oracle::from(cdet(a, k)), oracle::cdet(o, m, k)) << "cdet n=" << n << " k=" << k;
        }
      }
  }
}

TEST(Determinant, ReportCountsMonomials) {
  Rng rng(32);
  QM a = random_matrix(rng, AlgQ::hamilton(), 5, 5);
  DetReport<Rational> r = rdet_report(a, 2);
  EXPECT_EQ(r.monomial_count, 120u);
  EXPECT_EQ(r.index, 2u);
  EXPECT_EQ(r.kind, DetKind::rdet);
  EXPECT_EQ(cdet_report(a, 4).kind, DetKind::cdet);
}

TEST(Determinant, CommutativeDegenerationMatchesBareiss) {
  Rng rng(33);
  for (const auto& h : algebras())
    for (Index n = 1; n <= 6; ++n) {
      QM a = random_real_matrix(rng, h, n);
      std::vector<std::vector<Rational>> re(n, std::vector<Rational>(n));
      for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < n; ++c)
          re[r][c] = a(r, c).coords()[0];
      QQ expected = QQ::scalar(h, oracle::det(re));
      for (Index k = 0; k < n; ++k) {
        EXPECT_EQ(rdet(a, k), expected);
        EXPECT_EQ(cdet(a, k), expected);
      }
    }
}

TEST(Determinant, ConjugationDuality) {
  Rng rng(34);
  for (const auto& h : algebras())
    for (Index n = 1; n <= 4; ++n) {
      QM a = random_matrix(rng, h, n, n);
      for (Index k = 0; k < n; ++k) {
        EXPECT_EQ(rdet(a.adjoint(), k), cdet(a, k).conj());
        EXPECT_EQ(cdet_via_adjoint(a, k), cdet(a, k));
      }
    }
}

TEST(Determinant, HermitianEqualityAndMoore) {
  Rng rng(35);
  for (const auto& h : algebras())
    for (Index n = 1; n <= 4; ++n) {
      QM b = random_matrix(rng, h, n + 1, n);
      QM g = b.adjoint() * b;
      QQ first = rdet(g, 0);
      EXPECT_TRUE(first.is_scalar());
      for (Index k = 0; k < n; ++k) {
        EXPECT_EQ(rdet(g, k), first);
        EXPECT_EQ(cdet(g, k), first);
      }
      EXPECT_EQ(mdet(g), first);
      EXPECT_EQ(QQ::scalar(h, hermitian_det(g)), first);
    }
}

TEST(Determinant, MdetRejectsNonHermitian) {
  EXPECT_THROW(mdet(example_matrix()), not_hermitian);
  EXPECT_THROW(hermitian_det(example_matrix()), not_hermitian);
}

TEST(Determinant, CofactorExpansion) {
  Rng rng(36);
  for (const auto& h : algebras())
    for (Index n = 1; n <= 5; ++n) {
      QM a = random_matrix(rng, h, n, n);
      for (Index k = 0; k < n; ++k) {
        EXPECT_EQ(rdet_by_expansion(a, k), rdet(a, k));
        EXPECT_EQ(cdet_by_expansion(a, k), cdet(a, k));
      }
    }
}

TEST(Determinant, DdetClosedFormForOrderTwo) {
  Rng rng(37);
  for (const auto& h : algebras()) {
    oracle::Alg o(h.a(), h.b());
    for (int t = 0; t < 20; ++t) {
      QM a = random_matrix(rng, h, 2, 2);
      EXPECT_EQ(ddet(a), oracle::ddet2(o, oracle::from(a)));
    }
  }
}

TEST(Determinant, DdetSquaredIsRealEmbeddingDeterminant) {
  Rng rng(38);
  for (const auto& h : algebras()) {
    oracle::Alg o(h.a(), h.b());
    for (Index n = 1; n <= 3; ++n)
      for (int t = 0; t < 3; ++t) {
        QM a = random_matrix(rng, h, n, n);
        Rational d = ddet(a);
        EXPECT_EQ(d * d, oracle::det(oracle::real_embedding(o, oracle::from(a))));
      }
  }
}

TEST(Determinant, DdetMultiplicativeAndSymmetric) {
  Rng rng(39);
  AlgQ h = AlgQ::hamilton();
  for (int t = 0; t < 10; ++t) {
    QM a = random_matrix(rng, h, 3, 3), b = random_matrix(rng, h, 3, 3);
    EXPECT_EQ(ddet(a * b), ddet(a) * ddet(b));
    EXPECT_EQ(hermitian_det(a * a.adjoint()), hermitian_det(a.adjoint() * a));
  }
}

TEST(Determinant, RectangularGramDeterminantsDiffer) {
  // For a 3x4 matrix, A*A is a 4x4 matrix of rank at most 3.
  Rng rng(40);
  QM a = random_matrix(rng, AlgQ::hamilton(), 3, 4);
  EXPECT_EQ(hermitian_det(a.adjoint() * a), Rational(0));
  EXPECT_NE(hermitian_det(a * a.adjoint()), Rational(0));
}

TEST(Determinant, DependentColumnsGiveZeroDdet) {
  Rng rng(41);
  AlgQ h = AlgQ::hamilton();
  for (Index n = 2; n <= 4; ++n) {
    QM a = random_matrix(rng, h, n, n);
    QQ s = random_quaternion(rng, h);
    QM col = a.col(0);
    for (Index r = 0; r < n; ++r)
      col.set(r, 0, col(r, 0) * s);
    EXPECT_EQ(ddet(replace_col(a, n - 1, col)), Rational(0));
  }
}

TEST(Determinant, BasicProperties) {
  Rng rng(42);
  for (const auto& h : algebras())
    for (Index n = 2; n <= 4; ++n) {
      QM a = random_matrix(rng, h, n, n);
      QQ s = random_quaternion(rng, h);
      PropertyReport rep = basic_property_checks(a, s, n - 1);
      for (const auto& c : rep.checks)
        EXPECT_TRUE(c.passed) << c.name;
    }
}

TEST(Determinant, ParallelEnumerationIsBitIdentical) {
  Rng rng(43);
  QM a = random_matrix(rng, AlgQ(Rational(-2), Rational(-3)), 6, 6);
  DetOptions one, four;
  four.workers = 4;
  for (Index k = 0; k < 6; ++k) {
    EXPECT_EQ(rdet(a, k, one).to_string(), rdet(a, k, four).to_string());
    EXPECT_EQ(cdet(a, k, one).to_string(), cdet(a, k, four).to_string());
  }
}

TEST(Determinant, FloatParallelIsBitIdentical) {
  using QF = QMatrix<Float64>;
  Rng rng(44);
  QF a = random_matrix(rng, Algebra<Float64>::hamilton(), 6, 6);
  DetOptions one, three;
  three.workers = 3;
  auto x = rdet(a, 1, one).coords(), y = rdet(a, 1, three).coords();
  for (int c = 0; c < 4; ++c)
    EXPECT_EQ(x[c], y[c]);
}

TEST(Determinant, EnumerationBound) {
  AlgQ h = AlgQ::hamilton();
  QM big = QM::identity(h, 10);
  EXPECT_THROW(rdet(big, 0), enumeration_limit);
  EXPECT_THROW(cdet(big, 0), enumeration_limit);
  EXPECT_THROW(rdet(QM(h, 2, 3), 0), shape_error);
  EXPECT_THROW(rdet(QM::identity(h, 3), 3), shape_error);
}
