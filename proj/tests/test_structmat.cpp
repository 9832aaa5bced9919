#include <gtest/gtest.h>

#include <random>

#include <nlie/nlie.hpp>

#include "helpers.hpp"

using namespace nlie;
using testing_helpers::cat;
using testing_helpers::e;
using testing_helpers::random_table;
using testing_helpers::to_mat;
using testing_helpers::to_table;

namespace {

int pair_column(int d, int i, int j) {
  auto pairs = index_pairs(d);
  for (int c = 0; c < static_cast<int>(pairs.size()); ++c)
    if (pairs[c] == std::pair{i, j})
      return c;
  return -1;
}

std::vector<int> nonzero_columns(const Matrix& B) {
  std::vector<int> out;
  for (int c = 0; c < B.cols(); ++c)
    if (!is_zero(B.column(c)))
      out.push_back(c);
  return out;
}

// change_basis recomputed with the oracle bracket and a solve by T^-1.
oracle::Table oracle_change_basis(const Algebra& A, const Matrix& T) {
  const Field& f = A.field();
  const int d = A.dim();
  auto t = to_table(A);
  Matrix Tinv = *inverse(T);
  oracle::Table out;
  for (const auto& s : oracle::combos(d, A.arity())) {
    std::vector<oracle::Vec> args;
    for (int i : s)
      args.push_back(T.column(i));
    auto v = Tinv.apply(oracle::bracket(f, d, t, args));
    if (std::any_of(v.begin(), v.end(), [](elem x) { return x != 0; }))
      out[s] = v;
  }
  return out;
}

Matrix diag(const Field& f, const std::vector<elem>& ds) {
  Matrix m(f, static_cast<int>(ds.size()), static_cast<int>(ds.size()));
  for (size_t i = 0; i < ds.size(); ++i)
    m(static_cast<int>(i), static_cast<int>(i)) = ds[i];
  return m;
}

} // namespace

TEST(StructMat, AbelianIsZero) {
  EXPECT_TRUE(structure_matrix(abelian(Field(1), 3, 5)).is_zero());
}

TEST(StructMat, B1SingleColumn) {
  Matrix B = structure_matrix(cat(3, CaseId::T32_b1, Field(1)));
  EXPECT_EQ(B.rows(), 5);
  EXPECT_EQ(B.cols(), 10);
  EXPECT_EQ(nonzero_columns(B), std::vector<int>{pair_column(5, 0, 4)});
  EXPECT_EQ(B.column(pair_column(5, 0, 4)), e(5, 1));
}

TEST(StructMat, C2FourColumns) {
  Field f(1);
  Algebra A = cat(3, CaseId::T32_c2, f);
  Matrix B = structure_matrix(A);
  EXPECT_EQ(nonzero_columns(B).size(), 4u);
  // each column equals the bracket of the complementary basis vectors
  auto t = to_table(A);
  auto pairs = index_pairs(5);
  for (int c = 0; c < 10; ++c) {
    std::vector<oracle::Vec> args;
    for (int k = 0; k < 5; ++k)
      if (k != pairs[c].first && k != pairs[c].second)
        args.push_back(oracle::unit(5, k));
    EXPECT_EQ(B.column(c), oracle::bracket(f, 5, t, args));
  }
}

TEST(StructMat, RoundTripAndWrongDimension) {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 5; ++n) {
    Algebra A = random_table(Field(2), n, n + 2, rng);
    EXPECT_EQ(algebra_from_structure_matrix(structure_matrix(A), n), A);
  }
  EXPECT_THROW(structure_matrix(cat(3, CaseId::L21_b1, Field(1))), WrongDimension);
  EXPECT_THROW(algebra_from_structure_matrix(Matrix(Field(1), 5, 9), 3), ShapeMismatch);
}

TEST(StructMat, CompoundOfIdentityAndDiagonal) {
  for (int m : {1, 3}) {
    Field f(m);
    EXPECT_EQ(compound_matrix(Matrix::identity(f, 5)), Matrix::identity(f, 10));
    std::vector<elem> ds{1, 2, 3, 1, static_cast<elem>(f.order() - 1)};
    if (m == 1)
      ds = {1, 1, 1, 1, 1};
    Matrix Ts = compound_matrix(diag(f, ds));
    auto pairs = index_pairs(5);
    for (int a = 0; a < 10; ++a)
      for (int b = 0; b < 10; ++b) {
        elem expect = 0;
        if (a == b) {
          expect = 1;
          for (int k = 0; k < 5; ++k)
            if (k != pairs[a].first && k != pairs[a].second)
              expect = f.mul(expect, ds[k]);
        }
        EXPECT_EQ(Ts(a, b), expect);
      }
  }
}

TEST(StructMat, CompoundOfTranspositionIsPairPermutation) {
  Field f(1);
  Matrix P(f, 5, 5);
  P(0, 1) = P(1, 0) = P(2, 2) = P(3, 3) = P(4, 4) = 1;
  Matrix Ts = compound_matrix(P);
  auto pairs = index_pairs(5);
  auto swap01 = [](int i) { return i == 0 ? 1 : i == 1 ? 0 : i; };
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) {
      int i = swap01(pairs[a].first), j = swap01(pairs[a].second);
      std::pair<int, int> img{std::min(i, j), std::max(i, j)};
      EXPECT_EQ(Ts(a, b), img == pairs[b] ? 1 : 0);
      EXPECT_EQ(Ts(a, b),
                oracle::minor(f, to_mat(P), pairs[a].first, pairs[a].second, pairs[b].first,
                              pairs[b].second));
    }
}

TEST(StructMat, CompoundEntriesMatchLeibnizMinors) {
  std::mt19937_64 rng(32);
  for (int m : {1, 2, 3}) {
    Field f(m);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix T = random_invertible(f, 5, rng);
      Matrix Ts = compound_matrix(T);
      auto pairs = index_pairs(5);
      for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
          ASSERT_EQ(Ts(a, b), oracle::minor(f, to_mat(T), pairs[a].first, pairs[a].second,
                                            pairs[b].first, pairs[b].second));
    }
  }
}

TEST(StructMat, CompoundIsMultiplicative) {
  std::mt19937_64 rng(33);
  for (int m : {1, 2, 3})
    for (int d : {4, 5, 6}) {
      Field f(m);
      Matrix T = random_invertible(f, d, rng);
      Matrix S = random_invertible(f, d, rng);
      EXPECT_EQ(compound_matrix(T * S), compound_matrix(T) * compound_matrix(S));
    }
}

TEST(StructMat, CompoundRejectsSingular) {
  Field f(1);
  Matrix T = Matrix::identity(f, 5);
  T(2, 2) = 0;
  EXPECT_THROW(compound_matrix(T), SingularMatrix);
  EXPECT_NO_THROW(compound_matrix(T, false));
}

TEST(StructMat, ChangeBasisMatchesOracleExpansion) {
  std::mt19937_64 rng(34);
  for (int m : {1, 3}) {
    Field f(m);
    for (int n : {2, 3}) {
      for (int d : {n + 1, n + 2, n + 3}) {
        Algebra A = random_table(f, n, d, rng);
        Matrix T = random_invertible(f, d, rng);
        EXPECT_EQ(to_table(change_basis(A, T)), oracle_change_basis(A, T));
      }
    }
  }
}

TEST(StructMat, TwoPathEquivalence) {
  std::mt19937_64 rng(35);
  for (int m : {1, 2, 3})
    for (int n : {2, 3, 4}) {
      Field f(m);
      for (int trial = 0; trial < 10; ++trial) {
        // the identity is pure multilinear algebra; Jacobi is not needed
        Algebra A = random_table(f, n, n + 2, rng);
        Matrix T = random_invertible(f, n + 2, rng);
        Matrix B = structure_matrix(A);
        Matrix C = structure_matrix(change_basis(A, T));
        EXPECT_EQ(T * C, B * compound_matrix(T));
        EXPECT_TRUE(iso_criterion(C, B, T));
      }
    }
}

TEST(StructMat, TransposedFormIsNotTheConvention) {
  // T' B = Bbar T_* fails for generic T; only T B = Bbar T_* holds.
  std::mt19937_64 rng(36);
  Field f(1);
  Algebra A = cat(3, CaseId::T32_c4, f);
  int transposed_holds = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix T = random_invertible(f, 5, rng);
    Matrix C = structure_matrix(change_basis(A, T));
    Matrix B = structure_matrix(A);
    ASSERT_TRUE(iso_criterion(C, B, T));
    transposed_holds += T.transpose() * C == B * compound_matrix(T);
  }
  EXPECT_LT(transposed_holds, 20);
}

TEST(StructMat, IsoCriterionBasics) {
  Field f(1);
  Matrix B = structure_matrix(cat(3, CaseId::T32_c2, f));
  EXPECT_TRUE(iso_criterion(B, B, Matrix::identity(f, 5)));
  EXPECT_THROW(iso_criterion(B, Matrix(f, 5, 9), Matrix::identity(f, 5)), ShapeMismatch);
  EXPECT_THROW(iso_criterion(B, B, Matrix::identity(f, 4)), ShapeMismatch);
}

TEST(StructMat, FunctorialityAndIdentity) {
  std::mt19937_64 rng(37);
  Field f(3);
  Algebra A = random_table(f, 3, 6, rng);
  EXPECT_EQ(change_basis(A, Matrix::identity(f, 6)), A);
  Matrix T = random_invertible(f, 6, rng);
  Matrix S = random_invertible(f, 6, rng);
  EXPECT_EQ(change_basis(change_basis(A, T), *inverse(T)), A);
  EXPECT_EQ(change_basis(change_basis(A, T), S), change_basis(A, T * S));
  Matrix Sing(f, 6, 6);
  EXPECT_THROW(change_basis(A, Sing), SingularMatrix);
}

TEST(StructMat, JacobiPreservedByBasisChange) {
  std::mt19937_64 rng(38);
  Field f(1);
  for (int trial = 0; trial < 10; ++trial) {
    Algebra A = random_table(f, 3, 5, rng, 25);
    Matrix T = random_invertible(f, 5, rng);
    EXPECT_EQ(jacobi_check(A).empty(), jacobi_check(change_basis(A, T)).empty());
  }
  Algebra c1 = cat(3, CaseId::T32_c1, f);
  EXPECT_TRUE(jacobi_check(change_basis(c1, random_invertible(f, 5, rng))).empty());
}

TEST(StructMat, SqrtScalingNormalizesC1Prime) {
  // (c1)' : [e1,e3,..,e_{n+1}] = alpha e2, [e2,..,e_{n+1}] = e1
  for (int m : {2, 3})
    for (int n : {3, 4}) {
      Field f(m);
      const int d = n + 1;
      for (elem alpha = 1; alpha < f.order(); ++alpha) {
        Algebra P(f, n, d);
        const Subset all = (Subset{1} << d) - 1;
        P.set(all & ~Subset{2}, scaled(f, alpha, e(d, 2)));
        P.set(all & ~Subset{1}, e(d, 1));
        elem r = f.sqrt(alpha);
        Matrix T = Matrix::identity(f, d);
        T(1, 1) = r;
        T(d - 1, d - 1) = f.inv(r);
        EXPECT_EQ(change_basis(P, T), cat(n, CaseId::L21_c1, f)) << "alpha=" << int(alpha);
      }
    }
}

TEST(StructMat, InvariantsSurviveBasisChange) {
  std::mt19937_64 rng(39);
  Field f(3);
  Algebra A = cat(3, CaseId::T32_c1, f);
  for (int trial = 0; trial < 10; ++trial) {
    Algebra C = change_basis(A, random_invertible(f, 5, rng));
    EXPECT_EQ(derived_subspace(C).dim(), derived_subspace(A).dim());
    EXPECT_EQ(center(C).dim(), center(A).dim());
    EXPECT_EQ(descending_series(C), descending_series(A));
    EXPECT_EQ(inner_derivation_dim(C), inner_derivation_dim(A));
  }
}

TEST(StructMat, RandomInvertibleIsSeeded) {
  Field f(2);
  EXPECT_EQ(random_invertible(f, 6, 99), random_invertible(f, 6, 99));
  EXPECT_NE(determinant(random_invertible(f, 6, 7)), 0);
}
