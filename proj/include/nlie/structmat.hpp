// Structure matrices of (n+2)-dimensional n-Lie algebras, compound minor
// matrices, the matrix isomorphism criterion, and change of basis.
//
// Convention: a basis change T sends e_j to e'_j = sum_i T(i,j) e_i, i.e.
// the new basis vectors are the columns of T. With C = change_basis(A, T),
//
//   T * B_C = B_A * T_*,   T_*((i,j),(k,l)) = det T without rows i,j and
//                                             columns k,l.

#ifndef NLIE_STRUCTMAT_HPP_
#define NLIE_STRUCTMAT_HPP_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace nlie {

/// Pairs (i,j), i<j, of {0..d-1} in lexicographic order.
inline std::vector<std::pair<int, int>> index_pairs(int d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      out.emplace_back(i, j);
  return out;
}

/// Column (i,j) holds the bracket of all basis vectors except e_i, e_j.
inline Matrix structure_matrix(const Algebra& A) {
  const int d = A.dim();
  if (d != A.arity() + 2)
    throw WrongDimension("structure matrix needs dim = arity + 2, got dim " +
                         std::to_string(d) + " and arity " +
                         std::to_string(A.arity()));
  auto pairs = index_pairs(d);
  const Subset all = (Subset{1} << d) - 1;
  Matrix B(A.field(), d, static_cast<int>(pairs.size()));
  for (size_t c = 0; c < pairs.size(); ++c) {
    Subset s = all & ~(Subset{1} << pairs[c].first) & ~(Subset{1} << pairs[c].second);
    B.set_column(static_cast<int>(c), A.bracket_basis(s));
  }
  return B;
}

/// Inverse of structure_matrix for a given arity.
inline Algebra algebra_from_structure_matrix(const Matrix& B, int n) {
  const int d = n + 2;
  auto pairs = index_pairs(d);
  if (B.rows() != d || B.cols() != static_cast<int>(pairs.size()))
    throw ShapeMismatch("structure matrix for arity " + std::to_string(n) +
                        " must be " + std::to_string(d) + "x" +
                        std::to_string(pairs.size()));
  Algebra A(B.field(), n, d);
  const Subset all = (Subset{1} << d) - 1;
  for (size_t c = 0; c < pairs.size(); ++c) {
    Subset s = all & ~(Subset{1} << pairs[c].first) & ~(Subset{1} << pairs[c].second);
    A.set(s, B.column(static_cast<int>(c)));
  }
  return A;
}

inline Matrix minor_matrix(const Matrix& T, int r1, int r2, int c1, int c2) {
  Matrix m(T.field(), T.rows() - 2, T.cols() - 2);
  int rr = 0;
  for (int r = 0; r < T.rows(); ++r) {
    if (r == r1 || r == r2)
      continue;
    int cc = 0;
    for (int c = 0; c < T.cols(); ++c) {
      if (c == c1 || c == c2)
        continue;
      m(rr, cc++) = T(r, c);
    }
    ++rr;
  }
  return m;
}

/// T_*: rows indexed by deleted row pairs (i,j), columns by deleted column
/// pairs (k,l), both in lexicographic order.
inline Matrix compound_matrix(const Matrix& T, bool require_invertible = true) {
  if (T.rows() != T.cols() || T.rows() < 3)
    throw ShapeMismatch("compound matrix needs a square matrix of size >= 3");
  if (require_invertible && determinant(T) == 0)
    throw SingularMatrix("basis change is singular");
  auto pairs = index_pairs(T.rows());
  const int m = static_cast<int>(pairs.size());
  Matrix out(T.field(), m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out(a, b) = determinant(minor_matrix(T, pairs[a].first, pairs[a].second,
                                           pairs[b].first, pairs[b].second));
  return out;
}

/// True iff T * B == Bbar * T_*, i.e. B is the structure matrix of Bbar's
/// algebra in the basis given by the columns of T.
inline bool iso_criterion(const Matrix& B, const Matrix& Bbar, const Matrix& T) {
  if (B.rows() != Bbar.rows() || B.cols() != Bbar.cols())
    throw ShapeMismatch("structure matrices " + B.shape() + " and " +
                        Bbar.shape() + " differ in shape");
  if (T.rows() != B.rows() || T.cols() != B.rows())
    throw ShapeMismatch("basis change " + T.shape() + " does not fit " +
                        B.shape());
  Matrix Ts = compound_matrix(T);
  return T * B == Bbar * Ts;
}

/// The table of A in the basis e'_j = sum_i T(i,j) e_i.
inline Algebra change_basis(const Algebra& A, const Matrix& T) {
  const int d = A.dim();
  if (T.rows() != d || T.cols() != d)
    throw ShapeMismatch("basis change must be " + std::to_string(d) + "x" +
                        std::to_string(d));
  auto Tinv = inverse(T);
  if (!Tinv)
    throw SingularMatrix("basis change is singular");
  std::vector<Vector> cols;
  for (int j = 0; j < d; ++j)
    cols.push_back(T.column(j));
  Algebra out(A.field(), A.arity(), d);
  for (Subset s : k_subsets(d, A.arity())) {
    std::vector<Vector> args;
    for (int i : subset_indices(s))
      args.push_back(cols[i]);
    out.set(s, Tinv->apply(A.bracket(args)));
  }
  return out;
}

/// Seeded random invertible matrix. Entries are raw 64-bit engine outputs
/// masked to the field, so the result is identical on every platform.
inline Matrix random_invertible(Field f, int d, std::mt19937_64& rng) {
  const unsigned mask = f.order() - 1;
  while (true) {
    Matrix T(f, d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        T(r, c) = static_cast<elem>(rng() & mask);
    if (determinant(T) != 0)
      return T;
  }
}

inline Matrix random_invertible(Field f, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_invertible(f, d, rng);
}

} // namespace nlie

#endif
