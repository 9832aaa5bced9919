// n-Lie algebras given by structure constants, and the basic operations on
// them: bracket evaluation, the Jacobi identity, derivations, derived
// series, center, ideals.
//
// Basis indices are 0-based in this API. An n-subset of basis indices is a
// bitmask (bit i <-> e_{i+1}, written 1-based in text).

#ifndef NLIE_ALGEBRA_HPP_
#define NLIE_ALGEBRA_HPP_

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace nlie {

using Subset = std::uint32_t;

inline constexpr int kMaxDim = 16;

inline int subset_size(Subset s) { return std::popcount(s); }

inline std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline Subset subset_of(std::span<const int> idx) {
  Subset s = 0;
  for (int i : idx)
    s |= Subset{1} << i;
  return s;
}

/// Orders subsets of equal size as their sorted index tuples compare
/// lexicographically.
struct LexLess {
  bool operator()(Subset a, Subset b) const {
    if (subset_size(a) != subset_size(b))
      return subset_size(a) < subset_size(b);
    Subset x = a ^ b;
    if (!x)
      return false;
    return (a & x & (~x + 1)) != 0;
  }
};

/// All k-subsets of {0..d-1} in lexicographic order.
inline std::vector<Subset> k_subsets(int d, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > d)
    return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    out.push_back(subset_of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i)
      --i;
    if (i < 0)
      break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace detail {

// Determinant of a small square matrix held in a scratch buffer (destroyed).
inline elem det_inplace(const Field& f, elem* m, int n) {
  elem det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p * n + c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c)
      for (int k = 0; k < n; ++k)
        std::swap(m[p * n + k], m[c * n + k]);
    elem piv = m[c * n + c];
    det = f.mul(det, piv);
    elem iv = f.inv(piv);
    for (int r = c + 1; r < n; ++r) {
      elem x = m[r * n + c];
      if (!x)
        continue;
      elem factor = f.mul(x, iv);
      for (int k = c; k < n; ++k)
        m[r * n + k] ^= f.mul(factor, m[c * n + k]);
    }
  }
  return det;
}

} // namespace detail

class Algebra {
public:
  using Table = std::map<Subset, Vector, LexLess>;

  Algebra() : Algebra(Field(1), 2, 2) {}
  Algebra(Field f, int n, int d) : f_(f), n_(n), d_(d) {
    if (n < 2)
      throw Error("arity must be at least 2");
    if (d < n || d > kMaxDim)
      throw Error("dimension " + std::to_string(d) + " out of range for arity " +
                  std::to_string(n));
  }

  const Field& field() const { return f_; }
  int arity() const { return n_; }
  int dim() const { return d_; }
  const Table& table() const { return table_; }

  /// Sets the bracket of the basis vectors in `s`; a zero value erases it.
  void set(Subset s, Vector v) {
    check_key(s);
    if (static_cast<int>(v.size()) != d_)
      throw DimensionMismatch("bracket value has length " +
                              std::to_string(v.size()) + ", expected " +
                              std::to_string(d_));
    for (elem x : v)
      if (!f_.contains(x))
        throw Error("coefficient " + format_scalar(x) + " not in GF(" +
                    f_.name() + ")");
    if (nlie::is_zero(v))
      table_.erase(s);
    else
      table_[s] = std::move(v);
  }
  void set(std::span<const int> sorted_indices, Vector v) {
    set(key_from_indices(sorted_indices), std::move(v));
  }

  Vector bracket_basis(Subset s) const {
    check_key(s);
    auto it = table_.find(s);
    return it == table_.end() ? zero_vector(d_) : it->second;
  }
  Vector bracket_basis(std::span<const int> sorted_indices) const {
    return bracket_basis(key_from_indices(sorted_indices));
  }

  /// Multilinear alternating extension of the table: the coefficient of
  /// each key S is the determinant of the arguments' coordinates on S.
  Vector bracket(std::span<const Vector> args) const {
    if (static_cast<int>(args.size()) != n_)
      throw DimensionMismatch("bracket takes " + std::to_string(n_) +
                              " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args)
      if (static_cast<int>(a.size()) != d_)
        throw DimensionMismatch("argument length does not match dimension");
    Vector out = zero_vector(d_);
    elem buf[kMaxDim * kMaxDim];
    int cols[kMaxDim];
    for (const auto& [key, val] : table_) {
      Subset s = key;
      for (int b = 0; b < n_; ++b) {
        cols[b] = std::countr_zero(s);
        s &= s - 1;
      }
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          buf[a * n_ + b] = args[a][cols[b]];
      elem c = detail::det_inplace(f_, buf, n_);
      if (c)
        axpy(f_, out, c, val);
    }
    return out;
  }
  Vector bracket(std::initializer_list<Vector> args) const {
    std::vector<Vector> v(args);
    return bracket(std::span<const Vector>(v));
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.f_ == b.f_ && a.n_ == b.n_ && a.d_ == b.d_ && a.table_ == b.table_;
  }

private:
  void check_key(Subset s) const {
    if (subset_size(s) != n_ || (d_ < 32 && (s >> d_) != 0))
      throw BadIndex("bracket key must be " + std::to_string(n_) +
                     " distinct indices below " + std::to_string(d_));
  }
  Subset key_from_indices(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != n_)
      throw BadIndex("expected " + std::to_string(n_) + " indices");
    for (size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= d_)
        throw BadIndex("basis index " + std::to_string(idx[i]) +
                       " out of range");
      if (i && idx[i] <= idx[i - 1])
        throw BadIndex("bracket indices must be strictly increasing");
    }
    return subset_of(idx);
  }

  Field f_;
  int n_;
  int d_;
  Table table_;
};

inline Algebra abelian(Field f, int n, int d) { return Algebra(f, n, d); }

inline std::vector<Vector> basis_vectors(const Algebra& A, Subset s) {
  std::vector<Vector> out;
  for (int i : subset_indices(s))
    out.push_back(unit_vector(A.dim(), i));
  return out;
}

/// [v, e_Y] with v in first position and Y an (n-1)-subset.
inline Vector bracket_with(const Algebra& A, std::span<const elem> v, Subset y) {
  std::vector<Vector> args;
  args.emplace_back(v.begin(), v.end());
  for (int i : subset_indices(y))
    args.push_back(unit_vector(A.dim(), i));
  return A.bracket(args);
}

struct JacobiViolation {
  Subset x;  // n-subset
  Subset y;  // (n-1)-subset
  Vector residual;
};

/// [[x_1..x_n], y_2..y_n] = sum_i [x_1..[x_i, y_2..y_n]..x_n] checked on
/// all basis choices; by multilinearity this covers the whole algebra.
inline std::vector<JacobiViolation> jacobi_check(const Algebra& A) {
  const int n = A.arity();
  const int d = A.dim();
  const Field& f = A.field();
  std::vector<JacobiViolation> bad;
  if (A.table().empty())
    return bad;
  auto xs_all = k_subsets(d, n);
  auto ys_all = k_subsets(d, n - 1);
  // [e_i, e_Y] for all i, Y
  std::vector<std::vector<Vector>> inner(ys_all.size());
  for (size_t yi = 0; yi < ys_all.size(); ++yi)
    for (int i = 0; i < d; ++i)
      inner[yi].push_back(bracket_with(A, unit_vector(d, i), ys_all[yi]));
  for (Subset x : xs_all) {
    Vector bx = A.bracket_basis(x);
    auto xi = subset_indices(x);
    for (size_t yi = 0; yi < ys_all.size(); ++yi) {
      Subset y = ys_all[yi];
      Vector res = bracket_with(A, bx, y);
      for (int pos = 0; pos < n; ++pos) {
        const Vector& v = inner[yi][xi[pos]];
        if (nlie::is_zero(v))
          continue;
        std::vector<Vector> args;
        for (int k = 0; k < n; ++k)
          args.push_back(k == pos ? v : unit_vector(d, xi[k]));
        axpy(f, res, 1, A.bracket(args));
      }
      if (!nlie::is_zero(res))
        bad.push_back({x, y, std::move(res)});
    }
  }
  return bad;
}

inline bool is_nlie(const Algebra& A) { return jacobi_check(A).empty(); }

/// Matrix of e_j -> [x_1..x_{n-1}, e_j].
inline Matrix ad_matrix(const Algebra& A, std::span<const Vector> xs) {
  if (static_cast<int>(xs.size()) != A.arity() - 1)
    throw DimensionMismatch("ad takes n-1 arguments");
  const int d = A.dim();
  Matrix m(A.field(), d, d);
  std::vector<Vector> args(xs.begin(), xs.end());
  args.push_back(zero_vector(d));
  for (int j = 0; j < d; ++j) {
    args.back() = unit_vector(d, j);
    m.set_column(j, A.bracket(args));
  }
  return m;
}

inline Matrix ad_matrix(const Algebra& A, Subset y) {
  auto xs = basis_vectors(A, y);
  return ad_matrix(A, xs);
}

/// D[x_1..x_n] = sum_i [x_1..D x_i..x_n] on every basis n-subset.
inline bool is_derivation(const Algebra& A, const Matrix& D) {
  const int d = A.dim();
  const int n = A.arity();
  if (D.rows() != d || D.cols() != d)
    throw ShapeMismatch("derivation must be " + std::to_string(d) + "x" +
                        std::to_string(d));
  for (Subset s : k_subsets(d, n)) {
    Vector lhs = D.apply(A.bracket_basis(s));
    auto idx = subset_indices(s);
    for (int pos = 0; pos < n; ++pos) {
      std::vector<Vector> args;
      for (int k = 0; k < n; ++k)
        args.push_back(k == pos ? D.column(idx[k]) : unit_vector(d, idx[k]));
      axpy(A.field(), lhs, 1, A.bracket(args));
    }
    if (!nlie::is_zero(lhs))
      return false;
  }
  return true;
}

inline Subspace derived_subspace(const Algebra& A) {
  std::vector<Vector> vs;
  for (const auto& [k, v] : A.table())
    vs.push_back(v);
  return Subspace::span(A.field(), A.dim(), vs);
}

/// [W, A, ..., A]
inline Subspace bracket_with_algebra(const Algebra& A, const Subspace& W) {
  std::vector<Vector> vs;
  auto ys = k_subsets(A.dim(), A.arity() - 1);
  for (const auto& w : W.vectors())
    for (Subset y : ys) {
      Vector v = bracket_with(A, w, y);
      if (!nlie::is_zero(v))
        vs.push_back(std::move(v));
    }
  return Subspace::span(A.field(), A.dim(), vs);
}

/// Terms A^0 = A, A^1, A^2, ... of the descending series, stopping after
/// the first zero term or the first repeated dimension.
inline std::vector<Subspace> descending_series_terms(const Algebra& A) {
  std::vector<Subspace> terms{Subspace::whole(A.field(), A.dim())};
  while (true) {
    Subspace next = bracket_with_algebra(A, terms.back());
    bool stop = next.dim() == 0 || next.dim() == terms.back().dim();
    terms.push_back(std::move(next));
    if (stop)
      break;
  }
  return terms;
}

inline std::vector<int> descending_series(const Algebra& A) {
  std::vector<int> dims;
  for (const auto& t : descending_series_terms(A))
    dims.push_back(t.dim());
  return dims;
}

inline bool is_nilpotent(const Algebra& A) {
  return descending_series(A).back() == 0;
}

inline Subspace center(const Algebra& A) {
  const int d = A.dim();
  auto ys = k_subsets(d, A.arity() - 1);
  Matrix stacked(A.field(), static_cast<int>(ys.size()) * d, d);
  int r0 = 0;
  for (Subset y : ys) {
    Matrix ad = ad_matrix(A, y);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        stacked(r0 + r, c) = ad(r, c);
    r0 += d;
  }
  return Subspace::span_rows(nullspace(stacked));
}

inline int inner_derivation_dim(const Algebra& A) {
  const int d = A.dim();
  std::vector<Vector> flat;
  for (Subset y : k_subsets(d, A.arity() - 1))
    flat.push_back(ad_matrix(A, y).data());
  return Subspace::span(A.field(), d * d, flat).dim();
}

inline bool is_abelian(const Algebra& A) { return A.table().empty(); }

/// Brackets of n elements of W stay in W.
inline bool is_subalgebra(const Algebra& A, const Subspace& W) {
  const int n = A.arity();
  if (W.ambient() != A.dim())
    throw DimensionMismatch("subspace ambient does not match algebra");
  auto ws = W.vectors();
  for (Subset s : k_subsets(W.dim(), n)) {
    std::vector<Vector> args;
    for (int i : subset_indices(s))
      args.push_back(ws[i]);
    if (!W.contains(A.bracket(args)))
      return false;
  }
  return true;
}

/// [W, A, ..., A] is contained in W.
inline bool is_ideal(const Algebra& A, const Subspace& W) {
  if (W.ambient() != A.dim())
    throw DimensionMismatch("subspace ambient does not match algebra");
  auto ys = k_subsets(A.dim(), A.arity() - 1);
  for (const auto& w : W.vectors())
    for (Subset y : ys)
      if (!W.contains(bracket_with(A, w, y)))
        return false;
  return true;
}

/// All brackets of n elements of W vanish.
inline bool is_abelian_subspace(const Algebra& A, const Subspace& W) {
  auto ws = W.vectors();
  for (Subset s : k_subsets(W.dim(), A.arity())) {
    std::vector<Vector> args;
    for (int i : subset_indices(s))
      args.push_back(ws[i]);
    if (!nlie::is_zero(A.bracket(args)))
      return false;
  }
  return true;
}

} // namespace nlie

#endif
