// Dense linear algebra over GF(2^m): matrices, row reduction, kernels and
// canonical (RREF) subspaces.

#ifndef NLIE_LINALG_HPP_
#define NLIE_LINALG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace nlie {

using Vector = std::vector<elem>;

inline Vector zero_vector(int d) { return Vector(static_cast<size_t>(d), 0); }

inline Vector unit_vector(int d, int i) {
  Vector v = zero_vector(d);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

inline bool is_zero(std::span<const elem> v) {
  return std::all_of(v.begin(), v.end(), [](elem x) { return x == 0; });
}

// dst += c * src
inline void axpy(const Field& f, std::span<elem> dst, elem c,
                 std::span<const elem> src) {
  if (c == 0)
    return;
  if (c == 1) {
    for (size_t i = 0; i < dst.size(); ++i)
      dst[i] ^= src[i];
    return;
  }
  for (size_t i = 0; i < dst.size(); ++i)
    dst[i] ^= f.mul(c, src[i]);
}

inline Vector scaled(const Field& f, elem c, std::span<const elem> v) {
  Vector out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = f.mul(c, v[i]);
  return out;
}

class Matrix {
public:
  Matrix() = default;
  Matrix(Field f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

  static Matrix identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(Field f, int cols, const std::vector<Vector>& rows) {
    Matrix m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
      if (static_cast<int>(rows[r].size()) != cols)
        throw DimensionMismatch("row length does not match column count");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  static Matrix from_columns(Field f, int rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
      if (static_cast<int>(cols[c].size()) != rows)
        throw DimensionMismatch("column length does not match row count");
      for (int r = 0; r < rows; ++r)
        m(r, c) = cols[c][r];
    }
    return m;
  }

  const Field& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  elem& operator()(int r, int c) { return data_[idx(r, c)]; }
  elem operator()(int r, int c) const { return data_[idx(r, c)]; }

  std::span<elem> row(int r) {
    return {data_.data() + idx(r, 0), static_cast<size_t>(cols_)};
  }
  std::span<const elem> row(int r) const {
    return {data_.data() + idx(r, 0), static_cast<size_t>(cols_)};
  }
  Vector column(int c) const {
    Vector v(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
      v[r] = (*this)(r, c);
    return v;
  }
  void set_column(int c, std::span<const elem> v) {
    for (int r = 0; r < rows_; ++r)
      (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  Vector apply(std::span<const elem> v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(rows_);
    for (int r = 0; r < rows_; ++r) {
      elem acc = 0;
      for (int c = 0; c < cols_; ++c)
        acc ^= f_.mul((*this)(r, c), v[c]);
      out[r] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw ShapeMismatch("matrix product " + a.shape() + " * " + b.shape());
    if (!(a.f_ == b.f_))
      throw FieldMismatch("matrix product over different fields");
    Matrix out(a.f_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        elem x = a(i, k);
        if (x)
          axpy(a.f_, out.row(i), x, b.row(k));
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw ShapeMismatch("matrix sum " + a.shape() + " + " + b.shape());
    Matrix out = a;
    for (size_t i = 0; i < out.data_.size(); ++i)
      out.data_[i] ^= b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.f_ == b.f_ &&
           a.data_ == b.data_;
  }

  bool is_zero() const { return nlie::is_zero(data_); }
  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }
  const std::vector<elem>& data() const { return data_; }

private:
  size_t idx(int r, int c) const {
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
           static_cast<size_t>(c);
  }

  Field f_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<elem> data_;
};

/// In-place reduction to reduced row-echelon form. Returns pivot columns;
/// only the first `pivots.size()` rows are nonzero afterwards.
/// If `ncols` is given, pivots are searched only among the first ncols
/// columns (useful for augmented systems).
inline std::vector<int> rref_inplace(Matrix& m, int ncols = -1) {
  const Field& f = m.field();
  if (ncols < 0)
    ncols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        p = i;
        break;
      }
    if (p < 0)
      continue;
    if (p != r)
      std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(r).begin());
    elem iv = f.inv(m(r, c));
    if (iv != 1)
      for (elem& x : m.row(r))
        x = f.mul(x, iv);
    for (int i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c))
        axpy(f, m.row(i), m(i, c), m.row(r));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref_inplace(m).size()); }

inline elem determinant(Matrix m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("determinant of non-square " + m.shape() + " matrix");
  const Field& f = m.field();
  const int n = m.rows();
  elem det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c)) {
        p = i;
        break;
      }
    if (p < 0)
      return 0;
    // row swaps flip the sign, which is invisible in characteristic 2
    if (p != c)
      std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(c).begin());
    elem piv = m(c, c);
    det = f.mul(det, piv);
    elem iv = f.inv(piv);
    for (int i = c + 1; i < n; ++i)
      if (m(i, c))
        axpy(f, m.row(i), f.mul(m(i, c), iv), m.row(c));
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("inverse of non-square " + m.shape() + " matrix");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto piv = rref_inplace(aug, n);
  if (static_cast<int>(piv.size()) < n)
    return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      inv(r, c) = aug(r, n + c);
  return inv;
}

/// Basis (as rows) of the right kernel {x : m x = 0}.
inline Matrix nullspace(Matrix m) {
  const Field f = m.field();
  const int n = m.cols();
  auto piv = rref_inplace(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : piv)
    is_pivot[c] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vector v = zero_vector(n);
    v[free] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = m(static_cast<int>(r), free);  // -x = x in char 2
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(f, n, basis);
}

/// A linear subspace of F^d, stored as its unique RREF basis, so equality
/// of subspaces is equality of the stored matrices.
class Subspace {
public:
  Subspace() = default;
  Subspace(Field f, int ambient) : basis_(f, 0, ambient) {}

  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(Field f, int ambient, const std::vector<Vector>& vs) {
    Subspace s(f, ambient);
    if (vs.empty())
      return s;
    Matrix m = Matrix::from_rows(f, ambient, vs);
    s.set_from_reduced(std::move(m));
    return s;
  }
  static Subspace span_rows(const Matrix& rows) {
    Subspace s(rows.field(), rows.cols());
    s.set_from_reduced(rows);
    return s;
  }
  static Subspace whole(Field f, int ambient) {
    return span_rows(Matrix::identity(f, ambient));
  }

  const Field& field() const { return basis_.field(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<int> pivots() const {
    std::vector<int> p;
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < ambient(); ++c)
        if (basis_(r, c)) {
          p.push_back(c);
          break;
        }
    return p;
  }
  std::vector<Vector> vectors() const {
    std::vector<Vector> out;
    for (int r = 0; r < dim(); ++r)
      out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
    return out;
  }

  bool contains(std::span<const elem> v) const {
    if (static_cast<int>(v.size()) != ambient())
      throw DimensionMismatch("vector length does not match subspace ambient");
    const Field& f = field();
    Vector w(v.begin(), v.end());
    for (int r = 0; r < dim(); ++r) {
      int p = lead(r);
      if (w[p])
        axpy(f, w, w[p], basis_.row(r));
    }
    return nlie::is_zero(w);
  }
  bool contains(const Subspace& other) const {
    for (int r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r)))
        return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    auto vs = vectors();
    auto ws = o.vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(field(), ambient(), vs);
  }

  Subspace intersect(const Subspace& o) const {
    // x in both  <=>  x = a.U = b.V ; kernel of [U; V]^T in (a,b)
    const int d = ambient();
    if (dim() == 0 || o.dim() == 0)
      return Subspace(field(), d);
    Matrix stacked(field(), d, dim() + o.dim());
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < d; ++c)
        stacked(c, r) = basis_(r, c);
    for (int r = 0; r < o.dim(); ++r)
      for (int c = 0; c < d; ++c)
        stacked(c, dim() + r) = o.basis_(r, c);
    Matrix ker = nullspace(stacked);
    std::vector<Vector> vs;
    for (int k = 0; k < ker.rows(); ++k) {
      Vector x = zero_vector(d);
      for (int r = 0; r < dim(); ++r)
        axpy(field(), x, ker(k, r), basis_.row(r));
      vs.push_back(std::move(x));
    }
    return span(field(), d, vs);
  }

  /// Rows h with h.x = 0 for exactly the x in this subspace.
  Matrix annihilator() const {
    if (dim() == 0)
      return Matrix::identity(field(), ambient());
    return nullspace(basis_);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

private:
  int lead(int r) const {
    for (int c = 0; c < ambient(); ++c)
      if (basis_(r, c))
        return c;
    return -1;
  }
  void set_from_reduced(Matrix m) {
    auto piv = rref_inplace(m);
    Matrix b(m.field(), static_cast<int>(piv.size()), m.cols());
    for (int r = 0; r < b.rows(); ++r)
      std::copy(m.row(r).begin(), m.row(r).end(), b.row(r).begin());
    basis_ = std::move(b);
  }

  Matrix basis_;
};

/// Number of k-dimensional subspaces of GF(q)^d (Gaussian binomial), or
/// UINT64_MAX on overflow.
inline std::uint64_t count_subspaces(unsigned q, int d, int k) {
  if (k < 0 || k > d)
    return 0;
  long double num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (std::pow(static_cast<long double>(q), d - i) - 1);
    den *= (std::pow(static_cast<long double>(q), i + 1) - 1);
  }
  long double v = num / den;
  if (v > 1.8e19L)
    return UINT64_MAX;
  return static_cast<std::uint64_t>(v + 0.5L);
}

/// Calls fn(subspace) for every k-dimensional subspace of F^d in a fixed
/// order (pivot sets lexicographic, then free entries). Stops early when fn
/// returns false; returns false in that case.
inline bool for_each_subspace(Field f, int d, int k,
                              const std::function<bool(const Subspace&)>& fn) {
  if (k == 0)
    return fn(Subspace(f, d));
  std::vector<int> piv(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    piv[i] = i;
  const unsigned q = f.order();
  while (true) {
    // free slots: row r, column c > piv[r], c not a pivot column
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < k; ++r)
      for (int c = piv[r] + 1; c < d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
          slots.emplace_back(r, c);
    std::vector<unsigned> val(slots.size(), 0);
    while (true) {
      Matrix m(f, k, d);
      for (int r = 0; r < k; ++r)
        m(r, piv[r]) = 1;
      for (size_t s = 0; s < slots.size(); ++s)
        m(slots[s].first, slots[s].second) = static_cast<elem>(val[s]);
      if (!fn(Subspace::span_rows(m)))
        return false;
      size_t s = 0;
      while (s < val.size() && ++val[s] == q)
        val[s++] = 0;
      if (s == val.size())
        break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == d - k + i)
      --i;
    if (i < 0)
      break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j)
      piv[j] = piv[j - 1] + 1;
  }
  return true;
}

} // namespace nlie

#endif
