// Basis-independent invariants and subspace searches: fingerprints,
// decomposability, codimension-one subalgebras, toral subalgebras.

#ifndef NLIE_INVARIANTS_HPP_
#define NLIE_INVARIANTS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace nlie {

enum class Tri { no, yes, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
  case Tri::no: return "no";
  case Tri::yes: return "yes";
  default: return "unknown";
  }
}

inline constexpr std::uint64_t kDefaultSubspaceBudget = 20000;

inline std::uint64_t count_all_subspaces(unsigned q, int d, int lo, int hi) {
  std::uint64_t total = 0;
  for (int k = lo; k <= hi; ++k) {
    std::uint64_t c = count_subspaces(q, d, k);
    if (c == UINT64_MAX || total + c < total)
      return UINT64_MAX;
    total += c;
  }
  return total;
}

struct Decomposition {
  Tri verdict = Tri::unknown;
  Subspace first, second;  // set when verdict is yes
};

/// Both ideals, direct sum equal to A, and [I1, I2, A, ..., A] = 0.
inline bool is_decomposition(const Algebra& A, const Subspace& I1,
                             const Subspace& I2) {
  const int d = A.dim();
  const int n = A.arity();
  if (I1.dim() == 0 || I2.dim() == 0 || I1.dim() + I2.dim() != d)
    return false;
  if (I1.intersect(I2).dim() != 0)
    return false;
  if (!is_ideal(A, I1) || !is_ideal(A, I2))
    return false;
  for (const auto& u : I1.vectors())
    for (const auto& v : I2.vectors())
      for (Subset z : k_subsets(d, n - 2)) {
        std::vector<Vector> args{u, v};
        for (int i : subset_indices(z))
          args.push_back(unit_vector(d, i));
        if (!is_zero(A.bracket(args)))
          return false;
      }
  return true;
}

/// Scans all proper nonzero subspaces for ideals (at most `budget`
/// subspaces), then looks for a complementary pair.
inline Decomposition is_decomposable(const Algebra& A,
                                     std::uint64_t budget = kDefaultSubspaceBudget) {
  const int d = A.dim();
  const Field f = A.field();
  Decomposition out;
  if (d < 2) {
    out.verdict = Tri::no;
    return out;
  }
  std::vector<std::vector<Subspace>> ideals(static_cast<size_t>(d));
  std::uint64_t seen = 0;
  bool complete = true;
  for (int k = 1; k < d && complete; ++k) {
    for_each_subspace(f, d, k, [&](const Subspace& W) {
      if (++seen > budget) {
        complete = false;
        return false;
      }
      if (is_ideal(A, W))
        ideals[k].push_back(W);
      return true;
    });
  }
  for (int k = 1; 2 * k <= d; ++k)
    for (const auto& I1 : ideals[k])
      for (const auto& I2 : ideals[d - k])
        if (is_decomposition(A, I1, I2)) {
          out.verdict = Tri::yes;
          out.first = I1;
          out.second = I2;
          return out;
        }
  out.verdict = complete ? Tri::no : Tri::unknown;
  return out;
}

struct Fingerprint {
  int n = 0;
  int d = 0;
  int dim_derived = 0;
  std::vector<int> series;
  int dim_center = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool derived_in_center = false;
  int inner_deriv_dim = 0;
  Tri decomposable = Tri::unknown;
};

inline Fingerprint fingerprint(const Algebra& A, bool with_decomposable = false,
                               std::uint64_t budget = kDefaultSubspaceBudget) {
  Fingerprint fp;
  fp.n = A.arity();
  fp.d = A.dim();
  Subspace der = derived_subspace(A);
  Subspace z = center(A);
  fp.dim_derived = der.dim();
  fp.series = descending_series(A);
  fp.dim_center = z.dim();
  fp.abelian = is_abelian(A);
  fp.nilpotent = fp.series.back() == 0;
  fp.derived_in_center = z.contains(der);
  fp.inner_deriv_dim = inner_derivation_dim(A);
  if (with_decomposable)
    fp.decomposable = is_decomposable(A, budget).verdict;
  return fp;
}

/// Name of the first field in which two fingerprints provably differ, or
/// nullopt. Decomposability is compared only when known on both sides.
inline std::optional<std::string> fingerprint_difference(const Fingerprint& a,
                                                         const Fingerprint& b) {
  if (a.n != b.n) return "arity";
  if (a.d != b.d) return "dim";
  if (a.dim_derived != b.dim_derived) return "dim_derived";
  if (a.derived_in_center != b.derived_in_center) return "derived_in_center";
  if (a.abelian != b.abelian) return "abelian";
  if (a.dim_center != b.dim_center) return "dim_center";
  if (a.decomposable != Tri::unknown && b.decomposable != Tri::unknown &&
      a.decomposable != b.decomposable)
    return "decomposable";
  if (a.series != b.series) return "derived_series_dims";
  if (a.nilpotent != b.nilpotent) return "nilpotent";
  if (a.inner_deriv_dim != b.inner_deriv_dim) return "inner_deriv_dim";
  return std::nullopt;
}

/// Visits each nonzero functional in the row space of `S` once up to
/// scalars (leading coefficient 1), starting with the ones whose leading
/// entry is last. Stops when fn returns false.
inline void for_each_functional(const Subspace& S,
                                const std::function<bool(const Vector&)>& fn) {
  const Field& f = S.field();
  const int k = S.dim();
  const unsigned q = f.order();
  auto rows = S.vectors();
  for (int lead = k - 1; lead >= 0; --lead) {
    const int free = k - 1 - lead;
    std::vector<unsigned> c(static_cast<size_t>(free), 0);
    while (true) {
      Vector h = rows[lead];
      for (int i = 0; i < free; ++i)
        axpy(f, h, static_cast<elem>(c[i]), rows[lead + 1 + i]);
      if (!fn(h))
        return;
      int i = 0;
      while (i < free && ++c[i] == q)
        c[i++] = 0;
      if (i == free)
        break;
    }
  }
}

inline Subspace kernel_of(const Field& f, const Vector& h) {
  return Subspace::span_rows(nullspace(Matrix::from_rows(f, static_cast<int>(h.size()), {h})));
}

inline std::optional<Subspace> find_codim1_subalgebra(const Algebra& A) {
  std::optional<Subspace> found;
  for_each_functional(Subspace::whole(A.field(), A.dim()), [&](const Vector& h) {
    Subspace H = kernel_of(A.field(), h);
    if (is_subalgebra(A, H)) {
      found = H;
      return false;
    }
    return true;
  });
  return found;
}

/// A hyperplane containing the derived algebra, closed under the bracket
/// and with a nonzero internal bracket.
inline std::optional<Subspace> find_nonabelian_codim1_containing_derived(
    const Algebra& A) {
  Subspace der = derived_subspace(A);
  if (der.dim() == A.dim())
    return std::nullopt;
  Subspace ann = Subspace::span_rows(der.annihilator());
  std::optional<Subspace> found;
  for_each_functional(ann, [&](const Vector& h) {
    Subspace H = kernel_of(A.field(), h);
    if (is_subalgebra(A, H) && !is_abelian_subspace(A, H)) {
      found = H;
      return false;
    }
    return true;
  });
  return found;
}

/// Sum over all field elements x of dim ker(M - xI); equals the size of M
/// exactly when M is diagonalizable over the field.
inline int eigenspace_total(const Matrix& M) {
  const Field& f = M.field();
  const int d = M.rows();
  int total = 0;
  for (unsigned x = 0; x < f.order(); ++x) {
    Matrix S = M;
    for (int i = 0; i < d; ++i)
      S(i, i) ^= static_cast<elem>(x);
    total += d - rank(S);
  }
  return total;
}

inline bool is_diagonalizable(const Matrix& M) {
  return eigenspace_total(M) == M.rows();
}

/// ad maps of all sorted (n-1)-tuples drawn from the RREF basis of H.
inline std::vector<Matrix> ad_maps_of(const Algebra& A, const Subspace& H) {
  std::vector<Matrix> out;
  auto hs = H.vectors();
  for (Subset s : k_subsets(H.dim(), A.arity() - 1)) {
    std::vector<Vector> xs;
    for (int i : subset_indices(s))
      xs.push_back(hs[i]);
    out.push_back(ad_matrix(A, xs));
  }
  return out;
}

/// Dimension of the sum of the joint eigenspaces of the given maps.
inline int joint_weight_total(const Field& f, int d, const std::vector<Matrix>& maps) {
  std::vector<Subspace> parts{Subspace::whole(f, d)};
  for (const auto& M : maps) {
    std::vector<Subspace> next;
    for (unsigned x = 0; x < f.order(); ++x) {
      Matrix S = M;
      for (int i = 0; i < d; ++i)
        S(i, i) ^= static_cast<elem>(x);
      Subspace ker = Subspace::span_rows(nullspace(S));
      for (const auto& P : parts) {
        Subspace piece = P.intersect(ker);
        if (piece.dim())
          next.push_back(std::move(piece));
      }
    }
    parts = std::move(next);
  }
  int total = 0;
  for (const auto& P : parts)
    total += P.dim();
  return total;
}

inline bool verify_toral(const Algebra& A, const Subspace& H) {
  if (!is_abelian_subspace(A, H))
    return false;
  auto maps = ad_maps_of(A, H);
  for (size_t i = 0; i < maps.size(); ++i)
    for (size_t j = i + 1; j < maps.size(); ++j)
      if (!(maps[i] * maps[j] == maps[j] * maps[i]))
        return false;
  for (const auto& M : maps)
    if (!is_diagonalizable(M))
      return false;
  return true;
}

struct ToralResult {
  int dim = 0;
  bool exact = false;
  Subspace witness;
};

/// Largest toral subalgebra, scanning subspaces from the top dimension
/// down. Exact when the whole scan fits in `budget` subspaces; otherwise a
/// lower bound from the part scanned.
inline ToralResult max_toral_dim(const Algebra& A,
                                 std::uint64_t budget = kDefaultSubspaceBudget) {
  const Field f = A.field();
  const int d = A.dim();
  ToralResult res;
  res.witness = Subspace(f, d);
  std::uint64_t seen = 0;
  bool exhausted = false;
  for (int k = d; k >= 1 && !exhausted; --k) {
    bool found = false;
    for_each_subspace(f, d, k, [&](const Subspace& H) {
      if (++seen > budget) {
        exhausted = true;
        return false;
      }
      if (verify_toral(A, H)) {
        res.witness = H;
        found = true;
        return false;
      }
      return true;
    });
    if (found) {
      res.dim = k;
      res.exact = !exhausted;
      return res;
    }
  }
  res.exact = !exhausted;
  return res;
}

} // namespace nlie

#endif
