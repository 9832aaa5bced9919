// Isomorphism testing and identification against the catalog.
//
// A witness T for A ~ B has the images sigma(e_j) in B as its columns, so
// change_basis(B, T) == A. The search assigns columns one at a time. Every
// bracket equation [x_S]_B = sum_k a_S^k x_k whose n-subset S has at most
// one unassigned column is linear in the unassigned columns; all such
// equations, plus membership of each column in the matching invariant
// subspace of B, are solved jointly at each node, and the next column is
// drawn from the projection of the affine solution set. When every node's
// candidate set is enumerated in full, an unsuccessful search is a proof of
// non-isomorphism.

#ifndef NLIE_CLASSIFY_HPP_
#define NLIE_CLASSIFY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "catalog.hpp"
#include "invariants.hpp"
#include "structmat.hpp"

namespace nlie {

struct SearchOptions {
  std::uint64_t budget = 2000000;  // search nodes per isomorphism test
  std::uint64_t seed = 1;          // sampling at nodes too large to enumerate
  std::optional<std::uint64_t> order_seed;  // shuffles enumeration order
  std::uint64_t enum_cap = 4096;   // larger candidate sets are sampled
  unsigned sample_width = 12;
  std::uint64_t subspace_budget = kDefaultSubspaceBudget;
};

enum class Verdict { isomorphic, not_isomorphic, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::isomorphic: return "Isomorphic";
  case Verdict::not_isomorphic: return "NotIsomorphic";
  default: return "Inconclusive";
  }
}

struct IsoVerdict {
  Verdict kind = Verdict::inconclusive;
  std::optional<Matrix> witness;
  // Fingerprint field or invariant name, "exhausted-search", or a budget
  // report.
  std::string reason;
  std::uint64_t nodes = 0;
};

/// Exact check that T transports B's table onto A's.
inline bool is_witness(const Algebra& A, const Algebra& B, const Matrix& T) {
  if (T.rows() != A.dim() || T.cols() != A.dim() || determinant(T) == 0)
    return false;
  if (A.dim() == A.arity() + 2)
    return iso_criterion(structure_matrix(A), structure_matrix(B), T);
  return change_basis(B, T) == A;
}

namespace detail {

// Subspaces carried to each other by every isomorphism, in a fixed order.
struct NamedSubspace {
  std::string name;
  Subspace space;
};

inline std::vector<NamedSubspace> invariant_subspaces(const Algebra& A) {
  std::vector<NamedSubspace> out;
  auto terms = descending_series_terms(A);
  for (size_t k = 1; k < terms.size(); ++k)
    out.push_back({"series_term_" + std::to_string(k), terms[k]});
  Subspace der = terms[1];
  Subspace z = center(A);
  out.push_back({"center", z});
  out.push_back({"derived_cap_center", der.intersect(z)});
  out.push_back({"derived_plus_center", der.sum(z)});
  return out;
}

// Columns are a basis of F^d passing through each subspace in turn
// (smallest first), so that many basis vectors lie in invariant subspaces.
inline Matrix adapted_basis(const Field& f, int d,
                            const std::vector<NamedSubspace>& subs) {
  std::vector<const Subspace*> order;
  for (const auto& s : subs)
    order.push_back(&s.space);
  std::stable_sort(order.begin(), order.end(),
                   [](const Subspace* a, const Subspace* b) { return a->dim() < b->dim(); });
  std::vector<Vector> cols;
  Subspace span(f, d);
  auto extend = [&](const std::vector<Vector>& vs) {
    for (const auto& v : vs)
      if (!span.contains(v)) {
        cols.push_back(v);
        span = Subspace::span(f, d, cols);
      }
  };
  for (const Subspace* s : order)
    extend(s->vectors());
  std::vector<Vector> units;
  for (int i = 0; i < d; ++i)
    units.push_back(unit_vector(d, i));
  extend(units);
  return Matrix::from_columns(f, d, cols);
}

class IsoSearch {
public:
  IsoSearch(const Algebra& A, const Algebra& B,
            const std::vector<NamedSubspace>& subsA,
            const std::vector<NamedSubspace>& subsB, const SearchOptions& opt)
      : A_(A), B_(B), f_(A.field()), n_(A.arity()), d_(A.dim()), opt_(opt),
        rng_(opt.seed), order_rng_(opt.order_seed.value_or(0)),
        x_(static_cast<size_t>(d_)), constraints_(static_cast<size_t>(d_)),
        generator_(static_cast<size_t>(d_), true) {
    for (size_t s = 0; s < subsA.size(); ++s) {
      Matrix ann = subsB[s].space.annihilator();
      for (int j = 0; j < d_; ++j)
        if (subsA[s].space.contains(unit_vector(d_, j)))
          for (int r = 0; r < ann.rows(); ++r)
            constraints_[j].emplace_back(ann.row(r).begin(), ann.row(r).end());
    }
    Subspace der = derived_subspace(A);
    for (int j = 0; j < d_; ++j)
      generator_[j] = !der.contains(unit_vector(d_, j));
    keys_ = k_subsets(d_, n_);
    for (Subset s : keys_)
      values_.push_back(A.bracket_basis(s));
    mrv_only_ = f_.order() == 2;
  }

  bool run() { return dfs(); }
  bool complete() const { return complete_ && !aborted_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  Matrix witness() const { return Matrix::from_columns(f_, d_, x_v()); }

private:
  std::vector<Vector> x_v() const {
    std::vector<Vector> out;
    for (const auto& x : x_)
      out.push_back(*x);
    return out;
  }

  bool dfs() {
    if (++nodes_ > opt_.budget) {
      aborted_ = true;
      return false;
    }
    std::vector<int> U;
    for (int j = 0; j < d_; ++j)
      if (!x_[j])
        U.push_back(j);
    const int m = static_cast<int>(U.size()) * d_;
    std::vector<int> block(static_cast<size_t>(d_), -1);
    for (size_t i = 0; i < U.size(); ++i)
      block[U[i]] = static_cast<int>(i) * d_;

    std::vector<Vector> rows;
    for (int j : U)
      for (const auto& h : constraints_[j]) {
        Vector row = zero_vector(m + 1);
        std::copy(h.begin(), h.end(), row.begin() + block[j]);
        rows.push_back(std::move(row));
      }
    for (size_t ki = 0; ki < keys_.size(); ++ki) {
      auto idx = subset_indices(keys_[ki]);
      int free_pos = -1, nfree = 0;
      for (int p = 0; p < n_; ++p)
        if (!x_[idx[p]]) {
          free_pos = p;
          ++nfree;
        }
      if (nfree > 1)
        continue;
      const Vector& a = values_[ki];
      // coefficient matrix (d rows) over the unknowns, and constant part
      std::vector<Vector> eq(static_cast<size_t>(d_), zero_vector(m + 1));
      Vector cst = zero_vector(d_);
      std::vector<Vector> args;
      for (int p = 0; p < n_; ++p)
        args.push_back(x_[idx[p]] ? *x_[idx[p]] : zero_vector(d_));
      if (nfree == 0) {
        cst = B_.bracket(args);
      } else {
        const int off = block[idx[free_pos]];
        for (int c = 0; c < d_; ++c) {
          args[free_pos] = unit_vector(d_, c);
          Vector col = B_.bracket(args);
          for (int r = 0; r < d_; ++r)
            eq[r][off + c] ^= col[r];
        }
      }
      for (int k = 0; k < d_; ++k) {
        if (!a[k])
          continue;
        if (x_[k]) {
          axpy(f_, cst, a[k], *x_[k]);
        } else {
          for (int r = 0; r < d_; ++r)
            eq[r][block[k] + r] ^= a[k];
        }
      }
      for (int r = 0; r < d_; ++r) {
        eq[r][m] = cst[r];
        if (!is_zero(eq[r]))
          rows.push_back(std::move(eq[r]));
      }
    }

    if (U.empty()) {
      for (const auto& r : rows)
        if (r[m])
          return false;
      return true;
    }

    Matrix sys = rows.empty() ? Matrix(f_, 0, m + 1) : Matrix::from_rows(f_, m + 1, rows);
    auto piv = rref_inplace(sys);
    if (!piv.empty() && piv.back() == m)
      return false;

    // particular solution and kernel basis of the homogeneous part
    Vector part = zero_vector(m);
    std::vector<bool> is_piv(static_cast<size_t>(m), false);
    for (size_t r = 0; r < piv.size(); ++r) {
      part[piv[r]] = sys(static_cast<int>(r), m);
      is_piv[piv[r]] = true;
    }
    std::vector<Vector> kernel;
    for (int fcol = 0; fcol < m; ++fcol) {
      if (is_piv[fcol])
        continue;
      Vector v = zero_vector(m);
      v[fcol] = 1;
      for (size_t r = 0; r < piv.size(); ++r)
        v[piv[r]] = sys(static_cast<int>(r), fcol);
      kernel.push_back(std::move(v));
    }

    // choose the column to branch on
    int best = -1;
    Subspace best_dirs;
    Vector best_base;
    for (int j : U) {
      std::vector<Vector> dirs;
      for (const auto& k : kernel)
        dirs.emplace_back(k.begin() + block[j], k.begin() + block[j] + d_);
      Subspace D = Subspace::span(f_, d_, dirs);
      bool better = false;
      if (best < 0) {
        better = true;
      } else if (!mrv_only_ && generator_[j] != generator_[best]) {
        better = generator_[j];
      } else {
        better = D.dim() < best_dirs.dim();
      }
      if (better) {
        best = j;
        best_dirs = D;
        best_base.assign(part.begin() + block[j], part.begin() + block[j] + d_);
      }
    }

    std::vector<Vector> assigned;
    for (const auto& x : x_)
      if (x)
        assigned.push_back(*x);
    Subspace taken = Subspace::span(f_, d_, assigned);

    const int k = best_dirs.dim();
    const auto dirs = best_dirs.vectors();
    const unsigned q = f_.order();
    auto make = [&](const std::vector<unsigned>& c) {
      Vector v = best_base;
      for (int i = 0; i < k; ++i)
        axpy(f_, v, static_cast<elem>(c[i]), dirs[i]);
      return v;
    };
    auto try_value = [&](Vector v) {
      if (taken.contains(v))
        return false;
      x_[best] = std::move(v);
      if (dfs())
        return true;
      x_[best].reset();
      return false;
    };

    const long double total = std::pow(static_cast<long double>(q), k);
    if (total <= static_cast<long double>(opt_.enum_cap)) {
      const std::uint64_t count = static_cast<std::uint64_t>(total);
      std::vector<std::uint64_t> order(count);
      for (std::uint64_t i = 0; i < count; ++i)
        order[i] = i;
      if (opt_.order_seed)
        std::shuffle(order.begin(), order.end(), order_rng_);
      std::vector<unsigned> c(static_cast<size_t>(k));
      for (std::uint64_t code : order) {
        for (int i = 0; i < k; ++i) {
          c[i] = static_cast<unsigned>(code % q);
          code /= q;
        }
        if (try_value(make(c)))
          return true;
        if (aborted_)
          return false;
      }
    } else {
      complete_ = false;
      std::vector<unsigned> c(static_cast<size_t>(k));
      for (unsigned s = 0; s < opt_.sample_width; ++s) {
        for (int i = 0; i < k; ++i)
          c[i] = static_cast<unsigned>(rng_() & (q - 1));
        if (try_value(make(c)))
          return true;
        if (aborted_)
          return false;
      }
    }
    return false;
  }

  const Algebra& A_;
  const Algebra& B_;
  Field f_;
  int n_, d_;
  SearchOptions opt_;
  std::mt19937_64 rng_;
  std::mt19937_64 order_rng_;
  std::vector<std::optional<Vector>> x_;
  std::vector<std::vector<Vector>> constraints_;
  std::vector<bool> generator_;
  std::vector<Subset> keys_;
  std::vector<Vector> values_;
  bool mrv_only_ = true;
  bool complete_ = true;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

inline Fingerprint search_fingerprint(const Algebra& A, const SearchOptions& opt) {
  const int d = A.dim();
  bool small = count_all_subspaces(A.field().order(), d, 1, d - 1) <= opt.subspace_budget;
  return fingerprint(A, small, opt.subspace_budget);
}

} // namespace detail

namespace detail {

inline IsoVerdict are_isomorphic_fp(const Algebra& A, const Algebra& B,
                                    const Fingerprint& fa, const Fingerprint& fb,
                                    const SearchOptions& opt) {
  IsoVerdict out;
  if (A == B) {
    out.kind = Verdict::isomorphic;
    out.witness = Matrix::identity(A.field(), A.dim());
    out.reason = "identical tables";
    return out;
  }
  if (auto diff = fingerprint_difference(fa, fb)) {
    out.kind = Verdict::not_isomorphic;
    out.reason = *diff;
    return out;
  }
  auto subsA0 = detail::invariant_subspaces(A);
  auto subsB = detail::invariant_subspaces(B);
  if (subsA0.size() != subsB.size()) {
    out.kind = Verdict::not_isomorphic;
    out.reason = "derived_series_dims";
    return out;
  }
  for (size_t i = 0; i < subsA0.size(); ++i)
    if (subsA0[i].space.dim() != subsB[i].space.dim()) {
      out.kind = Verdict::not_isomorphic;
      out.reason = subsA0[i].name;
      return out;
    }

  // search in a basis of A adapted to its invariant subspaces
  Matrix P = detail::adapted_basis(A.field(), A.dim(), subsA0);
  Algebra Ap = change_basis(A, P);
  auto subsA = detail::invariant_subspaces(Ap);
  detail::IsoSearch search(Ap, B, subsA, subsB, opt);
  bool found = search.run();
  out.nodes = search.nodes();
  if (found) {
    Matrix T = search.witness() * *inverse(P);
    if (!is_witness(A, B, T))
      throw Error("internal error: search produced an invalid witness");
    out.kind = Verdict::isomorphic;
    out.witness = T;
    out.reason = "witness found";
    return out;
  }
  if (search.complete()) {
    out.kind = Verdict::not_isomorphic;
    out.reason = "exhausted-search";
  } else {
    out.kind = Verdict::inconclusive;
    out.reason = search.aborted()
                     ? "budget of " + std::to_string(opt.budget) + " nodes exhausted"
                     : "sampled search found no witness";
  }
  return out;
}

} // namespace detail

/// Decides whether A and B are isomorphic. On success the witness T
/// satisfies change_basis(B, T) == A.
inline IsoVerdict are_isomorphic(const Algebra& A, const Algebra& B,
                                 const SearchOptions& opt = {}) {
  if (!(A.field() == B.field()))
    throw FieldMismatch("algebras over GF(" + A.field().name() + ") and GF(" +
                        B.field().name() + ")");
  if (A.arity() != B.arity() || A.dim() != B.dim())
    throw DimensionMismatch("algebras differ in arity or dimension");
  if (A == B)
    return detail::are_isomorphic_fp(A, B, {}, {}, opt);
  return detail::are_isomorphic_fp(A, B, detail::search_fingerprint(A, opt),
                                   detail::search_fingerprint(B, opt), opt);
}

struct Classification {
  bool found = false;
  CaseId id = CaseId::T32_a;
  Params params;
  std::optional<Matrix> witness;  // change_basis(input, witness) == catalog table
  std::vector<Instance> matches;  // every matching instance when collecting
  int inconclusive = 0;           // candidates whose search was not decided
};

namespace detail {

struct Candidate {
  Instance inst;
  Algebra algebra;
  Fingerprint fp;
};

// One representative per parameter orbit, in catalog order, with its
// fingerprint. Cached per (n, d, field, subspace budget).
inline const std::vector<Candidate>& candidates(int n, int d, const Field& f,
                                                std::uint64_t subspace_budget) {
  using Key = std::tuple<int, int, int, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::vector<Candidate>> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace(Key{n, d, f.degree(), subspace_budget});
  if (!fresh)
    return it->second;
  SearchOptions opt;
  opt.subspace_budget = subspace_budget;
  for (const Instance& inst : enumerate_instances(n, d, f)) {
    bool dup = false;
    for (const Candidate& c : it->second)
      if (c.inst.id == inst.id && param_equivalent(inst.id, c.inst.params, inst.params, f)) {
        dup = true;
        break;
      }
    if (dup)
      continue;
    Algebra C = instantiate(n, inst.id, inst.params, f);
    Fingerprint fp = search_fingerprint(C, opt);
    it->second.push_back({inst, std::move(C), std::move(fp)});
  }
  return it->second;
}

} // namespace detail

/// Identifies A with a catalog entry. The first match in catalog order is
/// returned; with `collect_all` every matching instance is listed.
inline Classification classify(const Algebra& A, const SearchOptions& opt = {},
                               bool collect_all = false) {
  const int n = A.arity();
  const int d = A.dim();
  if (d != n + 1 && d != n + 2)
    throw WrongDimension("classification covers dim n+1 and n+2 only, got dim " +
                         std::to_string(d) + " for arity " + std::to_string(n));
  if (n < 3)
    throw WrongDimension("the catalog requires arity at least 3");
  auto bad = jacobi_check(A);
  if (!bad.empty()) {
    std::string msg = "not an n-Lie algebra: Jacobi identity fails for X = {";
    auto xs = subset_indices(bad[0].x);
    auto ys = subset_indices(bad[0].y);
    for (size_t i = 0; i < xs.size(); ++i)
      msg += (i ? "," : "") + std::to_string(xs[i] + 1);
    msg += "}, Y = {";
    for (size_t i = 0; i < ys.size(); ++i)
      msg += (i ? "," : "") + std::to_string(ys[i] + 1);
    msg += "}";
    throw NotNLie(msg);
  }
  Classification out;
  const Fingerprint fa = detail::search_fingerprint(A, opt);
  for (const auto& cand : detail::candidates(n, d, A.field(), opt.subspace_budget)) {
    if (fingerprint_difference(fa, cand.fp))
      continue;
    const Instance& inst = cand.inst;
    IsoVerdict v = detail::are_isomorphic_fp(cand.algebra, A, cand.fp, fa, opt);
    if (v.kind == Verdict::inconclusive) {
      ++out.inconclusive;
      continue;
    }
    if (v.kind != Verdict::isomorphic)
      continue;
    if (!out.found) {
      out.found = true;
      out.id = inst.id;
      out.params = inst.params;
      out.witness = v.witness;
    }
    out.matches.push_back(inst);
    if (!collect_all)
      break;
  }
  return out;
}

} // namespace nlie

#endif
