// Slow, independent reference implementations used to check the library.
// None of these call into the library beyond Field and plain containers.

#ifndef NLIE_TESTS_ORACLES_HPP_
#define NLIE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <nlie/field.hpp>

namespace oracle {

using nlie::elem;
using Vec = std::vector<elem>;
using Mat = std::vector<Vec>;  // row-major

// Shift-and-add multiplication with reduction after every shift.
inline elem mul(int m, unsigned modulus, elem a, elem b) {
  unsigned x = a, r = 0;
  for (int i = 0; i < m; ++i) {
    if (b >> i & 1)
      r ^= x;
    x <<= 1;
    if (x >> m & 1)
      x ^= modulus;
  }
  return static_cast<elem>(r);
}

// Leibniz expansion; all signs are +1 in characteristic 2.
inline elem det(const nlie::Field& f, const Mat& M) {
  const int n = static_cast<int>(M.size());
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  elem total = 0;
  do {
    elem p = 1;
    for (int i = 0; i < n && p; ++i)
      p = f.mul(p, M[i][perm[i]]);
    total ^= p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// A table keyed by sorted 0-based index tuples.
using Table = std::map<std::vector<int>, Vec>;

// Expands [v_1..v_n] over every injective index tuple.
inline Vec bracket(const nlie::Field& f, int d, const Table& t, const std::vector<Vec>& args) {
  const int n = static_cast<int>(args.size());
  Vec out(static_cast<size_t>(d), 0);
  std::vector<int> idx(static_cast<size_t>(n), 0);
  while (true) {
    std::set<int> distinct(idx.begin(), idx.end());
    if (static_cast<int>(distinct.size()) == n) {
      elem c = 1;
      for (int a = 0; a < n && c; ++a)
        c = f.mul(c, args[a][idx[a]]);
      if (c) {
        std::vector<int> key(distinct.begin(), distinct.end());
        auto it = t.find(key);
        if (it != t.end())
          for (int k = 0; k < d; ++k)
            out[k] ^= f.mul(c, it->second[k]);
      }
    }
    int p = n - 1;
    while (p >= 0 && ++idx[p] == d)
      idx[p--] = 0;
    if (p < 0)
      break;
  }
  return out;
}

// Every vector of F^d, in counting order.
inline std::vector<Vec> all_vectors(const nlie::Field& f, int d) {
  std::vector<Vec> out;
  const unsigned q = f.order();
  Vec v(static_cast<size_t>(d), 0);
  while (true) {
    out.push_back(v);
    int p = 0;
    while (p < d && ++v[p] == q)
      v[p++] = 0;
    if (p == d)
      break;
  }
  return out;
}

// Number of elements of the span, by closure under addition and scaling.
inline size_t span_size(const nlie::Field& f, int d, const std::vector<Vec>& gens) {
  std::set<Vec> span{Vec(static_cast<size_t>(d), 0)};
  for (const auto& g : gens) {
    std::set<Vec> next;
    for (const auto& s : span)
      for (unsigned c = 0; c < f.order(); ++c) {
        Vec v = s;
        for (int k = 0; k < d; ++k)
          v[k] ^= f.mul(static_cast<elem>(c), g[k]);
        next.insert(v);
      }
    span = std::move(next);
  }
  return span.size();
}

inline int log_q(unsigned q, size_t count) {
  int k = 0;
  size_t x = 1;
  while (x < count) {
    x *= q;
    ++k;
  }
  return k;
}

inline int span_dim(const nlie::Field& f, int d, const std::vector<Vec>& gens) {
  return log_q(f.order(), span_size(f, d, gens));
}

inline Vec unit(int d, int i) {
  Vec v(static_cast<size_t>(d), 0);
  v[i] = 1;
  return v;
}

inline std::vector<std::vector<int>> combos(int d, int k) {
  std::vector<std::vector<int>> out;
  if (k > d)
    return out;
  std::vector<bool> pick(static_cast<size_t>(d), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> c;
    for (int i = 0; i < d; ++i)
      if (pick[i])
        c.push_back(i);
    out.push_back(c);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Dimension of the center by testing every vector of F^d.
inline int center_dim(const nlie::Field& f, int n, int d, const Table& t) {
  size_t count = 0;
  auto ys = combos(d, n - 1);
  for (const auto& x : all_vectors(f, d)) {
    bool central = true;
    for (const auto& y : ys) {
      std::vector<Vec> args{x};
      for (int i : y)
        args.push_back(unit(d, i));
      auto v = bracket(f, d, t, args);
      if (std::any_of(v.begin(), v.end(), [](elem e) { return e != 0; })) {
        central = false;
        break;
      }
    }
    count += central;
  }
  return log_q(f.order(), count);
}

// Matrix with row i, column j deleted pairs removed, minors by Leibniz.
inline elem minor(const nlie::Field& f, const Mat& T, int r1, int r2, int c1, int c2) {
  Mat m;
  for (int r = 0; r < static_cast<int>(T.size()); ++r) {
    if (r == r1 || r == r2)
      continue;
    Vec row;
    for (int c = 0; c < static_cast<int>(T.size()); ++c)
      if (c != c1 && c != c2)
        row.push_back(T[r][c]);
    m.push_back(row);
  }
  return det(f, m);
}

} // namespace oracle

#endif
