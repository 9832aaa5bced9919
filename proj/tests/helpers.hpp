// Conversions between library values and oracle values.

#ifndef NLIE_TESTS_HELPERS_HPP_
#define NLIE_TESTS_HELPERS_HPP_

#include <optional>
#include <random>
#include <vector>

#include <nlie/nlie.hpp>

#include "oracles.hpp"

namespace testing_helpers {

inline oracle::Table to_table(const nlie::Algebra& A) {
  oracle::Table t;
  for (const auto& [key, val] : A.table())
    t[nlie::subset_indices(key)] = val;
  return t;
}

inline oracle::Mat to_mat(const nlie::Matrix& M) {
  oracle::Mat m;
  for (int r = 0; r < M.rows(); ++r)
    m.emplace_back(M.row(r).begin(), M.row(r).end());
  return m;
}

inline nlie::Vector random_vector(const nlie::Field& f, int d, std::mt19937_64& rng) {
  nlie::Vector v(static_cast<size_t>(d));
  for (auto& x : v)
    x = static_cast<nlie::elem>(rng() & (f.order() - 1));
  return v;
}

inline nlie::Algebra random_table(const nlie::Field& f, int n, int d, std::mt19937_64& rng,
                                  int density_percent = 50) {
  nlie::Algebra A(f, n, d);
  for (nlie::Subset s : nlie::k_subsets(d, n))
    if (static_cast<int>(rng() % 100) < density_percent)
      A.set(s, random_vector(f, d, rng));
  return A;
}

// Catalog algebra; without params, the first enumerated parameter choice.
inline nlie::Algebra cat(int n, nlie::CaseId id, nlie::Field f,
                         std::optional<nlie::Params> p = std::nullopt) {
  if (!p)
    p = nlie::enumerate_params(n, id, f).at(0).params;
  return nlie::instantiate(n, id, *p, f);
}

inline nlie::Vector e(int d, int one_based) { return nlie::unit_vector(d, one_based - 1); }

} // namespace testing_helpers

#endif
