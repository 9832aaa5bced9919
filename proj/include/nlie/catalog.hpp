// The classification tables for (n+1)- and (n+2)-dimensional n-Lie
// algebras in characteristic 2, instantiated for any arity n and any
// supported field. Tables are written with 1-based indices and in terms of
// the omitted basis vectors, as they are displayed.

#ifndef NLIE_CATALOG_HPP_
#define NLIE_CATALOG_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace nlie {

enum class CaseId {
  L21_a, L21_b1, L21_b2, L21_c1, L21_c2, L21_d1, L21_d2,
  T32_a, T32_b1, T32_b2,
  T32_c1, T32_c2, T32_c3, T32_c4, T32_c5, T32_c6,
  T32_d1, T32_d2, T32_d3, T32_d4, T32_d5, T32_d6, T32_d7, T32_d8, T32_d9,
  T32_e1, T32_e2, T32_e3,
  T32_ebar1, T32_ebar2, T32_ebar3, T32_ebar4, T32_ebar5, T32_ebar6,
};

inline constexpr int kCaseCount = static_cast<int>(CaseId::T32_ebar6) + 1;

namespace detail {

// Integer parameters a case takes: none, r only, or r with q (p = r - q).
enum class IntKind { none, r, rq };

struct CaseInfo {
  CaseId id;
  const char* name;
  const char* scalars;  // names of scalar parameters, space separated
  IntKind ints;
  const char* constraint;
};

inline const std::array<CaseInfo, kCaseCount>& case_table() {
  static const std::array<CaseInfo, kCaseCount> t = {{
      {CaseId::L21_a, "L21.a", "", IntKind::none, ""},
      {CaseId::L21_b1, "L21.b1", "", IntKind::none, ""},
      {CaseId::L21_b2, "L21.b2", "", IntKind::none, ""},
      {CaseId::L21_c1, "L21.c1", "", IntKind::none, ""},
      {CaseId::L21_c2, "L21.c2", "beta", IntKind::none, "beta != 0"},
      {CaseId::L21_d1, "L21.d1", "", IntKind::rq,
       "3 <= r <= n+1, q even, 0 < q <= r, p = r - q"},
      {CaseId::L21_d2, "L21.d2", "", IntKind::r, "3 <= r <= n+1"},
      {CaseId::T32_a, "T32.a", "", IntKind::none, ""},
      {CaseId::T32_b1, "T32.b1", "", IntKind::none, ""},
      {CaseId::T32_b2, "T32.b2", "", IntKind::none, ""},
      {CaseId::T32_c1, "T32.c1", "", IntKind::none, ""},
      {CaseId::T32_c2, "T32.c2", "", IntKind::none, ""},
      {CaseId::T32_c3, "T32.c3", "alpha", IntKind::none, "alpha != 0"},
      {CaseId::T32_c4, "T32.c4", "alpha", IntKind::none, "alpha != 0"},
      {CaseId::T32_c5, "T32.c5", "", IntKind::none, ""},
      {CaseId::T32_c6, "T32.c6", "", IntKind::none, ""},
      {CaseId::T32_d1, "T32.d1", "", IntKind::none, ""},
      {CaseId::T32_d2, "T32.d2", "", IntKind::none, ""},
      {CaseId::T32_d3, "T32.d3", "", IntKind::none, ""},
      {CaseId::T32_d4, "T32.d4", "", IntKind::none, ""},
      {CaseId::T32_d5, "T32.d5", "", IntKind::none, ""},
      {CaseId::T32_d6, "T32.d6", "gamma", IntKind::none, "gamma != 0"},
      {CaseId::T32_d7, "T32.d7", "beta", IntKind::none, "beta not in {0, 1}"},
      {CaseId::T32_d8, "T32.d8", "", IntKind::none, ""},
      {CaseId::T32_d9, "T32.d9", "s t u", IntKind::none, "s != 0"},
      {CaseId::T32_e1, "T32.e1", "", IntKind::rq,
       "r even, 4 <= r <= n+1, q even, 2 <= q <= r, p = r - q"},
      {CaseId::T32_e2, "T32.e2", "", IntKind::r, "r even, 4 <= r <= n+1"},
      {CaseId::T32_e3, "T32.e3", "", IntKind::r, "r even, 4 <= r <= n+1"},
      {CaseId::T32_ebar1, "T32.ebar1", "", IntKind::rq,
       "r odd, 5 <= r <= n+1, q even, 2 <= q < r, p = r - q"},
      {CaseId::T32_ebar2, "T32.ebar2", "", IntKind::r, "r odd, 5 <= r <= n+1"},
      {CaseId::T32_ebar3, "T32.ebar3", "", IntKind::r, "r odd, 5 <= r <= n+1"},
      {CaseId::T32_ebar4, "T32.ebar4", "", IntKind::r, "r odd, 5 <= r <= n+1"},
      {CaseId::T32_ebar5, "T32.ebar5", "", IntKind::r, "r odd, 5 <= r <= n+1"},
      {CaseId::T32_ebar6, "T32.ebar6", "", IntKind::r, "r odd, 5 <= r <= n+1"},
  }};
  return t;
}

inline const CaseInfo& info(CaseId id) {
  return case_table()[static_cast<size_t>(id)];
}

} // namespace detail

inline std::string case_name(CaseId id) { return detail::info(id).name; }

inline std::optional<CaseId> parse_case(std::string_view s) {
  for (const auto& c : detail::case_table())
    if (s == c.name)
      return c.id;
  return std::nullopt;
}

/// Cases of the (n+1)-dimensional table are "L21.*", the rest "T32.*".
inline bool is_codim_one_case(CaseId id) {
  return static_cast<int>(id) <= static_cast<int>(CaseId::L21_d2);
}

inline int case_dim(CaseId id, int n) { return is_codim_one_case(id) ? n + 1 : n + 2; }

struct Params {
  std::optional<elem> alpha, beta, gamma, s, t, u;
  std::optional<int> p, q, r;

  friend bool operator==(const Params&, const Params&) = default;

  /// Mutable access by name; nullptr for unknown names.
  std::optional<elem>* scalar(std::string_view name) {
    if (name == "alpha") return &alpha;
    if (name == "beta") return &beta;
    if (name == "gamma") return &gamma;
    if (name == "s") return &s;
    if (name == "t") return &t;
    if (name == "u") return &u;
    return nullptr;
  }
  std::optional<int>* integer(std::string_view name) {
    if (name == "p") return &p;
    if (name == "q") return &q;
    if (name == "r") return &r;
    return nullptr;
  }

  /// "alpha=0x3,r=4" style; empty when there are no parameters.
  std::string str() const {
    std::string out;
    auto add = [&](const std::string& kv) {
      if (!out.empty())
        out += ",";
      out += kv;
    };
    const std::pair<const char*, const std::optional<elem>*> sc[] = {
        {"alpha", &alpha}, {"beta", &beta}, {"gamma", &gamma},
        {"s", &s},         {"t", &t},       {"u", &u}};
    for (const auto& [k, v] : sc)
      if (*v)
        add(std::string(k) + "=" + format_scalar(**v));
    const std::pair<const char*, const std::optional<int>*> in[] = {
        {"p", &p}, {"q", &q}, {"r", &r}};
    for (const auto& [k, v] : in)
      if (*v)
        add(std::string(k) + "=" + std::to_string(**v));
    return out;
  }
};

/// Parses "name=value": scalars as 0x-hex, integers as decimal.
inline void set_param(Params& P, std::string_view kv) {
  auto eq = kv.find('=');
  if (eq == std::string_view::npos)
    throw ParamError("parameter '" + std::string(kv) + "' is not of the form key=value");
  auto key = kv.substr(0, eq);
  auto val = kv.substr(eq + 1);
  Params tmp = P;
  if (auto* sc = tmp.scalar(key)) {
    unsigned v;
    if (!parse_hex(val, v) || v > 0xff)
      throw ParamError("scalar parameter " + std::string(key) + " needs a 0x-hex value");
    *sc = static_cast<elem>(v);
  } else if (auto* in = tmp.integer(key)) {
    int v = 0;
    if (val.empty() || val.size() > 3)
      throw ParamError("integer parameter " + std::string(key) + " is malformed");
    for (char c : val) {
      if (c < '0' || c > '9')
        throw ParamError("integer parameter " + std::string(key) + " is malformed");
      v = v * 10 + (c - '0');
    }
    *in = v;
  } else {
    throw ParamError("unknown parameter '" + std::string(key) + "'");
  }
  P = tmp;
}

namespace detail {

inline bool has_scalar(const CaseInfo& c, std::string_view name) {
  std::string_view list = c.scalars;
  while (!list.empty()) {
    auto sp = list.find(' ');
    auto tok = list.substr(0, sp);
    if (tok == name)
      return true;
    if (sp == std::string_view::npos)
      break;
    list = list.substr(sp + 1);
  }
  return false;
}

inline void require(bool ok, const CaseInfo& c, const std::string& what) {
  if (!ok)
    throw ParamError(std::string(c.name) + ": " + what);
}

// Checks presence, field membership and the case's constraints. The upper
// bound on r depends on n and is left to the realizability check.
inline Params validate(CaseId id, Params P, const Field& f) {
  const CaseInfo& c = info(id);
  const char* names[] = {"alpha", "beta", "gamma", "s", "t", "u"};
  for (const char* nm : names) {
    auto* v = P.scalar(nm);
    if (has_scalar(c, nm)) {
      require(v->has_value(), c, std::string("missing parameter ") + nm);
      require(f.contains(**v), c,
              std::string(nm) + " = " + format_scalar(**v) + " is not in GF(" +
                  f.name() + ")");
    } else {
      require(!v->has_value(), c, std::string("takes no parameter ") + nm);
    }
  }
  if (c.ints == IntKind::none) {
    require(!P.p && !P.q && !P.r, c, "takes no integer parameters");
  } else {
    require(P.r.has_value(), c, "missing parameter r");
    if (c.ints == IntKind::r) {
      require(!P.p && !P.q, c, "takes only the parameter r");
    } else {
      require(P.q.has_value(), c, "missing parameter q");
      if (P.p)
        require(*P.p + *P.q == *P.r, c, "p + q must equal r");
      P.p = *P.r - *P.q;
    }
  }
  switch (id) {
  case CaseId::L21_c2: require(*P.beta != 0, c, "beta must be nonzero"); break;
  case CaseId::T32_c3:
  case CaseId::T32_c4: require(*P.alpha != 0, c, "alpha must be nonzero"); break;
  case CaseId::T32_d6: require(*P.gamma != 0, c, "gamma must be nonzero"); break;
  case CaseId::T32_d7:
    require(*P.beta != 0 && *P.beta != 1, c, "beta must not be 0 or 1");
    break;
  case CaseId::T32_d9: require(*P.s != 0, c, "s must be nonzero"); break;
  case CaseId::L21_d1:
    require(*P.r >= 3, c, "r must be at least 3");
    require(*P.q % 2 == 0 && *P.q > 0 && *P.q <= *P.r, c,
            "q must be even with 0 < q <= r");
    break;
  case CaseId::L21_d2: require(*P.r >= 3, c, "r must be at least 3"); break;
  case CaseId::T32_e1:
    require(*P.r % 2 == 0 && *P.r >= 4, c, "r must be even and at least 4");
    require(*P.q % 2 == 0 && *P.q >= 2 && *P.q <= *P.r, c,
            "q must be even with 2 <= q <= r");
    break;
  case CaseId::T32_e2:
  case CaseId::T32_e3:
    require(*P.r % 2 == 0 && *P.r >= 4, c, "r must be even and at least 4");
    break;
  case CaseId::T32_ebar1:
    require(*P.r % 2 == 1 && *P.r >= 5, c, "r must be odd and at least 5");
    require(*P.q % 2 == 0 && *P.q >= 2 && *P.q < *P.r, c,
            "q must be even with 2 <= q < r");
    break;
  case CaseId::T32_ebar2: case CaseId::T32_ebar3: case CaseId::T32_ebar4:
  case CaseId::T32_ebar5: case CaseId::T32_ebar6:
    require(*P.r % 2 == 1 && *P.r >= 5, c, "r must be odd and at least 5");
    break;
  default: break;
  }
  return P;
}

// Collects brackets given by the omitted basis vectors (1-based) and
// rejects patterns that fall outside the dimension or repeat a key.
class TableBuilder {
public:
  TableBuilder(Field f, int n, int D, const char* name)
      : A_(f, n, D), n_(n), D_(D), name_(name) {}

  // Bracket of all basis vectors except those in `omit` equals
  // sum of coef * e_index.
  void omit(std::initializer_list<int> omit,
            std::initializer_list<std::pair<elem, int>> value) {
    std::vector<int> om(omit);
    Subset key = (Subset{1} << D_) - 1;
    for (int i : om) {
      if (i < 1 || i > D_ || !(key >> (i - 1) & 1))
        fail(om);
      key &= ~(Subset{1} << (i - 1));
    }
    if (subset_size(key) != n_)
      fail(om);
    for (Subset k : keys_)
      if (k == key)
        fail(om);
    keys_.push_back(key);
    Vector v = zero_vector(D_);
    for (auto [coef, idx] : value) {
      if (idx < 1 || idx > D_)
        fail(om);
      v[idx - 1] ^= coef;
    }
    A_.set(key, std::move(v));
  }
  void omit(std::initializer_list<int> om, int idx) { omit(om, {{elem{1}, idx}}); }

  Algebra take() { return std::move(A_); }

private:
  [[noreturn]] void fail(const std::vector<int>& om) {
    std::string s;
    for (int i : om)
      s += (s.empty() ? "" : ",") + std::to_string(i);
    throw CaseNotRealizable(std::string(name_) + " is not realizable for n = " +
                            std::to_string(n_) + ": the bracket omitting {" + s +
                            "} falls outside the basis or repeats another");
  }

  Algebra A_;
  int n_, D_;
  const char* name_;
  std::vector<Subset> keys_;
};

} // namespace detail

/// Builds the displayed table of `id` with arity n over `f`.
inline Algebra instantiate(int n, CaseId id, const Params& params, Field f) {
  if (n < 3)
    throw ParamError("the catalog requires n >= 3");
  const Params P = detail::validate(id, params, f);
  const int D = case_dim(id, n);
  const int N = D;  // last basis index
  detail::TableBuilder b(f, n, D, detail::info(id).name);
  using E = std::pair<elem, int>;
  switch (id) {
  case CaseId::L21_a:
  case CaseId::T32_a:
    break;
  case CaseId::L21_b1: b.omit({1}, 1); break;
  case CaseId::L21_b2: b.omit({N}, 1); break;
  case CaseId::L21_c1:
    b.omit({2}, 2);
    b.omit({1}, 1);
    break;
  case CaseId::L21_c2:
    b.omit({2}, 2);
    b.omit({1}, {E{1, 1}, E{*P.beta, 2}});
    break;
  case CaseId::L21_d1:
    for (int i = 1; i <= *P.p; ++i)
      b.omit({i}, i);
    for (int k = 1; k <= *P.q; ++k)
      b.omit({*P.p + k}, *P.r + 1 - k);
    break;
  case CaseId::L21_d2:
    for (int i = 1; i <= *P.r; ++i)
      b.omit({i}, i);
    break;
  case CaseId::T32_b1: b.omit({1, N}, 1); break;
  case CaseId::T32_b2: b.omit({N - 1, N}, 1); break;
  case CaseId::T32_c1:
    b.omit({1, N}, 1);
    b.omit({2, N}, 2);
    break;
  case CaseId::T32_c2:
    b.omit({1, N}, 1);
    b.omit({2, N}, 2);
    b.omit({2, 3}, 1);
    b.omit({1, 3}, 2);
    break;
  case CaseId::T32_c3:
    b.omit({2, N}, 2);
    b.omit({1, N}, {E{1, 1}, E{*P.alpha, 2}});
    break;
  case CaseId::T32_c4:
    b.omit({2, N}, 2);
    b.omit({1, N}, {E{1, 1}, E{*P.alpha, 2}});
    b.omit({2, 3}, 1);
    b.omit({1, 3}, 2);
    break;
  case CaseId::T32_c5:
    b.omit({1, N}, 1);
    b.omit({1, 2}, 2);
    break;
  case CaseId::T32_c6:
    b.omit({1, N}, 1);
    b.omit({2, 3}, 1);
    b.omit({1, 3}, 2);
    break;
  case CaseId::T32_d1:
    b.omit({3, N}, 3);
    b.omit({2, N}, 2);
    b.omit({1, N}, 1);
    break;
  case CaseId::T32_d2:
    b.omit({1, N}, 1);
    b.omit({2, N}, 3);
    b.omit({3, N}, 2);
    b.omit({1, 3}, 2);
    b.omit({1, 2}, {E{1, 3}, E{1, 2}});
    break;
  case CaseId::T32_d3:
    b.omit({1, N}, 1);
    b.omit({2, N}, 3);
    b.omit({3, N}, 2);
    break;
  case CaseId::T32_d4:
    b.omit({1, N}, 1);
    b.omit({1, 3}, 3);
    b.omit({1, 2}, 2);
    break;
  case CaseId::T32_d5:
    b.omit({1, N}, 1);
    b.omit({1, 3}, 2);
    b.omit({1, 2}, 3);
    break;
  case CaseId::T32_d6:
    b.omit({1, N}, 1);
    b.omit({2, 3}, 1);
    b.omit({1, 3}, {E{1, 2}, E{*P.gamma, 3}});
    b.omit({1, 2}, 2);
    break;
  case CaseId::T32_d7:
    b.omit({2, 3}, 1);
    b.omit({1, 3}, 3);
    b.omit({1, 2}, {E{*P.beta, 2}, E{static_cast<elem>(1 ^ *P.beta), 3}});
    break;
  case CaseId::T32_d8:
    b.omit({2, 3}, 1);
    b.omit({1, 3}, 2);
    b.omit({1, 2}, 3);
    break;
  case CaseId::T32_d9:
    b.omit({2, 3}, 2);
    b.omit({1, 3}, 3);
    b.omit({1, 2}, {E{*P.s, 1}, E{*P.t, 2}, E{*P.u, 3}});
    break;
  case CaseId::T32_e1:
  case CaseId::T32_ebar1:
    for (int i = 1; i <= *P.p; ++i)
      b.omit({i, N}, i);
    for (int k = 1; k <= *P.q; ++k)
      b.omit({*P.p + k, N}, *P.r + 1 - k);
    break;
  case CaseId::T32_e2:
  case CaseId::T32_ebar2:
    for (int i = 1; i <= *P.r; ++i)
      b.omit({i, N}, i);
    break;
  case CaseId::T32_e3:
  case CaseId::T32_ebar5:
    b.omit({1, N}, 1);
    for (int i = 2; i <= *P.r; ++i)
      b.omit({1, i}, i);
    break;
  case CaseId::T32_ebar3:
  case CaseId::T32_ebar4:
    b.omit({1, N}, 1);
    for (int i = 2; i <= *P.r; ++i)
      b.omit({i, N}, *P.r - i + 2);
    if (id == CaseId::T32_ebar3) {
      b.omit({1, 2}, 3);
      b.omit({1, 3}, {E{1, 2}, E{1, 3}});
    } else {
      b.omit({1, 2}, 2);
    }
    break;
  case CaseId::T32_ebar6:
    b.omit({1, N}, 1);
    for (int i = 2; i <= *P.r; ++i)
      b.omit({1, i}, i % 2 == 0 ? i + 1 : i - 1);
    break;
  }
  return b.take();
}

struct CaseSummary {
  CaseId id;
  std::string name;
  std::string scalars;     // scalar parameter names
  std::string constraint;  // human-readable validity ranges
  std::vector<int> r_values;  // realizable r for this n (empty if no r)
};

inline std::vector<CaseId> cases_for_dim(int n, int dim) {
  std::vector<CaseId> out;
  for (const auto& c : detail::case_table())
    if (case_dim(c.id, n) == dim)
      out.push_back(c.id);
  return out;
}

namespace detail {

// Integer parameter choices (r, q) that pass validation, before the
// realizability check.
inline std::vector<Params> integer_grid(CaseId id, int n) {
  const CaseInfo& c = info(id);
  std::vector<Params> out;
  if (c.ints == IntKind::none) {
    out.emplace_back();
    return out;
  }
  const int D = case_dim(id, n);
  for (int r = 1; r <= D; ++r) {
    if (c.ints == IntKind::r) {
      Params P;
      P.r = r;
      out.push_back(P);
    } else {
      for (int q = 0; q <= r; ++q) {
        Params P;
        P.r = r;
        P.q = q;
        out.push_back(P);
      }
    }
  }
  return out;
}

inline bool realizable(int n, CaseId id, const Params& P, const Field& f) {
  try {
    instantiate(n, id, P, f);
    return true;
  } catch (const ParamError&) {
    return false;
  } catch (const CaseNotRealizable&) {
    return false;
  }
}

// Dummy nonzero scalars that satisfy every scalar constraint (used only to
// probe integer realizability, which does not depend on scalars).
inline Params with_probe_scalars(CaseId id, Params P) {
  const CaseInfo& c = info(id);
  if (has_scalar(c, "alpha")) P.alpha = 1;
  if (has_scalar(c, "beta")) P.beta = id == CaseId::T32_d7 ? 2 : 1;
  if (has_scalar(c, "gamma")) P.gamma = 1;
  if (has_scalar(c, "s")) { P.s = 1; P.t = 0; P.u = 0; }
  return P;
}

} // namespace detail

/// Cases of the table for this dimension (n+1 or n+2) that have at least
/// one realizable integer parameter choice.
inline std::vector<CaseSummary> list_cases(int n, int dim) {
  std::vector<CaseSummary> out;
  if (dim != n + 1 && dim != n + 2)
    return out;
  const Field probe_field(2);
  for (CaseId id : cases_for_dim(n, dim)) {
    const auto& c = detail::info(id);
    CaseSummary s{id, c.name, c.scalars, c.constraint, {}};
    bool any = false;
    for (const Params& P : detail::integer_grid(id, n)) {
      if (detail::realizable(n, id, detail::with_probe_scalars(id, P), probe_field)) {
        any = true;
        if (P.r && (s.r_values.empty() || s.r_values.back() != *P.r))
          s.r_values.push_back(*P.r);
      }
    }
    if (any)
      out.push_back(std::move(s));
  }
  return out;
}

struct Instance {
  CaseId id;
  Params params;
};

/// Every valid, realizable parameter choice of `id` over the whole field.
inline std::vector<Instance> enumerate_params(int n, CaseId id, Field f) {
  std::vector<Instance> out;
  const auto& c = detail::info(id);
  const unsigned q = f.order();
  for (Params P : detail::integer_grid(id, n)) {
    std::vector<Params> grid{P};
    const char* names[] = {"alpha", "beta", "gamma", "s", "t", "u"};
    for (const char* nm : names) {
      if (!detail::has_scalar(c, nm))
        continue;
      std::vector<Params> next;
      for (const Params& g : grid)
        for (unsigned x = 0; x < q; ++x) {
          Params h = g;
          *h.scalar(nm) = static_cast<elem>(x);
          next.push_back(h);
        }
      grid = std::move(next);
    }
    for (const Params& g : grid)
      if (detail::realizable(n, id, g, f))
        out.push_back({id, detail::validate(id, g, f)});
  }
  return out;
}

inline std::vector<Instance> enumerate_instances(int n, int dim, Field f) {
  std::vector<Instance> out;
  for (CaseId id : cases_for_dim(n, dim)) {
    auto v = enumerate_params(n, id, f);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

/// The isomorphism rules between parameter values of one family.
inline bool param_equivalent(CaseId id, const Params& a, const Params& b, Field f) {
  const Params P = detail::validate(id, a, f);
  const Params Q = detail::validate(id, b, f);
  if (P.p != Q.p || P.q != Q.q || P.r != Q.r)
    return false;
  switch (id) {
  case CaseId::L21_c2: return *P.beta == *Q.beta;
  case CaseId::T32_c3:
  case CaseId::T32_c4: return *P.alpha == *Q.alpha;
  case CaseId::T32_d6: return *P.gamma == *Q.gamma;
  case CaseId::T32_d7: return *P.beta == *Q.beta;
  case CaseId::T32_d9:
    for (unsigned x = 1; x < f.order(); ++x) {
      elem dl = static_cast<elem>(x);
      if (f.mul(f.pow(dl, 3), *P.s) == *Q.s && f.mul(f.pow(dl, 2), *P.t) == *Q.t &&
          f.mul(dl, *P.u) == *Q.u)
        return true;
    }
    return false;
  default:
    return P == Q;
  }
}

} // namespace nlie

#endif
