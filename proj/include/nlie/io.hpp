// The "nla 1" text format for algebras, plain-text matrices, and JSON
// renderings (schema "nlie/1"). Indices are 1-based in all text forms.
//
//   nla 1
//   field 2^3
//   arity 3
//   dim 5
//   bracket 2 3 4 = 0x1 e1
//   bracket 1 3 4 = 0x1 e2 + 0x3 e5

#ifndef NLIE_IO_HPP_
#define NLIE_IO_HPP_

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "invariants.hpp"

namespace nlie {

enum class ParseErrorKind {
  syntax,
  missing_header,
  unknown_field,
  bad_index,
  non_increasing_indices,
  duplicate_bracket,
  scalar_out_of_range,
};

inline const char* to_string(ParseErrorKind k) {
  switch (k) {
  case ParseErrorKind::syntax: return "Syntax";
  case ParseErrorKind::missing_header: return "MissingHeader";
  case ParseErrorKind::unknown_field: return "UnknownField";
  case ParseErrorKind::bad_index: return "BadIndex";
  case ParseErrorKind::non_increasing_indices: return "NonIncreasingIndices";
  case ParseErrorKind::duplicate_bracket: return "DuplicateBracket";
  default: return "ScalarOutOfRange";
  }
}

struct ParseError : Error {
  ParseError(int line, ParseErrorKind kind, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + msg),
        line(line), kind(kind) {}
  int line;
  ParseErrorKind kind;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty())
        out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(std::move(cur));
  return out;
}

inline bool parse_uint(std::string_view s, int& out) {
  if (s.empty() || s.size() > 6)
    return false;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    lines.push_back(std::move(cur));
  for (auto& l : lines) {
    auto h = l.find('#');
    if (h != std::string::npos)
      l.erase(h);
  }
  return lines;
}

} // namespace detail

inline Algebra parse_algebra(std::string_view text) {
  using K = ParseErrorKind;
  auto lines = detail::content_lines(text);
  bool header = false;
  std::optional<Field> field;
  std::optional<int> arity, dim;
  std::optional<Algebra> A;
  std::vector<Subset> seen;
  auto ensure_algebra = [&](int ln) {
    if (A)
      return;
    if (!field || !arity || !dim)
      throw ParseError(ln, K::missing_header, "field, arity and dim must precede brackets");
    try {
      A.emplace(*field, *arity, *dim);
    } catch (const Error& e) {
      throw ParseError(ln, K::syntax, e.what());
    }
  };
  for (size_t li = 0; li < lines.size(); ++li) {
    const int ln = static_cast<int>(li) + 1;
    std::string line = lines[li];
    for (size_t p = 0; p < line.size(); ++p)
      if (line[p] == '+' || line[p] == '=') {
        line.insert(p + 1, " ");
        line.insert(p, " ");
        p += 2;
      }
    auto tok = detail::split_ws(line);
    if (tok.empty())
      continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "nla" || tok[1] != "1")
        throw ParseError(ln, K::missing_header, "expected 'nla 1'");
      header = true;
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "field" || kw == "arity" || kw == "dim") {
      if (A)
        throw ParseError(ln, K::syntax, kw + " after the first bracket");
      if (tok.size() != 2)
        throw ParseError(ln, K::syntax, kw + " takes one value");
      if (kw == "field") {
        if (field)
          throw ParseError(ln, K::syntax, "field given twice");
        try {
          field = Field::parse(tok[1]);
        } catch (const Error&) {
          throw ParseError(ln, K::unknown_field, "unknown field '" + tok[1] + "'");
        }
      } else {
        int v;
        if (!detail::parse_uint(tok[1], v))
          throw ParseError(ln, K::syntax, "bad " + kw + " value '" + tok[1] + "'");
        auto& slot = kw == "arity" ? arity : dim;
        if (slot)
          throw ParseError(ln, K::syntax, kw + " given twice");
        slot = v;
      }
      continue;
    }
    if (kw != "bracket")
      throw ParseError(ln, K::syntax, "unknown keyword '" + kw + "'");
    ensure_algebra(ln);
    const int n = A->arity();
    const int d = A->dim();
    size_t eq = 1;
    while (eq < tok.size() && tok[eq] != "=")
      ++eq;
    if (eq == tok.size())
      throw ParseError(ln, K::syntax, "missing '='");
    if (static_cast<int>(eq) - 1 != n)
      throw ParseError(ln, K::syntax,
                       "expected " + std::to_string(n) + " indices, got " +
                           std::to_string(eq - 1));
    std::vector<int> idx;
    for (size_t i = 1; i < eq; ++i) {
      int v;
      if (!detail::parse_uint(tok[i], v))
        throw ParseError(ln, K::syntax, "bad index '" + tok[i] + "'");
      if (v < 1 || v > d)
        throw ParseError(ln, K::bad_index, "index " + tok[i] + " outside 1.." + std::to_string(d));
      if (!idx.empty() && v - 1 <= idx.back())
        throw ParseError(ln, K::non_increasing_indices, "indices must be strictly increasing");
      idx.push_back(v - 1);
    }
    Subset key = subset_of(idx);
    for (Subset s : seen)
      if (s == key)
        throw ParseError(ln, K::duplicate_bracket, "bracket listed twice");
    seen.push_back(key);
    // terms: coef eK (+ coef eK)*
    Vector v = zero_vector(d);
    std::vector<bool> used(static_cast<size_t>(d), false);
    size_t p = eq + 1;
    if (p >= tok.size())
      throw ParseError(ln, K::syntax, "empty right-hand side");
    while (true) {
      if (p + 1 >= tok.size())
        throw ParseError(ln, K::syntax, "expected '<scalar> e<k>'");
      unsigned c;
      if (!parse_hex(tok[p], c))
        throw ParseError(ln, K::syntax, "bad scalar '" + tok[p] + "'");
      if (!A->field().contains(c))
        throw ParseError(ln, K::scalar_out_of_range,
                         tok[p] + " is not in GF(" + A->field().name() + ")");
      const std::string& e = tok[p + 1];
      int k;
      if (e.size() < 2 || e[0] != 'e' || !detail::parse_uint(std::string_view(e).substr(1), k))
        throw ParseError(ln, K::syntax, "bad basis vector '" + e + "'");
      if (k < 1 || k > d)
        throw ParseError(ln, K::bad_index, e + " outside e1..e" + std::to_string(d));
      if (used[k - 1])
        throw ParseError(ln, K::syntax, e + " appears twice");
      used[k - 1] = true;
      v[k - 1] = static_cast<elem>(c);
      p += 2;
      if (p == tok.size())
        break;
      if (tok[p] != "+")
        throw ParseError(ln, K::syntax, "expected '+', got '" + tok[p] + "'");
      ++p;
    }
    A->set(key, std::move(v));
  }
  if (!header)
    throw ParseError(static_cast<int>(lines.size()) + 1, ParseErrorKind::missing_header,
                     "expected 'nla 1'");
  ensure_algebra(static_cast<int>(lines.size()) + 1);
  return std::move(*A);
}

inline std::string format_vector_terms(std::span<const elem> v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (!v[k])
      continue;
    if (!out.empty())
      out += " + ";
    out += format_scalar(v[k]) + " e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

inline std::string emit_algebra(const Algebra& A) {
  std::string out = "nla 1\nfield " + A.field().name() + "\narity " +
                    std::to_string(A.arity()) + "\ndim " + std::to_string(A.dim()) + "\n";
  for (const auto& [key, val] : A.table()) {
    out += "bracket";
    for (int i : subset_indices(key))
      out += " " + std::to_string(i + 1);
    out += " = " + format_vector_terms(val) + "\n";
  }
  return out;
}

/// Rows separated by newlines or ';', entries by whitespace, 0x-hex.
inline Matrix parse_matrix(std::string_view text, Field f) {
  std::string t(text);
  for (char& c : t)
    if (c == ';')
      c = '\n';
  std::vector<Vector> rows;
  int ln = 0;
  for (const auto& line : detail::content_lines(t)) {
    ++ln;
    auto tok = detail::split_ws(line);
    if (tok.empty())
      continue;
    Vector row;
    for (const auto& s : tok) {
      unsigned v;
      if (!parse_hex(s, v))
        throw ParseError(ln, ParseErrorKind::syntax, "bad matrix entry '" + s + "'");
      if (!f.contains(v))
        throw ParseError(ln, ParseErrorKind::scalar_out_of_range,
                         s + " is not in GF(" + f.name() + ")");
      row.push_back(static_cast<elem>(v));
    }
    if (!rows.empty() && row.size() != rows[0].size())
      throw ParseError(ln, ParseErrorKind::syntax, "rows differ in length");
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw ParseError(1, ParseErrorKind::syntax, "empty matrix");
  return Matrix::from_rows(f, static_cast<int>(rows[0].size()), rows);
}

/// Row-major, one row per line.
inline std::string format_matrix(const Matrix& M) {
  std::string out;
  for (int r = 0; r < M.rows(); ++r) {
    for (int c = 0; c < M.cols(); ++c)
      out += (c ? " " : "") + format_scalar(M(r, c));
    out += "\n";
  }
  return out;
}

inline nlohmann::json vector_json(std::span<const elem> v) {
  auto j = nlohmann::json::array();
  for (elem x : v)
    j.push_back(format_scalar(x));
  return j;
}

inline nlohmann::json matrix_json(const Matrix& M) {
  auto j = nlohmann::json::array();
  for (int r = 0; r < M.rows(); ++r)
    j.push_back(vector_json(M.row(r)));
  return j;
}

inline nlohmann::json subset_json(Subset s) {
  auto j = nlohmann::json::array();
  for (int i : subset_indices(s))
    j.push_back(i + 1);
  return j;
}

inline nlohmann::json subspace_json(const Subspace& W) {
  return matrix_json(W.basis());
}

inline nlohmann::json algebra_json(const Algebra& A) {
  nlohmann::json j;
  j["schema"] = "nlie/1";
  j["field"] = A.field().name();
  j["arity"] = A.arity();
  j["dim"] = A.dim();
  auto br = nlohmann::json::array();
  for (const auto& [key, val] : A.table())
    br.push_back({{"indices", subset_json(key)}, {"value", vector_json(val)}});
  j["brackets"] = br;
  return j;
}

inline nlohmann::json fingerprint_json(const Fingerprint& fp) {
  return {{"arity", fp.n},
          {"dim", fp.d},
          {"dim_derived", fp.dim_derived},
          {"derived_series_dims", fp.series},
          {"dim_center", fp.dim_center},
          {"abelian", fp.abelian},
          {"nilpotent", fp.nilpotent},
          {"derived_in_center", fp.derived_in_center},
          {"inner_deriv_dim", fp.inner_deriv_dim},
          {"decomposable", to_string(fp.decomposable)}};
}

} // namespace nlie

#endif
