// Command-line front end.
//
// Exit codes: 0 success, 1 verify found violations, 2 parse/usage error,
// 3 mathematical precondition violated, 4 inconclusive search.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nlie/nlie.hpp>

namespace {

using nlie::Algebra;
using nlohmann::json;

constexpr int kExitViolations = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInconclusive = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Algebra load(const std::string& path) { return nlie::parse_algebra(read_file(path)); }

std::string indices_text(nlie::Subset s) {
  std::string out;
  for (int i : nlie::subset_indices(s))
    out += (out.empty() ? "" : " ") + std::to_string(i + 1);
  return out;
}

nlie::Field field_arg(const std::string& s) {
  try {
    return nlie::Field::parse(s);
  } catch (const nlie::Error&) {
    throw UsageError("unknown field '" + s + "'");
  }
}

nlie::CaseId case_arg(const std::string& s) {
  auto id = nlie::parse_case(s);
  if (!id)
    throw UsageError("unknown case '" + s + "'");
  return *id;
}

nlie::Params params_arg(const std::vector<std::string>& kvs) {
  nlie::Params P;
  for (const auto& kv : kvs)
    nlie::set_param(P, kv);
  return P;
}

int cmd_verify(const std::string& file, bool as_json) {
  Algebra A = load(file);
  auto bad = nlie::jacobi_check(A);
  if (as_json) {
    json j{{"schema", "nlie/1"}, {"command", "verify"}, {"ok", bad.empty()}};
    auto arr = json::array();
    for (const auto& v : bad)
      arr.push_back({{"x", nlie::subset_json(v.x)},
                     {"y", nlie::subset_json(v.y)},
                     {"residual", nlie::vector_json(v.residual)}});
    j["violations"] = arr;
    std::cout << j.dump(2) << "\n";
  } else if (bad.empty()) {
    std::cout << "ok: Jacobi identity holds\n";
  } else {
    std::cout << bad.size() << " Jacobi violation(s)\n";
    for (const auto& v : bad)
      std::cout << "X = {" << indices_text(v.x) << "} Y = {" << indices_text(v.y)
                << "}: " << nlie::format_vector_terms(v.residual) << "\n";
  }
  return bad.empty() ? 0 : kExitViolations;
}

int cmd_invariants(const std::string& file, bool as_json, std::uint64_t budget) {
  Algebra A = load(file);
  auto fp = nlie::fingerprint(A, true, budget);
  if (as_json) {
    json j{{"schema", "nlie/1"}, {"command", "invariants"}};
    j["fingerprint"] = nlie::fingerprint_json(fp);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "arity " << fp.n << "\n"
            << "dim " << fp.d << "\n"
            << "dim_derived " << fp.dim_derived << "\n"
            << "derived_series_dims";
  for (int x : fp.series)
    std::cout << " " << x;
  std::cout << "\n"
            << "dim_center " << fp.dim_center << "\n"
            << "abelian " << (fp.abelian ? "yes" : "no") << "\n"
            << "nilpotent " << (fp.nilpotent ? "yes" : "no") << "\n"
            << "derived_in_center " << (fp.derived_in_center ? "yes" : "no") << "\n"
            << "inner_deriv_dim " << fp.inner_deriv_dim << "\n"
            << "decomposable " << nlie::to_string(fp.decomposable) << "\n";
  return 0;
}

int cmd_classify(const std::string& file, const nlie::SearchOptions& opt, bool all,
                 bool as_json) {
  Algebra A = load(file);
  auto res = nlie::classify(A, opt, all);
  if (as_json) {
    json j{{"schema", "nlie/1"}, {"command", "classify"}, {"found", res.found}};
    if (res.found) {
      j["case"] = nlie::case_name(res.id);
      j["params"] = res.params.str();
      j["witness"] = nlie::matrix_json(*res.witness);
    }
    auto m = json::array();
    for (const auto& inst : res.matches)
      m.push_back({{"case", nlie::case_name(inst.id)}, {"params", inst.params.str()}});
    j["matches"] = m;
    j["inconclusive_candidates"] = res.inconclusive;
    std::cout << j.dump(2) << "\n";
  } else if (res.found) {
    std::cout << "case " << nlie::case_name(res.id) << "\n";
    std::cout << "params " << (res.params.str().empty() ? "-" : res.params.str()) << "\n";
    std::cout << "witness\n" << nlie::format_matrix(*res.witness);
    if (res.matches.size() > 1) {
      std::cout << "collisions";
      for (const auto& inst : res.matches)
        std::cout << " " << nlie::case_name(inst.id)
                  << (inst.params.str().empty() ? "" : "(" + inst.params.str() + ")");
      std::cout << "\n";
    }
  } else {
    std::cout << "Unknown (" << res.inconclusive << " candidate(s) inconclusive)\n";
  }
  return res.found ? 0 : kExitInconclusive;
}

int cmd_iso(const std::string& fa, const std::string& fb, const nlie::SearchOptions& opt,
            bool as_json) {
  Algebra A = load(fa);
  Algebra B = load(fb);
  auto v = nlie::are_isomorphic(A, B, opt);
  if (as_json) {
    json j{{"schema", "nlie/1"},
           {"command", "iso"},
           {"verdict", nlie::to_string(v.kind)},
           {"reason", v.reason},
           {"nodes", v.nodes}};
    if (v.witness)
      j["witness"] = nlie::matrix_json(*v.witness);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << nlie::to_string(v.kind) << " (" << v.reason << ")\n";
    if (v.witness)
      std::cout << "witness\n" << nlie::format_matrix(*v.witness);
  }
  return v.kind == nlie::Verdict::inconclusive ? kExitInconclusive : 0;
}

int cmd_catalog(int n, int dim, const std::string& case_s,
                const std::vector<std::string>& kvs, const std::string& field_s,
                bool list) {
  if (dim != n + 1 && dim != n + 2)
    throw nlie::WrongDimension("--dim must be n+1 or n+2");
  if (list) {
    for (const auto& c : nlie::list_cases(n, dim)) {
      std::cout << c.name;
      if (!c.scalars.empty())
        std::cout << "  scalars: " << c.scalars;
      if (!c.r_values.empty()) {
        std::cout << "  r:";
        for (int r : c.r_values)
          std::cout << " " << r;
      }
      if (!c.constraint.empty())
        std::cout << "  [" << c.constraint << "]";
      std::cout << "\n";
    }
    return 0;
  }
  nlie::Field f = field_arg(field_s);
  if (!case_s.empty()) {
    nlie::CaseId id = case_arg(case_s);
    if (nlie::case_dim(id, n) != dim)
      throw nlie::WrongDimension(case_s + " has dimension " +
                                 std::to_string(nlie::case_dim(id, n)));
    std::cout << nlie::emit_algebra(nlie::instantiate(n, id, params_arg(kvs), f));
    return 0;
  }
  bool first = true;
  for (const auto& inst : nlie::enumerate_instances(n, dim, f)) {
    if (!first)
      std::cout << "\n";
    first = false;
    std::cout << "# " << nlie::case_name(inst.id);
    if (!inst.params.str().empty())
      std::cout << " " << inst.params.str();
    std::cout << "\n" << nlie::emit_algebra(nlie::instantiate(n, inst.id, inst.params, f));
  }
  return 0;
}

int cmd_change_basis(const std::string& file, const std::string& matrix) {
  Algebra A = load(file);
  std::string text = matrix;
  if (std::ifstream probe(matrix); probe)
    text = read_file(matrix);
  nlie::Matrix T = nlie::parse_matrix(text, A.field());
  std::cout << nlie::emit_algebra(nlie::change_basis(A, T));
  return 0;
}

int cmd_random(const std::string& case_s, int n, const std::string& field_s,
               std::uint64_t seed, const std::vector<std::string>& kvs) {
  nlie::Field f = field_arg(field_s);
  nlie::CaseId id = case_arg(case_s);
  std::mt19937_64 rng(seed);
  nlie::Params P = params_arg(kvs);
  if (kvs.empty()) {
    auto choices = nlie::enumerate_params(n, id, f);
    if (choices.empty())
      throw nlie::CaseNotRealizable(case_s + " has no valid parameters for n = " +
                                    std::to_string(n) + " over GF(" + f.name() + ")");
    P = choices[rng() % choices.size()].params;
  }
  Algebra A = nlie::instantiate(n, id, P, f);
  nlie::Matrix T = nlie::random_invertible(f, A.dim(), rng);
  std::cout << nlie::emit_algebra(nlie::change_basis(A, T));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for n-Lie algebras over GF(2^m)"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string file, file_b, matrix, case_s, field_s = "2^1";
  std::vector<std::string> kvs;
  std::uint64_t budget = nlie::SearchOptions{}.budget;
  std::uint64_t sub_budget = nlie::kDefaultSubspaceBudget;
  std::uint64_t seed = 1;
  int n = 3, dim = 5;
  bool list = false, all = false;

  auto* verify = app.add_subcommand("verify", "check the Jacobi identity");
  verify->add_option("file", file)->required();
  verify->add_flag("--json", as_json);

  auto* inv = app.add_subcommand("invariants", "print the fingerprint");
  inv->add_option("file", file)->required();
  inv->add_flag("--json", as_json);
  inv->add_option("--budget", sub_budget, "subspaces scanned for decomposability");

  auto* cls = app.add_subcommand("classify", "identify against the catalog");
  cls->add_option("file", file)->required();
  cls->add_option("--budget", budget, "search nodes per candidate");
  cls->add_flag("--all", all, "list every matching catalog entry");
  cls->add_flag("--json", as_json);

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
  iso->add_option("fileA", file)->required();
  iso->add_option("fileB", file_b)->required();
  iso->add_option("--budget", budget, "search nodes");
  iso->add_flag("--json", as_json);

  auto* cat = app.add_subcommand("catalog", "emit catalog algebras");
  cat->add_option("--n", n)->required();
  cat->add_option("--dim", dim)->required();
  cat->add_option("--case", case_s);
  cat->add_option("--param", kvs, "key=value, repeatable");
  cat->add_option("--field", field_s);
  cat->add_flag("--list", list, "list cases and parameter ranges");

  auto* cb = app.add_subcommand("change-basis", "rewrite an algebra in a new basis");
  cb->add_option("file", file)->required();
  cb->add_option("--matrix", matrix, "file or inline rows separated by ';'")->required();

  auto* rnd = app.add_subcommand("random", "catalog entry in a seeded random basis");
  rnd->add_option("--case", case_s)->required();
  rnd->add_option("--n", n)->required();
  rnd->add_option("--field", field_s);
  rnd->add_option("--seed", seed);
  rnd->add_option("--param", kvs, "key=value, repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  nlie::SearchOptions opt;
  opt.budget = budget;
  try {
    if (*verify) return cmd_verify(file, as_json);
    if (*inv) return cmd_invariants(file, as_json, sub_budget);
    if (*cls) return cmd_classify(file, opt, all, as_json);
    if (*iso) return cmd_iso(file, file_b, opt, as_json);
    if (*cat) return cmd_catalog(n, dim, case_s, kvs, field_s, list);
    if (*cb) return cmd_change_basis(file, matrix);
    if (*rnd) return cmd_random(case_s, n, field_s, seed, kvs);
  } catch (const nlie::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlie::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
