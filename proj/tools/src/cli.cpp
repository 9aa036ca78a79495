#include "plucker_cli/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plucker/combinatorics.hpp"
#include "plucker/grassmann_s2.hpp"
#include "plucker/straightening.hpp"
#include "plucker/sym_power.hpp"
#include "plucker_cli/json_io.hpp"

namespace plucker::cli {

namespace {

constexpr long kVerifyGuard = 20000;

// Input the user got wrong; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Params {
  int m = 0, n = 0, k = 0;
};

void add_params(CLI::App* cmd, Params& p, bool with_m = true) {
  if (with_m) cmd->add_option("--m", p.m, "symmetric power")->required();
  cmd->add_option("--n", p.n, "ambient dimension")->required();
  cmd->add_option("--k", p.k, "exterior degree")->required();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Chain parse_chain(const std::string& text, int m, int n, int k) {
  Chain c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      c.content.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("chain entries must be integers: \"" + text + "\"");
    }
  }
  if (c.n() != n || !satisfies_chain_conditions(c, m, n, k))
    throw UsageError("not a chain of V(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) +
                     "): " + text);
  return c;
}

std::string pair_label(const MultiIndex& a, const MultiIndex& b) { return "q(" + a.label() + "," + b.label() + ")"; }

int cmd_dim(const Params& p, const std::string& method, std::uint64_t seed, std::ostream& out) {
  validate_parameters(p.m, p.n, p.k);
  const Integer formula = dim_v0_formula(p.m, p.n, p.k);
  if (method == "formula") {
    out << formula << "\n";
    return 0;
  }
  const std::size_t oracle = dim_v0_oracle(p.m, p.n, p.k, seed).dimension;
  if (method == "oracle") {
    out << oracle << "\n";
    return 0;
  }
  out << formula << ", " << oracle << "\n";
  return formula == oracle ? 0 : 1;
}

int cmd_basis(const Params& p, const std::string& chain, const std::string& format, std::ostream& out) {
  validate_parameters(p.m, p.n, p.k);
  Json list = Json::array();
  if (format == "tableaux") {
    const auto tableaux = chain.empty() ? standard_tableaux(p.m, p.n, p.k)
                                        : standard_basis_tableaux(parse_chain(chain, p.m, p.n, p.k), p.m, p.n, p.k);
    for (const auto& t : tableaux) list.push_back(to_json(t));
  } else {
    const auto tensors = chain.empty() ? v0_basis(p.m, p.n, p.k)
                                       : chain_v0_basis(parse_chain(chain, p.m, p.n, p.k), p.m, p.n, p.k);
    for (const auto& t : tensors) list.push_back(to_json(t));
  }
  out << emit(list);
  return 0;
}

int cmd_check_decomposable(const std::string& path, std::ostream& out) {
  const ExtVector v = ext_from_json(parse(read_file(path)));
  if (v.is_zero()) throw UsageError("the zero vector has no decomposability verdict");
  const auto report = is_decomposable(v);
  Json doc = {{"decomposable", report.decomposable}};
  if (report.witness) {
    Json w = to_json(*report.witness);
    w["value"] = to_json(report.witness_value);
    doc["witness"] = std::move(w);
  } else if (const auto p = factorize(v)) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < p->coordinates().rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < p->coordinates().cols(); ++j) row.push_back(to_json(p->coordinates()(i, j)));
      rows.push_back(std::move(row));
    }
    doc["factors"] = std::move(rows);
  }
  out << emit(doc);
  return report.decomposable ? 0 : 1;
}

int cmd_check_d0(const std::string& path, std::size_t keep, std::ostream& out) {
  const SymTensor t = sym_from_json(parse(read_file(path)));
  if (t.m() != 2) throw UsageError("check-d0 needs a symmetric square (m = 2)");
  if (t.is_zero()) throw UsageError("membership is decided for nonzero tensors");
  const S2Tensor u(t);
  const RelationReport report = check_d0(u, keep);
  Json doc = to_json(report);
  if (report.pass) {
    const Recovery r = recover(u);
    doc["recovered"] = {{"exact", r.exact}, {"scale", to_json(r.scale)}, {"vector", to_json(r.vector)}};
  }
  out << emit(doc);
  return report.pass ? 0 : 1;
}

int cmd_straighten(const Params& p, const std::string& tableau, std::uint64_t seed, std::ostream& out) {
  validate_parameters(p.m, p.n, p.k);
  const Json j = parse(tableau);
  if (!j.is_array() || static_cast<int>(j.size()) != p.m) throw UsageError("the tableau needs m columns");
  std::vector<std::vector<int>> columns;
  for (const auto& col : j) {
    if (!col.is_array() || static_cast<int>(col.size()) != p.k) throw UsageError("every column needs k entries");
    std::vector<int> entries;
    for (const auto& x : col) {
      if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > p.n)
        throw UsageError("tableau entries must be integers in 1..n");
      entries.push_back(x.get<int>());
    }
    columns.push_back(std::move(entries));
  }
  const SignedTableau s = RectTableau::from_columns(std::move(columns));
  if (s.sign == 0) throw UsageError("a column repeats an entry");

  StraightenTrace trace;
  TableauCombo result = straighten(s.tableau, seed, &trace);
  result *= s.sign;
  const Json doc = {{"certificate",
                     {{"iteration_cap", trace.iteration_cap},
                      {"points", trace.certificate_points},
                      {"rewrites", trace.rewrites},
                      {"seed", seed}}},
                    {"terms", to_json(result)}};
  out << emit(doc);
  return 0;
}

int cmd_verify(const Params& max, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (max.m < 1 || max.n < 1 || max.k < 1) throw UsageError("bounds must be positive");
  std::vector<Params> rows;
  for (int m = 1; m <= max.m; ++m)
    for (int n = 1; n <= max.n; ++n)
      for (int k = 1; k <= std::min(max.k, n); ++k) {
        if (dim_V(m, n, k) > kVerifyGuard) {
          err << "dim V(" << m << "," << n << "," << k << ") = " << dim_V(m, n, k) << " exceeds " << kVerifyGuard
              << "\n";
          return 2;
        }
        rows.push_back({m, n, k});
      }

  bool all = true;
  Json table = Json::array();
  for (const auto& [m, n, k] : rows) {
    const std::size_t formula = to_size(dim_v0_formula(m, n, k));
    const OracleResult oracle = dim_v0_oracle(m, n, k, seed);
    std::size_t chain_sum = 0;
    for (const auto& c : enumerate_chains(m, n, k)) chain_sum += chain_rank(c, m, n, k, seed);
    const std::size_t standard = standard_tableaux(m, n, k).size();
    const bool agree = formula == oracle.dimension && formula == chain_sum && formula == standard;
    all = all && agree;
    table.push_back({{"agree", agree},
                     {"chain_rank_sum", chain_sum},
                     {"formula", formula},
                     {"k", k},
                     {"m", m},
                     {"n", n},
                     {"oracle", oracle.dimension},
                     {"oracle_samples", oracle.samples},
                     {"standard_tableaux", standard}});
  }
  out << emit({{"all_agree", all}, {"rows", std::move(table)}, {"seed", seed}});
  return all ? 0 : 1;
}

int cmd_relations(int n, int k, const std::string& type, bool count_only, std::ostream& out) {
  validate_parameters(2, n, k);
  const auto counts = relation_counts(n, k);
  if (count_only) {
    if (type == "plucker") out << plucker_relations(n, k, true).size() << "\n";
    if (type == "linear") out << counts.linear << "\n";
    if (type == "rank3") out << counts.rank3 << "\n";
    if (type == "rank4") out << counts.rank4like << "\n";
    return 0;
  }

  Json list = Json::array();
  const auto pi = basis_indices(n, k);
  if (type == "plucker") {
    for (const auto& r : plucker_relations(n, k, true)) list.push_back(to_json(r));
  } else if (type == "linear") {
    for (const auto& [chain, rel] : linear_relations(n, k)) {
      Json j = to_json(rel);
      j["chain"] = chain.content;
      list.push_back(std::move(j));
    }
  } else if (type == "rank3") {
    for (std::size_t a = 0; a < pi.size(); ++a)
      for (std::size_t b = a + 1; b < pi.size(); ++b)
        list.push_back({{"indices", {to_json(pi[a]), to_json(pi[b])}},
                        {"relation", pair_label(pi[a], pi[b]) + "^2 - 4*" + pair_label(pi[a], pi[a]) + "*" +
                                         pair_label(pi[b], pi[b])}});
  } else {
    // q(a,b) q(a,g) is symmetric in b and g, so each unordered pair once.
    for (std::size_t a = 0; a < pi.size(); ++a)
      for (std::size_t b = 0; b < pi.size(); ++b)
        for (std::size_t g = b + 1; g < pi.size(); ++g) {
          if (a == b || a == g) continue;
          list.push_back({{"indices", {to_json(pi[a]), to_json(pi[b]), to_json(pi[g])}},
                          {"relation", pair_label(pi[a], pi[b]) + "*" + pair_label(pi[a], pi[g]) + " - 2*" +
                                           pair_label(pi[a], pi[a]) + "*" + pair_label(pi[b], pi[g])}});
        }
  }
  out << emit(list);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with decomposable vectors, symmetric powers and tableaux", "plucker"};
  app.require_subcommand(1);

  Params params;
  std::uint64_t seed = 0;
  std::string method = "formula", chain, format = "tableaux", file, tableau, type;
  bool count_only = false;
  std::size_t keep = kDefaultWitnessLimit;

  auto* dim = app.add_subcommand("dim", "dimension of V0(m,n,k)");
  add_params(dim, params);
  dim->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle", "both"}));
  dim->add_option("--seed", seed);

  auto* basis = app.add_subcommand("basis", "standard tableaux or basis tensors of V0");
  add_params(basis, params);
  basis->add_option("--chain", chain, "letter content, e.g. \"1,1,1,1\"");
  basis->add_option("--format", format)->check(CLI::IsMember({"tableaux", "tensors"}));

  auto* decomposable = app.add_subcommand("check-decomposable", "Plücker test for a k-vector");
  decomposable->add_option("--file", file)->required();

  auto* d0 = app.add_subcommand("check-d0", "membership of a symmetric square in the image of decomposables");
  d0->add_option("--file", file)->required();
  d0->add_option("--max-witnesses", keep, "violations listed in the report");

  auto* straight = app.add_subcommand("straighten", "express a tableau through standard ones");
  add_params(straight, params);
  straight->add_option("--tableau", tableau, "JSON list of columns, e.g. [[1,4],[2,3]]")->required();
  straight->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify", "formula, oracle, chain ranks and standard tableaux side by side");
  verify->add_option("--max-m", params.m)->required();
  verify->add_option("--max-n", params.n)->required();
  verify->add_option("--max-k", params.k)->required();
  verify->add_option("--seed", seed);

  auto* relations = app.add_subcommand("relations", "relation families for decomposables and their squares");
  add_params(relations, params, false);
  relations->add_option("--type", type)->required()->check(CLI::IsMember({"plucker", "linear", "rank3", "rank4"}));
  relations->add_flag("--count-only", count_only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dim) return cmd_dim(params, method, seed, out);
    if (*basis) return cmd_basis(params, chain, format, out);
    if (*decomposable) return cmd_check_decomposable(file, out);
    if (*d0) return cmd_check_d0(file, keep, out);
    if (*straight) return cmd_straighten(params, tableau, seed, out);
    if (*verify) return cmd_verify(params, seed, out, err);
    if (*relations) return cmd_relations(params.n, params.k, type, count_only, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace plucker::cli
