// Command-line surface: dimensions, straightening, relation kernels,
// symmetric-group decompositions, the relation catalog, and the
// verification suite with its text/JSON report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ginv/common.hpp"
#include "ginv/relations.hpp"
#include "ginv/report.hpp"
#include "ginv/ring.hpp"
#include "ginv/straighten.hpp"
#include "ginv/symrep.hpp"

namespace {

ginv::FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q" || s == "rationals") return ginv::FieldSpec::rationals();
  if (s.rfind("fp:", 0) == 0)
    return ginv::FieldSpec::prime(std::stoull(s.substr(3)));
  if (s.rfind("F_", 0) == 0)
    return ginv::FieldSpec::prime(std::stoull(s.substr(2)));
  throw std::invalid_argument("unrecognized field '" + s +
                              "' (use q or fp:<prime>)");
}

std::vector<int> resolve_weights(int n, int valence,
                                 const std::vector<int>& weights) {
  if (!weights.empty()) {
    if ((int)weights.size() != n)
      throw std::invalid_argument("--weights must list exactly n entries");
    return weights;
  }
  return std::vector<int>(n, valence);
}

int cmd_dims(int n, int valence, const std::vector<int>& weights,
             const std::string& field, const std::string& mode) {
  ginv::SpaceOptions opts;
  if (mode == "full") opts.mode = ginv::CoordMode::FullCoefficients;
  else if (mode == "sampled") opts.mode = ginv::CoordMode::SampledEvaluations;
  auto g = ginv::graded_dimension(n, resolve_weights(n, valence, weights),
                                  parse_field(field), opts);
  std::printf("dimension %zu  noncrossing %zu  (spanning %zu, %s)\n",
              g.dimension, g.noncrossing, g.spanning,
              g.mode == ginv::CoordMode::FullCoefficients
                  ? "full coefficients"
                  : "sampled evaluations");
  return 0;
}

int cmd_straighten(const std::string& literal, const std::string& file,
                   bool oracle, const std::string& field) {
  ginv::FieldSpec fs = parse_field(field);
  ginv::GraphPolynomial p(fs);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    p = ginv::parse_polynomial(buf.str(), fs);
  } else {
    ginv::Field f(fs);
    p.add_term(ginv::parse_literal(literal), f.one());
  }
  ginv::GraphPolynomial st = ginv::straighten(p);
  std::printf("%s\n", ginv::to_display(st).c_str());
  if (oracle) {
    ginv::GraphPolynomial solved = ginv::straighten_by_solve(p);
    bool agree = st == solved;
    std::printf("oracle: %s\n", agree ? "agree" : "MISMATCH");
    if (!agree) {
      std::printf("oracle result: %s\n", ginv::to_display(solved).c_str());
      return 1;
    }
  }
  return 0;
}

int cmd_kernel(int n, int degree, int valence, const std::vector<int>& weights,
               const std::string& field, const std::string& out) {
  auto kr = ginv::relation_kernel(n, resolve_weights(n, valence, weights),
                                  degree, parse_field(field));
  std::printf("kernel dimension %zu  (Sym^%d %zu, target %zu, rank %zu)\n",
              kr.relations.size(), degree, kr.sym_dim, kr.target_dim,
              kr.image_rank);
  if (!out.empty()) {
    std::ofstream o(out, std::ios::trunc);
    if (!o) throw std::runtime_error("cannot open " + out);
    for (std::size_t i = 0; i < kr.relations.size(); ++i) {
      o << "# relation " << i + 1 << " of " << kr.relations.size() << "\n"
        << ginv::relation_to_text(kr.relations[i]) << "\n";
    }
    std::printf("basis written to %s\n", out.c_str());
  }
  return 0;
}

int cmd_decompose(int n, const std::string& space) {
  using ginv::Partition;
  auto s1 = ginv::MultidegreeSpace::create(n, std::vector<int>(n, 1),
                                           ginv::FieldSpec::rationals());
  std::map<Partition, long long> dec;
  mpz_class total_dim;
  std::string label;
  if (space == "r1") {
    dec = ginv::decompose(ginv::module_character(s1));
    total_dim = (long)s1.dim();
    label = "R_1";
  } else if (space == "r2") {
    auto s2 = ginv::MultidegreeSpace::create(n, std::vector<int>(n, 2),
                                             ginv::FieldSpec::rationals());
    dec = ginv::decompose(ginv::module_character(s2));
    total_dim = (long)s2.dim();
    label = "R_2";
  } else if (space == "sym2" || space == "sym3") {
    int d = space == "sym3" ? 3 : 2;
    dec = ginv::decompose(
        ginv::sym_power_character(ginv::module_character(s1), d));
    mpz_class m = (long)s1.dim();
    if (d == 2)
      total_dim = m * (m + 1) / 2;
    else
      total_dim = m * (m + 1) * (m + 2) / 6;
    label = d == 2 ? "Sym^2 R_1" : "Sym^3 R_1";
  } else {
    throw std::invalid_argument("--space must be r1, r2, sym2 or sym3");
  }

  std::printf("decomposition of %s at n = %d (dim %s)\n", label.c_str(), n,
              total_dim.get_str().c_str());
  mpz_class sum = 0;
  for (const auto& [p, m] : dec) {
    std::string ps = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
      ps += (i ? "," : "") + std::to_string(p[i]);
    ps += ")";
    mpz_class hd = ginv::hook_dimension(p);
    std::printf("  %-14s %4lld  %8s\n", ps.c_str(), m, hd.get_str().c_str());
    sum += hd * mpz_class((long)m);
  }
  bool ok = sum == total_dim;
  std::printf("sum of mult x dim = %s (%s)\n", sum.get_str().c_str(),
              ok ? "consistent" : "MISMATCH");
  return ok ? 0 : 1;
}

int cmd_verify(const ginv::VerifyOptions& opts, const std::string& format,
               const std::string& out) {
  auto report = ginv::run_verification(opts);
  std::string rendered = format == "json" ? ginv::report_to_json(report)
                                          : ginv::report_to_text(report);
  if (out.empty()) {
    std::fputs(rendered.c_str(), stdout);
  } else {
    std::ofstream o(out, std::ios::trunc);
    if (!o) throw std::runtime_error("cannot open " + out);
    o << rendered;
    std::printf("report written to %s\n", out.c_str());
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact invariants of weighted points on the projective line\n"
      "graph literals: \"n=<N>; a-b c-d ...\" (one token per bracket edge)"};
  app.require_subcommand(1);

  // dims
  int d_n = 0, d_val = 1;
  std::vector<int> d_w;
  std::string d_field = "q", d_mode;
  auto* dims = app.add_subcommand("dims", "dimension of one graded piece");
  dims->add_option("--n", d_n, "number of points")->required();
  dims->add_option("--valence", d_val, "uniform weight (default 1)");
  dims->add_option("--weights", d_w, "full weight vector, comma separated")
      ->delimiter(',');
  dims->add_option("--field", d_field, "q or fp:<prime>");
  dims->add_option("--mode", d_mode, "full or sampled coordinates")
      ->check(CLI::IsMember({"", "full", "sampled"}));

  // straighten
  std::string s_literal, s_file, s_field = "q";
  bool s_oracle = false;
  auto* str = app.add_subcommand(
      "straighten", "rewrite into the noncrossing basis");
  str->add_option("literal", s_literal, "graph literal");
  str->add_option("--file", s_file, "polynomial file, one term per line");
  str->add_flag("--oracle", s_oracle,
                "cross-check against the linear-solve oracle");
  str->add_option("--field", s_field, "q or fp:<prime>");

  // kernel
  int k_n = 0, k_deg = 2, k_val = 1;
  std::vector<int> k_w;
  std::string k_field = "q", k_out;
  auto* ker = app.add_subcommand("kernel",
                                 "relation kernel Sym^d(R_w) -> R_dw");
  ker->add_option("--n", k_n, "number of points")->required();
  ker->add_option("--degree", k_deg, "relation degree d (default 2)");
  ker->add_option("--valence", k_val, "uniform weight (default 1)");
  ker->add_option("--weights", k_w, "full weight vector, comma separated")
      ->delimiter(',');
  ker->add_option("--field", k_field, "q or fp:<prime>");
  ker->add_option("--out", k_out, "write the kernel basis to this file");

  // decompose
  int dc_n = 0;
  std::string dc_space = "sym2";
  auto* dc = app.add_subcommand(
      "decompose", "symmetric-group decomposition of a graded piece");
  dc->add_option("--n", dc_n, "number of points")->required();
  dc->add_option("--space", dc_space, "r1, r2, sym2 or sym3")
      ->check(CLI::IsMember({"r1", "r2", "sym2", "sym3"}));

  // catalog
  std::string c_field = "q";
  auto* cat = app.add_subcommand("catalog", "print the named relations");
  cat->add_option("--field", c_field, "q or fp:<prime>");

  // verify
  std::string v_suite = "quick", v_field = "q", v_format = "text", v_out,
              v_cache;
  std::vector<std::string> v_claims;
  std::size_t v_jobs = 0;
  std::uint64_t v_seed = 0, v_budget = 20'000'000'000ULL;
  bool v_stretch = false;
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--suite", v_suite, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  ver->add_option("--claim", v_claims,
                  "run only these check ids (repeatable)");
  ver->add_option("--field", v_field,
                  "field override for the field-generic property checks");
  ver->add_option("--format", v_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--out", v_out, "write the report to this file");
  ver->add_option("--jobs", v_jobs, "worker count (default: hardware)");
  ver->add_option("--seed", v_seed, "seed for the randomized checks");
  ver->add_option("--cache-dir", v_cache, "cache passing results here")
      ->envname("GINV_CACHE_DIR");
  ver->add_flag("--stretch", v_stretch, "include the n = 12 stretch check");
  ver->add_option("--stretch-budget", v_budget,
                  "operation budget for the stretch check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dims) return cmd_dims(d_n, d_val, d_w, d_field, d_mode);
    if (*str) {
      if (s_literal.empty() && s_file.empty())
        throw std::invalid_argument("give a graph literal or --file");
      return cmd_straighten(s_literal, s_file, s_oracle, s_field);
    }
    if (*ker) return cmd_kernel(k_n, k_deg, k_val, k_w, k_field, k_out);
    if (*dc) return cmd_decompose(dc_n, dc_space);
    if (*cat) {
      std::fputs(
          ginv::catalog_dump(ginv::relation_catalog(parse_field(c_field)))
              .c_str(),
          stdout);
      return 0;
    }
    if (*ver) {
      ginv::VerifyOptions opts;
      opts.suite = v_suite == "full" ? ginv::SuiteKind::Full
                                     : ginv::SuiteKind::Quick;
      opts.field = parse_field(v_field);
      opts.claims = v_claims;
      opts.jobs = v_jobs;
      opts.seed = v_seed;
      opts.cache_dir = v_cache;
      opts.stretch = v_stretch;
      opts.stretch_ops_budget = v_budget;
      return cmd_verify(opts, v_format, v_out);
    }
  } catch (const ginv::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const ginv::CapExceeded& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
