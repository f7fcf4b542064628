#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fraclat/construction.hpp"
#include "fraclat/exact.hpp"
#include "fraclat/graphs.hpp"
#include "fraclat/lattice.hpp"
#include "fraclat/limits.hpp"
#include "fraclat/mis.hpp"

namespace {

using nlohmann::json;
using namespace fraclat;

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
  int threads = 1;
  uint64_t budget_nodes = 100'000'000;
  double budget_secs = 600.0;
  std::string out_path;
  std::string format = "json";
  unsigned seed = 20240901;
  int p0_cap = kDefaultP0Cap;
  long long enum_cap = kDefaultEnumCap;
};

json config_header(const GlobalOpts& g, const std::string& subcommand) {
  return json{{"tool", "fraclat"},
              {"version", kVersion},
              {"subcommand", subcommand},
              {"threads", g.threads},
              {"budget_nodes", g.budget_nodes},
              {"budget_secs", g.budget_secs},
              {"seed", g.seed},
              {"p0_cap", g.p0_cap},
              {"enum_cap", g.enum_cap}};
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(g.out_path);
    out << text << "\n";
  }
}

void emit_json(const GlobalOpts& g, json j) {
  emit(g, j.dump(2));
}

std::vector<long long> parse_vector(const std::string& text) {
  std::vector<long long> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoll(tok));
  if (v.empty()) throw std::invalid_argument("empty vector '" + text + "'");
  return v;
}

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash != std::string::npos) {
    return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  }
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Int den = ipow(Int(10), text.size() - dot - 1);
    return make_rat(Int(digits), den);
  }
  return Rat(Int(text));
}

int cmd_construct(const GlobalOpts& g, const ConstructionParams& params) {
  DerivedTriple t = derive(params);
  auto [a, b] = build_ab(params);
  json j;
  j["config"] = config_header(g, "construct");
  j["a"] = t.a.get_str();
  j["p"] = t.p.get_str();
  j["q"] = t.q.get_str();
  j["matrix_a"] = format_matrix(a);
  j["matrix_b"] = format_matrix(b);
  j["degenerate"] = t.p < 2 * t.q;  // p/q < 2: no nontrivial fraction graph
  BoundCertificate cert = certify(a, b, t.p, t.q, g.enum_cap);
  j["subgroup_size"] = cert.subgroup.elements.size();
  j["certificate"] = cert.to_json();
  j["claim"] = "alpha_grp(E_{" + t.p.get_str() + "/" + t.q.get_str() +
               "}^boxtimes " + std::to_string(params.n) +
               ") >= " + cert.det_b.get_str();
  emit_json(g, j);
  return cert.valid ? 0 : 1;
}

int cmd_verify(const GlobalOpts& g, const ConstructionParams& params) {
  VerifyOptions opts;
  opts.p0_cap = g.p0_cap;
  opts.direct_scan_cap = g.enum_cap;
  VerificationReport rep = verify_family(params, opts);
  json j = rep.to_json();
  j["config"] = config_header(g, "verify");
  emit_json(g, j);
  return rep.valid() ? 0 : 1;
}

int cmd_construct_xy(const GlobalOpts& g, const ConstructionParams& params) {
  auto [x, y] = build_xy(params);
  json j;
  j["config"] = config_header(g, "construct-xy");
  j["matrix_x"] = format_matrix(x);
  j["matrix_y"] = format_matrix(y);
  emit_json(g, j);
  return 0;
}

int cmd_quotient(const GlobalOpts& g, long long p, long long q, int power,
                 const std::string& gens_text, bool emit_graph) {
  FractionGraphPower base{p, q, power};
  CosetQuotient quot = build_quotient(base, {parse_vector(gens_text)});
  MisBudget budget{g.budget_nodes, g.budget_secs};
  MisResult mis = solve(quot.quotient, budget);
  LiftResult lift = lift_bound(quot, mis.witness);

  json j;
  j["config"] = config_header(g, "quotient");
  j["graph"] = "E_{" + std::to_string(p) + "/" + std::to_string(q) +
               "}^boxtimes " + std::to_string(power);
  j["subgroup_size"] = quot.subgroup.elements.size();
  j["quotient_vertices"] = quot.quotient.order();
  j["alpha_quotient"] = mis.size;
  j["mis"] = mis.to_json();
  j["bound"] = lift.bound.get_str();
  j["lifted_set_verified"] = true;  // lift_bound throws otherwise
  if (emit_graph) j["quotient_dimacs"] = quot.quotient.to_dimacs();
  emit_json(g, j);
  return mis.optimal ? 0 : 1;
}

int cmd_mis(const GlobalOpts& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  ExplicitGraph graph = ExplicitGraph::from_dimacs(in);
  MisBudget budget{g.budget_nodes, g.budget_secs};
  MisResult res = solve(graph, budget);
  json j = res.to_json();
  j["config"] = config_header(g, "mis");
  emit_json(g, j);
  return res.optimal ? 0 : 1;
}

int cmd_bohman(const GlobalOpts& g, int d, long ell) {
  PerturbationReport rep = verify_perturbation(d, ell, g.p0_cap);
  json j = rep.to_json();
  j["config"] = config_header(g, "bohman");
  emit_json(g, j);
  return rep.all_pass() ? 0 : 1;
}

int cmd_scan(const GlobalOpts& g, const ScanLimits& limits,
             const std::string& window) {
  auto colon = window.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("window must be lo:hi");
  Rat lo = parse_rational(window.substr(0, colon));
  Rat hi = parse_rational(window.substr(colon + 1));
  auto points = scan(limits, lo, hi);
  emit(g, scan_csv(points));
  return 0;
}

int cmd_limit(const GlobalOpts& g, const std::vector<std::string>& xs_text,
              const std::string& eps_text) {
  std::vector<Rat> xs;
  for (const auto& t : xs_text) xs.push_back(parse_rational(t));
  auto rows = convergence_table(xs, parse_rational(eps_text));
  emit(g, convergence_csv(rows));
  return 0;
}

int cmd_verify_matrix(const GlobalOpts& g, const std::string& file_a,
                      const std::string& file_b, const std::string& p_text,
                      const std::string& q_text) {
  ExactMatrix a = parse_matrix_file(file_a);
  ExactMatrix b = parse_matrix_file(file_b);
  BoundCertificate cert = certify(a, b, Int(p_text), Int(q_text), g.enum_cap);
  json j = cert.to_json();
  j["config"] = config_header(g, "verify-matrix");
  emit_json(g, j);
  return cert.valid ? 0 : 1;
}

int cmd_alpha_grp(const GlobalOpts& g, long long p, long long q, int n) {
  long long result = alpha_grp_exhaustive(p, q, n, g.enum_cap);
  json j;
  j["config"] = config_header(g, "alpha-grp");
  j["p"] = p;
  j["q"] = q;
  j["n"] = n;
  j["alpha_grp"] = result;
  emit_json(g, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice certificates for independent sets in strong "
               "powers of fraction graphs"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads");
  app.add_option("--budget-nodes", g.budget_nodes, "MIS branch node budget");
  app.add_option("--budget-secs", g.budget_secs, "MIS time budget (seconds)");
  app.add_option("--out", g.out_path, "output file (default stdout)");
  app.add_option("--format", g.format, "output format (json|csv)");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");
  app.add_option("--p0-cap", g.p0_cap, "max order for P0 minor enumeration");
  app.add_option("--enum-cap", g.enum_cap, "subgroup enumeration cap");

  ConstructionParams params;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("n", params.n, "power")->required();
    sub->add_option("k", params.k)->required();
    sub->add_option("b", params.b)->required();
    sub->add_option("r", params.r)->required();
    sub->add_option("s", params.s)->required();
  };

  auto* construct = app.add_subcommand(
      "construct", "derive (a,p,q), build A/B and the lattice certificate");
  add_params(construct);
  auto* verify = app.add_subcommand(
      "verify", "run the full verification report for a parameter tuple");
  add_params(verify);
  auto* construct_xy =
      app.add_subcommand("construct-xy", "emit the X and Y matrices");
  add_params(construct_xy);

  long long qp = 0, qq = 0;
  int qpower = 1;
  std::string gens;
  bool emit_graph = false;
  auto* quotient = app.add_subcommand(
      "quotient", "quotient-graph lower bound via MIS in G/H");
  quotient->add_option("p", qp)->required();
  quotient->add_option("q", qq)->required();
  quotient->add_option("power", qpower)->required();
  quotient->add_option("generators", gens, "comma-separated, e.g. 1,2,3")
      ->required();
  quotient->add_flag("--emit-graph", emit_graph,
                     "include the quotient DIMACS edge list");

  std::string mis_path;
  auto* mis = app.add_subcommand("mis", "exact MIS on a DIMACS edge list");
  mis->add_option("file", mis_path)->required();

  int bd = 3;
  long bell = 1;
  auto* bohman =
      app.add_subcommand("bohman", "verify the perturbed Bohman pair (d,ell)");
  bohman->add_option("d", bd)->required();
  bohman->add_option("ell", bell)->required();

  ScanLimits limits;
  std::string window = "2:7";
  auto* scan_cmd =
      app.add_subcommand("scan", "sweep parameter tuples, emit CSV points");
  scan_cmd->add_option("--window", window, "ratio window lo:hi");
  scan_cmd->add_option("--n-max", limits.n_max);
  scan_cmd->add_option("--k-max", limits.k_max);
  scan_cmd->add_option("--b-max", limits.b_max);
  scan_cmd->add_option("--s-max", limits.s_max);

  std::vector<std::string> limit_xs;
  std::string limit_eps = "1/2";
  auto* limit_cmd = app.add_subcommand(
      "limit", "convergence table for the capacity gap at given x values");
  limit_cmd->add_option("x", limit_xs, "target ratios")->required();
  limit_cmd->add_option("--epsilon", limit_eps);

  std::string file_a, file_b, vp, vq;
  auto* vm = app.add_subcommand(
      "verify-matrix", "certify a user-provided matrix pair A, B");
  vm->add_option("fileA", file_a)->required();
  vm->add_option("fileB", file_b)->required();
  vm->add_option("p", vp)->required();
  vm->add_option("q", vq)->required();

  long long ap = 0, aq = 0;
  int an = 1;
  auto* ag = app.add_subcommand(
      "alpha-grp", "exhaustive subgroup independence number");
  ag->add_option("p", ap)->required();
  ag->add_option("q", aq)->required();
  ag->add_option("n", an)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(g, params);
    if (verify->parsed()) return cmd_verify(g, params);
    if (construct_xy->parsed()) return cmd_construct_xy(g, params);
    if (quotient->parsed())
      return cmd_quotient(g, qp, qq, qpower, gens, emit_graph);
    if (mis->parsed()) return cmd_mis(g, mis_path);
    if (bohman->parsed()) return cmd_bohman(g, bd, bell);
    if (scan_cmd->parsed()) return cmd_scan(g, limits, window);
    if (limit_cmd->parsed()) return cmd_limit(g, limit_xs, limit_eps);
    if (vm->parsed()) return cmd_verify_matrix(g, file_a, file_b, vp, vq);
    if (ag->parsed()) return cmd_alpha_grp(g, ap, aq, an);
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 0;
}
