#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/errors.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/io.hpp"
#include "cornerlab/ncgraphs.hpp"
#include "cornerlab/tensorprod.hpp"
#include "selftest.hpp"

namespace cornerlab::cli {

namespace {

using io::json;
using io::number;

struct Common {
  double tol = SolverConfig{}.tol;
  int max_iters = SolverConfig{}.max_iters;
  std::uint64_t seed = SolverConfig{}.seed;
  std::string format;
  std::string output;

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.tol = tol;
    cfg.max_iters = max_iters;
    cfg.seed = seed;
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* sub, Common& c, bool with_seed) {
  sub->add_option("--tol", c.tol, "Solver tolerance")->envname("CORNERLAB_TOL");
  sub->add_option("--max-iters", c.max_iters, "Iteration budget")->envname("CORNERLAB_MAX_ITERS");
  if (with_seed) sub->add_option("--seed", c.seed, "Random seed")->envname("CORNERLAB_SEED");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  const bool matrix = j.is_object() && j.contains("re");
  if (j.is_object() && !matrix) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string key_value_table(const json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream ss;
  for (const auto& [k, v] : rows) ss << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  return ss.str();
}

std::string columns(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> w;
  for (const auto& row : cells) {
    w.resize(std::max(w.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  }
  std::ostringstream ss;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      ss << row[i];
      if (i + 1 < row.size()) ss << std::string(w[i] - row[i].size() + 2, ' ');
    }
    ss << '\n';
  }
  return ss.str();
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write '" + c.output + "'");
  f << text;
}

void emit_json(const Common& c, const json& j, std::ostream& out) {
  emit(c, c.format == "table" ? key_value_table(j) : j.dump(2) + "\n", out);
}

GeneratedCorner load_corner(const std::string& path) { return io::corner_from_json(io::read_json_file(path)); }

Graph load_graph(const std::string& path) {
  const std::string text = io::read_text_file(path);
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return io::graph_from_json(io::read_json_file(path));
  return parse_dimacs(text);
}

State load_state(const std::string& path, const std::vector<double>& p) {
  if (!path.empty()) return State(io::matrix_from_json(io::read_json_file(path)));
  return State::diagonal(p);
}

json basic_params(const GeneratedCorner& c, const SolverConfig& cfg) {
  return {{"gamma", number(gamma(c))}, {"n_param", number(n_param(c, cfg))}, {"m_param", number(m_param(c, cfg))}};
}

// ---- verbs ----

struct ParamsArgs {
  std::string corner, membership;
  int ray_check = 0;
};

void cmd_params(const ParamsArgs& a, const Common& c, std::ostream& out) {
  const SolverConfig cfg = c.config();
  const GeneratedCorner corner = load_corner(a.corner);
  json j = io::param_report_to_json(param_report(corner, cfg));
  if (!a.membership.empty())
    j["membership"] = tri_name(membership(corner, io::matrix_from_json(io::read_json_file(a.membership)), cfg));
  if (a.ray_check > 0) {
    const RayCheckReport r = reflexivity_ray_check(corner, a.ray_check, cfg);
    j["ray_check"] = {{"trials", r.trials}, {"max_discrepancy", number(r.max_discrepancy)}, {"passed", r.passed}};
  }
  emit_json(c, j, out);
}

struct EntropyArgs {
  std::string corner, diag, state;
  std::vector<double> p;
  bool max_entropy = false;
  bool split = false;
};

void cmd_entropy(const EntropyArgs& a, const Common& c, std::ostream& out) {
  const SolverConfig cfg = c.config();
  json j;
  if (!a.corner.empty()) {
    const GeneratedCorner corner = load_corner(a.corner);
    if (a.max_entropy) {
      const MaxEntropyResult r = max_entropy_state(corner, cfg);
      j = {{"value", number(r.value)}, {"attained", number(r.attained)}, {"state", io::matrix_to_json(r.state.matrix())}};
    } else {
      j = io::entropy_result_to_json(corner_entropy(corner, load_state(a.state, a.p), cfg));
    }
  } else {
    const DiagonalCorner diag = io::diagonal_corner_from_json(io::read_json_file(a.diag));
    if (a.split) {
      const SplitReport r = entropy_split_check(diag, a.p, cfg);
      j = {{"shannon", number(r.shannon)},
           {"h_corner", number(r.h_corner)},
           {"h_anti_blocker", number(r.h_anti_blocker)},
           {"residual", number(r.residual)},
           {"passed", r.passed}};
    } else if (diag.kind() == DiagonalCorner::Kind::HPoly) {
      j = {{"value", number(polytope_entropy_diag(diag, a.p, cfg))}};
    } else {
      j = io::entropy_result_to_json(corner_entropy(diag.lift(), State::diagonal(a.p), cfg));
    }
  }
  emit_json(c, j, out);
}

struct GraphArgs {
  std::string graph;
  bool alpha = false, omega = false, chi = false, chi_f = false, clique_cover = false, korner = false;
  std::vector<double> p;
  int rates = 0;
};

void cmd_graph(const GraphArgs& a, const Common& c, std::ostream& out) {
  const SolverConfig cfg = c.config();
  const Graph g = load_graph(a.graph);
  const bool all = !(a.alpha || a.omega || a.chi || a.chi_f || a.clique_cover || a.korner || a.rates > 0);
  json j = json::object();
  j["n"] = g.n();
  if (all || a.alpha) j["alpha"] = alpha(g);
  if (all || a.omega) j["omega"] = omega(g);
  if (all || a.chi) j["chi"] = chi_exact(g);
  if (all || a.clique_cover) j["clique_cover"] = clique_cover_number(g);
  if (all || a.chi_f) {
    const ChiFResult r = chi_f_lp(g);
    j["chi_f"] = number(r.value);
    if (r.exact) j["chi_f_exact"] = std::to_string(r.exact->num) + "/" + std::to_string(r.exact->den);
  }
  if (a.korner) {
    if (a.p.empty()) fail(ErrorCode::InvalidArgument, "--korner needs --p");
    j["korner_entropy"] = number(korner_entropy(g, a.p, cfg));
  }
  if (a.rates > 0) {
    const RateSequences r = rate_sequences(g, a.rates);
    auto seq = [](const std::vector<double>& v) {
      json s = json::array();
      for (double x : v) s.push_back(number(x));
      return s;
    };
    j["rates"] = {{"alpha_seq", seq(r.alpha_seq)},  {"chi_seq", seq(r.chi_seq)},
                  {"chi_disj_seq", seq(r.chi_disj_seq)}, {"omega_floor", number(r.omega_floor)},
                  {"chi_f_floor", number(r.chi_f_floor)}, {"truncated", r.truncated},
                  {"note", r.note}};
  }
  emit_json(c, j, out);
}

struct NcArgs {
  std::string system, builtin, graph, state;
  std::vector<double> p;
  int budget = SearchConfig{}.budget;
  bool entropy = false;
  int capacity = 0;
};

void cmd_ncgraph(const NcArgs& a, const Common& c, std::ostream& out) {
  const SolverConfig cfg = c.config();
  SearchConfig search;
  search.budget = a.budget;
  search.seed = cfg.seed;
  const OperatorSystem s = !a.system.empty()  ? io::opsys_from_json(io::read_json_file(a.system))
                           : !a.builtin.empty() ? builtin_family(a.builtin)
                                                : OperatorSystem::from_graph(load_graph(a.graph));
  json j{{"dim", s.dim()}, {"params", io::nc_params_to_json(nc_params(s, cfg, search))}};
  if (a.entropy) {
    j["entropy"] = io::entropy_result_to_json(nc_graph_entropy(s, load_state(a.state, a.p), cfg, search));
  }
  if (a.capacity > 0) {
    const CapacityReport r = capacity_bounds(s, a.capacity, cfg);
    json lower = json::array();
    for (double x : r.lower) lower.push_back(number(x));
    j["capacity"] = {{"lower", lower},
                     {"Omega_f", number(r.Omega_f)},
                     {"Omega_tilde_f", number(r.Omega_tilde_f)},
                     {"truncated", r.truncated},
                     {"note", r.note}};
  }
  emit_json(c, j, out);
}

struct TensorArgs {
  std::string a, b, state, membership;
  int rays = 20;
};

void cmd_tensor(const TensorArgs& a, const Common& c, std::ostream& out) {
  const SolverConfig cfg = c.config();
  const GeneratedCorner ca = load_corner(a.a);
  const GeneratedCorner cb = load_corner(a.b);
  const GeneratedCorner prod = max_tensor(ca, cb);
  json pa = basic_params(ca, cfg), pb = basic_params(cb, cfg), pp = basic_params(prod, cfg);
  json rel = json::object();
  for (const char* k : {"gamma", "n_param", "m_param"}) {
    const ExtReal x = io::extreal_from_json(pa[k]), y = io::extreal_from_json(pb[k]);
    const ExtReal z = io::extreal_from_json(pp[k]);
    if (x.is_finite() && y.is_finite() && z.is_finite()) {
      const double xy = x.value() * y.value();
      rel[k] = number(std::abs(z.value() - xy) / (1.0 + xy));
    } else {
      rel[k] = nullptr;
    }
  }
  json j{{"a", pa}, {"b", pb}, {"max_product", pp}, {"relative_error", rel}};
  if (!a.state.empty()) {
    const ProductEntropyReport r = product_entropy_check(ca, cb, load_state(a.state, {}), cfg);
    j["entropy"] = {{"lhs", number(r.lhs)},
                    {"rhs", number(r.rhs)},
                    {"inequality_holds", r.inequality_holds},
                    {"equality_expected", r.equality_expected},
                    {"equality_holds", r.equality_holds}};
  }
  if (!a.membership.empty()) {
    const MinTensorVerdict v =
        min_tensor_membership(ca, cb, io::matrix_from_json(io::read_json_file(a.membership)), cfg, a.rays);
    j["min_membership"] = {{"verdict", tri_name(v.verdict)},
                           {"approximate", v.approximate},
                           {"max_pairing", number(v.max_pairing)}};
  }
  emit_json(c, j, out);
}

const std::vector<std::string> kSection9Families = {"ci:2", "ci:3", "ci:4", "t:2", "t:3",
                                                    "t:4",  "s:2",  "s:3",  "s:4"};

bool cmd_section9(const std::string& family, Common c, std::ostream& out) {
  const SolverConfig cfg = c.config();
  std::vector<Section9Row> rows;
  for (const auto& f : family.empty() ? kSection9Families : std::vector<std::string>{family}) {
    auto r = section9_rows(f, cfg);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  if (c.format == "json") {
    json a = json::array();
    for (const auto& r : rows)
      a.push_back({{"system", r.system},
                   {"parameter", r.parameter},
                   {"computed", number(r.computed)},
                   {"paper", number(r.reference)},
                   {"delta", number(r.delta)},
                   {"pass", r.pass}});
    emit(c, json{{"rows", a}, {"all_pass", ok}}.dump(2) + "\n", out);
  } else {
    std::vector<std::vector<std::string>> cells{{"system", "parameter", "computed", "paper", "|delta|", "pass"}};
    for (const auto& r : rows)
      cells.push_back({r.system, r.parameter, r.computed.to_string(), r.reference.to_string(),
                       ExtReal(r.delta).to_string(), r.pass ? "pass" : "FAIL"});
    emit(c, columns(cells), out);
  }
  return ok;
}

bool cmd_selftest(const Common& c, std::ostream& out) {
  const auto checks = run_selftest(c.config());
  int failed = 0;
  for (const auto& k : checks) failed += k.passed ? 0 : 1;
  if (c.format == "json") {
    json a = json::array();
    for (const auto& k : checks) a.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
    emit(c, json{{"seed", 42}, {"checks", a}, {"failed", failed}}.dump(2) + "\n", out);
  } else {
    std::vector<std::vector<std::string>> cells;
    for (const auto& k : checks) cells.push_back({k.passed ? "pass" : "FAIL", k.name, k.detail});
    emit(c, columns(cells) + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
                " checks passed\n",
         out);
  }
  return failed == 0;
}

void error_json(std::ostream& err, const char* code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex corners, operator systems and their entropies", "cornerlab"};
  app.require_subcommand(1);
  Common common;

  ParamsArgs pa;
  auto* params = app.add_subcommand("params", "Parameters gamma, N, M of a generated corner");
  params->add_option("--corner", pa.corner, "Corner JSON")->required()->check(CLI::ExistingFile);
  params->add_option("--membership", pa.membership, "Matrix JSON to test for membership")->check(CLI::ExistingFile);
  params->add_option("--ray-check", pa.ray_check, "Random rays for the reflexivity check")->check(CLI::NonNegativeNumber);
  add_common(params, common, true);

  EntropyArgs ea;
  auto* entropy = app.add_subcommand("entropy", "Entropy of a state over a corner");
  auto* e_corner = entropy->add_option("--corner", ea.corner, "Corner JSON")->check(CLI::ExistingFile);
  auto* e_diag = entropy->add_option("--diag", ea.diag, "Diagonal corner JSON")->check(CLI::ExistingFile);
  e_corner->excludes(e_diag);
  auto* e_state = entropy->add_option("--state", ea.state, "State (matrix JSON)")->check(CLI::ExistingFile);
  auto* e_p = entropy->add_option("--p", ea.p, "Diagonal state, comma separated")->delimiter(',');
  e_state->excludes(e_p);
  auto* e_max = entropy->add_flag("--max-entropy", ea.max_entropy, "Maximum entropy over states")->needs(e_corner);
  e_max->excludes(e_state)->excludes(e_p);
  entropy->add_flag("--split", ea.split, "Splitting check H(p) = H_A(p) + H_A-flat(p)")->needs(e_diag)->needs(e_p);
  add_common(entropy, common, true);

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "Classical graph parameters");
  graph->add_option("--graph", ga.graph, "Graph JSON or DIMACS edge list")->required()->check(CLI::ExistingFile);
  graph->add_flag("--alpha", ga.alpha, "Independence number");
  graph->add_flag("--omega", ga.omega, "Clique number");
  graph->add_flag("--chi", ga.chi, "Chromatic number");
  graph->add_flag("--chi-f", ga.chi_f, "Fractional chromatic number");
  graph->add_flag("--clique-cover", ga.clique_cover, "Clique cover number");
  auto* g_p = graph->add_option("--p", ga.p, "Distribution, comma separated")->delimiter(',');
  graph->add_flag("--korner", ga.korner, "Korner graph entropy at --p")->needs(g_p);
  graph->add_option("--rates", ga.rates, "Power sequences up to this exponent")->check(CLI::Range(0, 3));
  add_common(graph, common, true);

  NcArgs na;
  auto* ncgraph = app.add_subcommand("ncgraph", "Operator system parameters");
  auto* n_sys = ncgraph->add_option("--system", na.system, "Operator system JSON")->check(CLI::ExistingFile);
  auto* n_builtin = ncgraph->add_option("--builtin", na.builtin, "ci:d, t:d or s:d");
  auto* n_graph = ncgraph->add_option("--graph", na.graph, "Graph JSON or DIMACS")->check(CLI::ExistingFile);
  n_sys->excludes(n_builtin)->excludes(n_graph);
  n_builtin->excludes(n_graph);
  ncgraph->add_option("--budget", na.budget, "Search restarts per rank")->check(CLI::PositiveNumber);
  auto* n_state = ncgraph->add_option("--state", na.state, "State (matrix JSON)")->check(CLI::ExistingFile);
  auto* n_p = ncgraph->add_option("--p", na.p, "Diagonal state, comma separated")->delimiter(',');
  n_state->excludes(n_p);
  ncgraph->add_flag("--entropy", na.entropy, "Entropy of the state over ap(S)");
  ncgraph->add_option("--capacity", na.capacity, "Capacity bounds up to this power")->check(CLI::Range(0, 2));
  add_common(ncgraph, common, true);

  TensorArgs ta;
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor products of two corners");
  tensor_cmd->add_option("--a", ta.a, "First corner JSON")->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("--b", ta.b, "Second corner JSON")->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("--state", ta.state, "State on the product (matrix JSON)")->check(CLI::ExistingFile);
  tensor_cmd->add_option("--membership", ta.membership, "Matrix JSON for the min product test")->check(CLI::ExistingFile);
  tensor_cmd->add_option("--rays", ta.rays, "Random rays per factor")->check(CLI::NonNegativeNumber);
  add_common(tensor_cmd, common, true);

  std::string family;
  auto* section9 = app.add_subcommand("reproduce-section9", "Golden table for the builtin families");
  section9->add_option("--family", family, "ci:d, t:d or s:d (default: all, d = 2..4)");
  add_common(section9, common, false);

  auto* selftest = app.add_subcommand("selftest", "Property suites with seed 42");
  add_common(selftest, common, false);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (params->parsed()) {
      cmd_params(pa, common, out);
    } else if (entropy->parsed()) {
      if (ea.corner.empty() && ea.diag.empty()) {
        err << "entropy: one of --corner or --diag is required\n";
        return 2;
      }
      if (!ea.diag.empty() && ea.p.empty()) {
        err << "entropy: --diag needs --p\n";
        return 2;
      }
      if (!ea.corner.empty() && !ea.max_entropy && ea.state.empty() && ea.p.empty()) {
        err << "entropy: --corner needs --state, --p or --max-entropy\n";
        return 2;
      }
      cmd_entropy(ea, common, out);
    } else if (graph->parsed()) {
      cmd_graph(ga, common, out);
    } else if (ncgraph->parsed()) {
      if (na.system.empty() && na.builtin.empty() && na.graph.empty()) {
        err << "ncgraph: one of --system, --builtin or --graph is required\n";
        return 2;
      }
      if (na.entropy && na.state.empty() && na.p.empty()) {
        err << "ncgraph: --entropy needs --state or --p\n";
        return 2;
      }
      cmd_ncgraph(na, common, out);
    } else if (tensor_cmd->parsed()) {
      cmd_tensor(ta, common, out);
    } else if (section9->parsed()) {
      if (common.format.empty()) common.format = "table";
      if (!cmd_section9(family, common, out)) {
        error_json(err, "AssertionFailed", "reproduce-section9: some rows differ from the reference values");
        return 1;
      }
    } else if (selftest->parsed()) {
      if (common.format.empty()) common.format = "table";
      if (!cmd_selftest(common, out)) {
        error_json(err, "AssertionFailed", "selftest: some checks failed");
        return 1;
      }
    }
  } catch (const Error& e) {
    error_json(err, error_name(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    error_json(err, "InternalError", e.what());
    return 1;
  }
  return 0;
}

}  // namespace cornerlab::cli
