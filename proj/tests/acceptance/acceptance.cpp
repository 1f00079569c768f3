// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/errors.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/ncgraphs.hpp"
#include "cornerlab/random.hpp"
#include "cornerlab/tensorprod.hpp"
#include "oracles.hpp"

using namespace cornerlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string g9(double x) { return format_g9(x); }

const std::vector<std::string> kFamilies{"ci:2", "ci:3", "ci:4", "t:2", "t:3", "t:4", "s:2", "s:3", "s:4"};

bool is_inf(const NcValue& v) { return v.value.is_pos_inf(); }
bool equals(const NcValue& v, double x, double tol) { return v.value.is_finite() && std::abs(v.value.value() - x) <= tol; }

// 1. Golden values for the builtin families.
Outcome golden_table() {
  Outcome o;
  const SolverConfig cfg;
  for (const auto& f : kFamilies)
    for (const auto& row : section9_rows(f, cfg))
      o.require(row.pass, "row " + row.system + " " + row.parameter + " = " + row.computed.to_string());
  for (int d = 2; d <= 4; ++d) {
    const NcParams ci = nc_params(builtin_family("ci:" + std::to_string(d)), cfg);
    const std::string tag = "ci:" + std::to_string(d);
    o.require(equals(ci.alpha, d, 0), tag + " alpha");
    o.require(equals(ci.omega, 1, 0), tag + " omega");
    o.require(equals(ci.chi_f, 1, 1e-4), tag + " chi_f");
    o.require(equals(ci.Omega_f, d, 1e-4), tag + " Omega_f");
    o.require(equals(ci.omega_tilde, 0, 0), tag + " omega_tilde");
    o.require(is_inf(ci.Omega_tilde_f), tag + " Omega_tilde_f");
    const NcParams s = nc_params(builtin_family("s:" + std::to_string(d)), cfg);
    o.require(equals(s.Omega_f, 1, 1e-4), "s:" + std::to_string(d) + " Omega_f");
    o.require(equals(s.Omega, 1, 0), "s:" + std::to_string(d) + " Omega");
  }
  o.require(equals(nc_params(builtin_family("t:2"), cfg).Omega_tilde_f, 2, 1e-4), "t:2 Omega_tilde_f");
  for (int d = 3; d <= 4; ++d) {
    const NcParams t = nc_params(builtin_family("t:" + std::to_string(d)), cfg);
    o.require(equals(t.omega_tilde, 1, 0), "t:" + std::to_string(d) + " omega_tilde");
    o.require(is_inf(t.Omega_tilde_f), "t:" + std::to_string(d) + " Omega_tilde_f");
  }
  o.require(equals(nc_params(builtin_family("s:2"), cfg).Omega_tilde_f, 2, 1e-4), "s:2 Omega_tilde_f");
  if (o.pass) o.detail = "9 families, all rows match";
  return o;
}

// 2. M N = 1 and M = gamma of the anti-blocker.
Outcome duality() {
  Outcome o;
  Rng rng(1001);
  const SolverConfig cfg;
  double worst_mn = 0, worst_ab = 0;
  for (int t = 0; t < 50; ++t) {
    const int d = rng.uniform_int(1, 5), m = rng.uniform_int(1, 6);
    const ParamReport r = param_report(random_standard_corner(d, m, rng), cfg);
    const double mn = std::abs(r.m_param.value() * r.n_param - 1);
    const double ab = std::abs(r.m_param.value() - r.gamma_ab.value());
    worst_mn = std::max(worst_mn, mn);
    worst_ab = std::max(worst_ab, ab);
    o.require(mn <= 1e-4, "instance " + std::to_string(t) + ": |MN - 1| = " + g9(mn));
    o.require(ab <= 1e-4, "instance " + std::to_string(t) + ": |M - gamma_ab| = " + g9(ab));
  }
  if (o.pass) o.detail = "50 corners, max |MN-1| = " + g9(worst_mn) + ", max |M-gamma_ab| = " + g9(worst_ab);
  return o;
}

// 3. Reflexivity along random rays.
Outcome reflexivity() {
  Outcome o;
  Rng rng(1002);
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    SolverConfig cfg;
    cfg.seed = 2000 + t;
    const GeneratedCorner c = random_standard_corner(rng.uniform_int(2, 4), rng.uniform_int(1, 5), rng);
    const RayCheckReport r = reflexivity_ray_check(c, 50, cfg);
    worst = std::max(worst, r.max_discrepancy);
    o.require(r.passed && r.trials == 50, "corner " + std::to_string(t) + ": discrepancy " + g9(r.max_discrepancy));
  }
  if (o.pass) o.detail = "20 corners x 50 rays, max discrepancy " + g9(worst);
  return o;
}

// 4. The maximum entropy is -log N and is attained at the certificate state.
Outcome max_entropy() {
  Outcome o;
  Rng rng(1003);
  const SolverConfig cfg;
  double worst_excess = -1e300;
  for (int t = 0; t < 20; ++t) {
    const int d = rng.uniform_int(2, 4);
    const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 5), rng);
    const double target = -std::log(n_param(c, cfg));
    const MaxEntropyResult m = max_entropy_state(c, cfg);
    const double at = m.attained.value();
    o.require(std::abs(m.value - target) <= 1e-6, "corner " + std::to_string(t) + ": value " + g9(m.value));
    o.require(at >= target - 1e-2 && at <= target + 1e-3,
              "corner " + std::to_string(t) + ": attained " + g9(at) + " vs -log N " + g9(target));
    for (int s = 0; s < 100; ++s) {
      const ExtReal h = corner_entropy(c, random_state(d, rng), cfg).value;
      const double excess = h.as_double() - target;
      worst_excess = std::max(worst_excess, excess);
      o.require(excess <= 1e-3, "corner " + std::to_string(t) + ": random state exceeds -log N by " + g9(excess));
    }
  }
  if (o.pass) o.detail = "20 corners x 100 states, max excess over -log N " + g9(worst_excess);
  return o;
}

// 5. H(p) = H_A(p) + H_{A flat}(p) for diagonal corners.
Outcome splitting() {
  Outcome o;
  Rng rng(1004);
  const SolverConfig cfg;
  std::vector<std::pair<std::string, DiagonalCorner>> corners{
      {"vp(C5)", vp_corner(Graph::cycle(5))},
      {"vp(C4)", vp_corner(Graph::cycle(4))},
      {"vp(K3)", vp_corner(Graph::complete(3))},
      {"cube", DiagonalCorner::vgen(3, {{1, 1, 1}})},
      {"simplex", DiagonalCorner::vgen(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}};
  double worst = 0;
  for (const auto& [name, c] : corners)
    for (int t = 0; t < 20; ++t) {
      const SplitReport r = entropy_split_check(c, random_distribution(c.dim(), rng), cfg);
      worst = std::max(worst, r.residual);
      o.require(r.residual <= 1e-3, name + ": residual " + g9(r.residual));
    }
  if (o.pass) o.detail = "5 corners x 20 distributions, max residual " + g9(worst);
  return o;
}

const std::vector<std::pair<std::string, Graph>>& bridge_graphs() {
  static const std::vector<std::pair<std::string, Graph>> g{{"C5", Graph::cycle(5)},
                                                            {"C4", Graph::cycle(4)},
                                                            {"K3", Graph::complete(3)},
                                                            {"Petersen", Graph::petersen()}};
  return g;
}

// 6. Graph systems reproduce the classical entropy and chi_f.
Outcome classical_bridge() {
  Outcome o;
  Rng rng(1006);
  const SolverConfig cfg;
  double worst_h = 0, worst_chi = 0;
  for (const auto& [name, g] : bridge_graphs()) {
    const OperatorSystem s = opsys_from_graph(g);
    for (int t = 0; t < 5; ++t) {
      const auto p = random_distribution(g.n(), rng);
      const double diff = std::abs(nc_graph_entropy(s, State::diagonal(p), cfg).value.value() - korner_entropy(g, p, cfg));
      worst_h = std::max(worst_h, diff);
      o.require(diff <= 1e-3, name + ": entropy differs by " + g9(diff));
    }
    const double chi_f = nc_params(s, cfg).chi_f.value.value();
    const double diff = std::abs(chi_f - chi_f_lp(g).value);
    worst_chi = std::max(worst_chi, diff);
    o.require(diff <= 1e-4, name + ": chi_f differs by " + g9(diff));
  }
  const ChiFResult c5 = chi_f_lp(Graph::cycle(5));
  o.require(c5.exact && c5.exact->num == 5 && c5.exact->den == 2 && c5.value == 2.5, "chi_f(C5) is not exactly 5/2");
  // Independent grid search over the maximal independent sets.
  const double grid = oracle::fractional_cover_grid(oracle::maximal_independent_masks(Graph::cycle(5)), 5, 2);
  o.require(std::abs(grid - 2.5) <= 1e-12, "grid oracle for chi_f(C5) gives " + g9(grid));
  if (o.pass) o.detail = "4 graphs, max entropy gap " + g9(worst_h) + ", max chi_f gap " + g9(worst_chi) + ", chi_f(C5) = 5/2";
  return o;
}

// 7. omega_f = chi_f on every system of criteria 1 and 6.
Outcome omega_f_equals_chi_f() {
  Outcome o;
  const SolverConfig cfg;
  std::vector<std::pair<std::string, OperatorSystem>> systems;
  for (const auto& f : kFamilies) systems.emplace_back(f, builtin_family(f));
  for (const auto& [name, g] : bridge_graphs()) systems.emplace_back("S_" + name, opsys_from_graph(g));
  double worst = 0;
  for (const auto& [name, s] : systems) {
    try {
      const NcParams p = nc_params(s, cfg);
      const double scale = std::max(1.0, p.chi_f.value.as_double());
      worst = std::max(worst, p.chi_f_omega_f_residual);
      o.require(p.chi_f_omega_f_residual <= 1e-4 * scale, name + ": residual " + g9(p.chi_f_omega_f_residual));
    } catch (const Error& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(systems.size()) + " systems, max residual " + g9(worst);
  return o;
}

double rel(double x, double y) { return std::abs(x - y) / std::max(1e-12, std::abs(y)); }

// 8. gamma, N, M multiply over the maximal tensor product; product entropy inequality.
Outcome tensor_multiplicativity() {
  Outcome o;
  Rng rng(1008);
  const SolverConfig cfg;
  double worst = 0, worst_excess = -1e300;
  for (int t = 0; t < 20; ++t) {
    const int d1 = rng.uniform_int(1, 3), d2 = rng.uniform_int(1, 3);
    const GeneratedCorner a = random_standard_corner(d1, rng.uniform_int(1, 3), rng);
    const GeneratedCorner b = random_standard_corner(d2, rng.uniform_int(1, 3), rng);
    const GeneratedCorner ab = max_tensor(a, b);
    const double eg = rel(gamma(ab), gamma(a) * gamma(b));
    const double en = rel(n_param(ab, cfg), n_param(a, cfg) * n_param(b, cfg));
    const double em = rel(m_param(ab, cfg).value(), m_param(a, cfg).value() * m_param(b, cfg).value());
    worst = std::max({worst, eg, en, em});
    o.require(eg <= 1e-3 && en <= 1e-3 && em <= 1e-3,
              "pair " + std::to_string(t) + ": relative errors " + g9(eg) + " " + g9(en) + " " + g9(em));
    const ProductEntropyReport r = product_entropy_check(a, b, random_state(d1 * d2, rng), cfg);
    if (r.rhs.is_finite()) worst_excess = std::max(worst_excess, r.lhs.as_double() - r.rhs.value());
    o.require(r.inequality_holds, "pair " + std::to_string(t) + ": lhs " + r.lhs.to_string() + " > rhs " + r.rhs.to_string());
  }
  if (o.pass) o.detail = "20 pairs, max relative error " + g9(worst) + ", max lhs - rhs " + g9(worst_excess);
  return o;
}

// 9. Rate sequences of C5 and the capacity bound on the builtins.
Outcome capacity_sequences() {
  Outcome o;
  const Graph c5 = Graph::cycle(5);
  const RateSequences r = rate_sequences(c5, 2);
  o.require(r.alpha_exact.size() >= 2 && r.alpha_exact[1] == 5 && r.alpha_seq[1] == std::sqrt(5.0),
            "alpha(C5^2)^(1/2) != sqrt 5");
  o.require(oracle::alpha(strong_product(c5, c5)) == 5, "oracle alpha(C5^2) != 5");
  const double floor = chi_f_lp(c5).value;
  o.require(r.chi_f_floor == floor, "chi_f floor " + g9(r.chi_f_floor));
  for (std::size_t k = 0; k < r.chi_disj_seq.size(); ++k)
    o.require(r.chi_disj_seq[k] >= floor - 1e-12, "disjunctive chi at k=" + std::to_string(k + 1) + " below chi_f");
  // Strong powers only keep the omega floor: chi(C5^2) = 5.
  for (std::size_t k = 0; k < r.chi_seq.size(); ++k)
    o.require(r.chi_seq[k] >= r.omega_floor - 1e-12, "strong chi at k=" + std::to_string(k + 1) + " below omega");
  const SolverConfig cfg;
  int checked = 0;
  for (const auto& f : kFamilies) {
    const CapacityReport c = capacity_bounds(builtin_family(f), 2, cfg);
    for (double lower : c.lower) {
      ++checked;
      o.require(c.Omega_tilde_f.is_pos_inf() || lower <= c.Omega_tilde_f.value() + 1e-6,
                f + ": lower bound " + g9(lower) + " above Omega_tilde_f " + c.Omega_tilde_f.to_string());
    }
  }
  if (o.pass)
    o.detail = "alpha seq " + g9(r.alpha_seq[0]) + ", " + g9(r.alpha_seq[1]) + "; disjunctive chi " +
               g9(r.chi_disj_seq.back()) + " >= " + g9(floor) + "; " + std::to_string(checked) + " capacity bounds";
  return o;
}

// 10. Gradient of Tr(rho log A) and eigendecomposition accuracy.
Outcome hygiene() {
  Outcome o;
  Rng rng(1010);
  double worst_grad = 0, worst_eig = 0;
  for (int t = 0; t < 100; ++t) {
    const int d = rng.uniform_int(2, 5);
    const State rho = random_state(d, rng);
    const HermitianMatrix a = random_psd(d, d, rng, d) + 0.2 * HermitianMatrix::identity(d);
    const HermitianMatrix h = random_hermitian(d, rng);
    const auto f = [&](const HermitianMatrix& x) { return rho_log_trace(rho, x).value(); };
    // Fourth-order central stencil.
    const double step = 1e-3;
    const double fd = (8 * oracle::central_difference(f, a, h, step) - 2 * oracle::central_difference(f, a, h, 2 * step)) / 6;
    const double an = inner(log_trace_gradient(rho, a), h);
    const double e = std::abs(fd - an) / std::max(std::abs(an), 1e-3);
    worst_grad = std::max(worst_grad, e);
    o.require(e <= 1e-5, "instance " + std::to_string(t) + ": gradient relative error " + g9(e));
    const HermitianMatrix m = random_hermitian(rng.uniform_int(1, 8), rng);
    const double r = (eigh(m).reconstruct() - m).frobenius_norm();
    worst_eig = std::max(worst_eig, r);
    o.require(r <= 1e-9, "instance " + std::to_string(t) + ": reconstruction error " + g9(r));
  }
  if (o.pass) o.detail = "100 instances, max gradient error " + g9(worst_grad) + ", max reconstruction " + g9(worst_eig);
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double budget_s;  // 0: no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"golden table", golden_table, 30},
      {"duality", duality, 120},
      {"reflexivity", reflexivity, 180},
      {"max-entropy", max_entropy, 0},
      {"entropy splitting", splitting, 0},
      {"classical bridge", classical_bridge, 0},
      {"omega_f = chi_f", omega_f_equals_chi_f, 0},
      {"tensor multiplicativity", tensor_multiplicativity, 0},
      {"capacity sequences", capacity_sequences, 0},
      {"numerical hygiene", hygiene, 0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].budget_s > 0 && secs > criteria[i].budget_s) {
      o.pass = false;
      o.detail += "; took " + g9(secs) + " s, budget " + g9(criteria[i].budget_s) + " s";
    }
    failures += !o.pass;
    std::printf("[%s] %2zu %-24s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures;
}
