#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/errors.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/ncgraphs.hpp"
#include "cornerlab/random.hpp"
#include "cornerlab/tensorprod.hpp"

namespace cornerlab::cli {

namespace {

constexpr std::uint64_t kSeed = 42;

std::string g9(double x) { return format_g9(x); }

struct Runner {
  std::vector<SelftestCheck> checks;
  Rng root{kSeed};

  // body returns the worst observed quantity and sets ok.
  void check(const std::string& name, const std::function<std::string(Rng&, bool&)>& body) {
    SelftestCheck c;
    c.name = name;
    Rng rng = root.split(checks.size());
    try {
      bool ok = true;
      c.detail = body(rng, ok);
      c.passed = ok;
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    checks.push_back(std::move(c));
  }
};

HermitianMatrix combo(const GeneratedCorner& c, const std::vector<double>& w) {
  HermitianMatrix a = HermitianMatrix::zero(c.dim());
  for (std::size_t i = 0; i < w.size(); ++i) a += w[i] * c.generators()[i];
  return a;
}

// A^{1/2} X A^{1/2} with 0 <= X <= I, so the result lies below A.
HermitianMatrix shrink_below(const HermitianMatrix& a, Rng& rng) {
  const int d = a.dim();
  HermitianMatrix x = random_psd(d, d, rng);
  x = (1.0 / max_eigenvalue(x)) * x;
  const HermitianMatrix root = eigh(a).apply([](double t) { return std::sqrt(std::max(t, 0.0)); });
  return hermitian_part(root.mat() * x.mat() * root.mat());
}

std::vector<Graph> test_graphs() {
  return {Graph::cycle(5), Graph::cycle(4), Graph::complete(3), Graph::path(4), Graph::petersen()};
}

void hermlin_suite(Runner& r) {
  r.check("hermlin.eigh_reconstruction", [](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const HermitianMatrix a = random_hermitian(rng.uniform_int(1, 8), rng);
      const double e = (eigh(a).reconstruct() - a).frobenius_norm() / (1.0 + a.frobenius_norm());
      worst = std::max(worst, e);
    }
    ok = worst <= 1e-9;
    return "max relative residual " + g9(worst);
  });
  r.check("hermlin.log_trace_monotone", [](Rng& rng, bool& ok) {
    double worst = -1e300;
    for (int t = 0; t < 20; ++t) {
      const int d = rng.uniform_int(1, 5);
      const HermitianMatrix a = random_psd(d, d, rng) + 0.01 * HermitianMatrix::identity(d);
      const HermitianMatrix b = a + random_psd(d, rng.uniform_int(1, d), rng);
      const State rho = random_state(d, rng);
      worst = std::max(worst, rho_log_trace(rho, a).value() - rho_log_trace(rho, b).value());
    }
    ok = worst <= 1e-12;
    return "max violation " + g9(worst);
  });
  r.check("hermlin.log_trace_gradient_fd", [](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const int d = rng.uniform_int(1, 5);
      const HermitianMatrix a = random_psd(d, d, rng) + 0.1 * HermitianMatrix::identity(d);
      const HermitianMatrix h = random_hermitian(d, rng);
      const State rho = random_state(d, rng);
      const double step = 1e-5;
      const double fd = (rho_log_trace(rho, a + step * h).value() - rho_log_trace(rho, a - step * h).value()) /
                        (2 * step);
      const double an = inner(log_trace_gradient(rho, a), h);
      worst = std::max(worst, std::abs(fd - an) / std::max(std::abs(an), 1e-12));
    }
    ok = worst <= 1e-5;
    return "max relative error " + g9(worst);
  });
}

void optcore_suite(Runner& r, const SolverConfig& cfg) {
  r.check("optcore.lower_bound_certificate", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      const HermitianMatrix cm = random_hermitian(d, rng);
      const OptResult res = max_min_eig_simplex(c.generators(), cm, cfg);
      const double at = min_eigenvalue(cm + combo(c, res.point.weights()));
      worst = std::max({worst, res.value.value() - at, res.value.value() - res.upper_bound});
    }
    ok = worst <= 1e-9;
    return "max certificate violation " + g9(worst);
  });
  r.check("optcore.cone_cover_times_n", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      const double n = max_min_eig_simplex(c.generators(), HermitianMatrix::zero(d), cfg).value.value();
      if (n < 1e-4) continue;
      const ExtReal m = cone_cover_value(c.generators(), HermitianMatrix::identity(d), cfg);
      worst = std::max(worst, std::abs(m.value() * n - 1.0));
    }
    ok = worst <= 1e-5;
    return "max |M N - 1| " + g9(worst);
  });
  r.check("optcore.entropy_hereditary_invariance", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      auto g = c.generators();
      g.push_back(g.front());
      g.push_back(shrink_below(g.back(), rng));
      const State rho = random_state(d, rng);
      const double h1 = entropy_min_simplex(c.generators(), rho, cfg).value.value();
      const double h2 = entropy_min_simplex(g, rho, cfg).value.value();
      worst = std::max(worst, std::abs(h1 - h2));
    }
    ok = worst <= 1e-5;
    return "max change " + g9(worst);
  });
  r.check("optcore.fw_monotone", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(2, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(2, 5), rng);
      const OptResult res = entropy_min_simplex(c.generators(), random_state(d, rng), cfg);
      for (std::size_t i = 10; i + 1 < res.trace.size(); ++i)
        worst = std::max(worst, res.trace[i + 1] - res.trace[i]);
    }
    ok = worst <= 1e-12;
    return "max increase " + g9(worst);
  });
}

void corner_suite(Runner& r, const SolverConfig& cfg) {
  r.check("corner.duality", [&](Rng& rng, bool& ok) {
    double w1 = 0.0, w2 = 0.0;
    for (int t = 0; t < 10; ++t) {
      const GeneratedCorner c = random_standard_corner(rng.uniform_int(1, 5), rng.uniform_int(1, 6), rng);
      const ParamReport p = param_report(c, cfg);
      w1 = std::max(w1, std::abs(p.m_param.value() * p.n_param - 1.0));
      w2 = std::max(w2, std::abs(p.m_param.value() - p.gamma_ab.value()));
    }
    ok = w1 <= 1e-4 && w2 <= 1e-4;
    return "max |MN - 1| " + g9(w1) + ", max |M - gamma_ab| " + g9(w2);
  });
  r.check("corner.anti_blocker_antitone", [&](Rng& rng, bool& ok) {
    int bad = 0;
    for (int t = 0; t < 20; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner small = random_standard_corner(d, rng.uniform_int(1, 3), rng);
      auto g = small.generators();
      g.push_back(random_psd(d, rng.uniform_int(1, d), rng));
      const GeneratedCorner big(d, g);
      const HermitianMatrix n0 = random_psd(d, rng.uniform_int(1, d), rng);
      const HermitianMatrix n = (0.999 * ab_ray_scale(big, n0).value()) * n0;
      if (ab_membership(big, n) && !ab_membership(small, n)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
  r.check("corner.hereditary_membership", [&](Rng& rng, bool& ok) {
    int bad = 0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      const HermitianMatrix a =
          combo(c, random_distribution(static_cast<int>(c.size()), rng));
      const HermitianMatrix b = shrink_below(a, rng);
      if (membership(c, a, cfg) != Tri::Inside || membership(c, b, cfg) != Tri::Inside) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
  r.check("corner.diagonal_contraction", [&](Rng& rng, bool& ok) {
    int bad = 0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(2, 4);
      std::vector<std::vector<double>> v(rng.uniform_int(1, 4));
      for (auto& x : v)
        for (int i = 0; i < d; ++i) x.push_back(rng.uniform());
      const GeneratedCorner c = GeneratedCorner::from_diagonals(v);
      const HermitianMatrix m = shrink_below(combo(c, random_distribution(static_cast<int>(c.size()), rng)), rng);
      if (membership(c, diag_expectation(m), cfg) != Tri::Inside) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
  r.check("corner.perturbation", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    // M = 1/N moves by about M^2 |dN|, so only corners with M <= 10 are used.
    for (int t = 0, used = 0; used < 5 && t < 100; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      if (m_param(c, cfg).value() > 10) continue;
      ++used;
      std::vector<HermitianMatrix> g;
      for (const auto& x : c.generators()) {
        const HermitianMatrix p = random_psd(d, 1, rng);
        g.push_back(x + (1e-4 / p.frobenius_norm()) * p);
      }
      const GeneratedCorner c2(d, g);
      worst = std::max({worst, std::abs(gamma(c) - gamma(c2)), std::abs(n_param(c, cfg) - n_param(c2, cfg)),
                        std::abs(m_param(c, cfg).value() - m_param(c2, cfg).value())});
    }
    ok = worst <= 1e-2;
    return "max change " + g9(worst);
  });
}

void entropy_suite(Runner& r, const SolverConfig& cfg) {
  r.check("entropy.monotone", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner big = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      std::vector<HermitianMatrix> g;
      for (int k = 0; k < 3; ++k)
        g.push_back(shrink_below(combo(big, random_distribution(static_cast<int>(big.size()), rng)), rng));
      const GeneratedCorner small(d, g);
      const State rho = random_state(d, rng);
      const ExtReal hs = corner_entropy(small, rho, cfg).value;
      const double hb = corner_entropy(big, rho, cfg).value.value();
      if (hs.is_finite()) worst = std::max(worst, hb - hs.value());
    }
    ok = worst <= 1e-3;
    return "max violation " + g9(worst);
  });
  r.check("entropy.concave", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      const State r1 = random_state(d, rng), r2 = random_state(d, rng);
      const double s = rng.uniform();
      const State mix(s * r1.matrix() + (1 - s) * r2.matrix());
      const double lhs = corner_entropy(c, mix, cfg).value.value();
      const double rhs = s * corner_entropy(c, r1, cfg).value.value() + (1 - s) * corner_entropy(c, r2, cfg).value.value();
      worst = std::max(worst, rhs - lhs);
    }
    ok = worst <= 1e-3;
    return "max violation " + g9(worst);
  });
  r.check("entropy.range", [&](Rng& rng, bool& ok) {
    double low = 0.0, high = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const State rho = random_state(d, rng);
      // Rank-one projectors along the eigenbasis of rho put rho itself in the corner.
      std::vector<HermitianMatrix> g;
      const SpectralDecomposition e = eigh(rho.matrix());
      for (int i = 0; i < d; ++i) g.push_back(HermitianMatrix::outer(e.eigenvectors.col(i)));
      for (int k = 0; k < 2; ++k) {
        const HermitianMatrix x = random_psd(d, rng.uniform_int(1, d), rng);
        g.push_back((1.0 / max_eigenvalue(x)) * x);
      }
      const double h = corner_entropy(GeneratedCorner(d, g), rho, cfg).value.value();
      low = std::max(low, -h);
      high = std::max(high, h - von_neumann(rho));
    }
    ok = low <= 1e-6 && high <= 1e-3;
    return "max below zero " + g9(low) + ", max above H(rho) " + g9(high);
  });
  r.check("entropy.continuity", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const int d = rng.uniform_int(1, 4);
      const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
      const State rho(0.9 * random_state(d, rng).matrix() + (0.1 / d) * HermitianMatrix::identity(d));
      HermitianMatrix h = random_hermitian(d, rng);
      h -= (h.trace() / d) * HermitianMatrix::identity(d);
      const double scale = h.frobenius_norm() > 0 ? 1e-5 / h.frobenius_norm() : 0.0;
      const State rho2(rho.matrix() + scale * h);
      worst = std::max(worst, std::abs(corner_entropy(c, rho, cfg).value.value() -
                                       corner_entropy(c, rho2, cfg).value.value()));
    }
    ok = worst <= 1e-2;
    return "max change " + g9(worst);
  });
}

void graphs_suite(Runner& r, const SolverConfig& cfg) {
  r.check("graphs.alpha_chi_products", [](Rng&, bool& ok) {
    int bad = 0;
    for (const Graph& g : test_graphs()) {
      if (alpha(g) * chi_exact(g) < g.n()) ++bad;
      if (omega(g) * clique_cover_number(g) < g.n()) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
  r.check("graphs.omega_chi_f_chi_chain", [](Rng&, bool& ok) {
    int bad = 0;
    for (const Graph& g : test_graphs()) {
      const double cf = chi_f_lp(g).value;
      if (omega(g) > cf + 1e-9 || cf > chi_exact(g) + 1e-9) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
  r.check("graphs.complement_entropy", [&](Rng& rng, bool& ok) {
    double worst_ineq = 0.0, worst_perfect = 0.0;
    for (const Graph& g : test_graphs()) {
      const bool perfect = g.n() == 4 || g.n() == 3;
      for (int t = 0; t < 3; ++t) {
        const auto p = random_distribution(g.n(), rng, 0.1);
        const double s = korner_entropy(g, p, cfg) + korner_entropy(complement(g), p, cfg) - shannon(p);
        worst_ineq = std::max(worst_ineq, -s);
        if (perfect) worst_perfect = std::max(worst_perfect, std::abs(s));
      }
    }
    ok = worst_ineq <= 1e-3 && worst_perfect <= 1e-3;
    return "max deficit " + g9(worst_ineq) + ", max perfect residual " + g9(worst_perfect);
  });
  r.check("graphs.max_korner_is_log_chi_f", [&](Rng&, bool& ok) {
    double worst = 0.0;
    for (const Graph& g : test_graphs()) {
      const MaxEntropyResult m = max_entropy_state(vp_corner(g).lift(), cfg);
      worst = std::max(worst, std::abs(m.value - std::log(chi_f_lp(g).value)));
    }
    ok = worst <= 1e-3;
    return "max deviation " + g9(worst);
  });
}

void ncgraphs_suite(Runner& r, const SolverConfig& cfg) {
  r.check("ncgraphs.monotone_in_system", [&](Rng& rng, bool& ok) {
    int bad = 0;
    for (int t = 0; t < 4; ++t) {
      Graph g = Graph::empty(5);
      for (int i = 0; i < 5; ++i)
        for (int k = i + 1; k < 5; ++k)
          if (rng.uniform() < 0.4) g.add_edge(i, k);
      Graph h = g;
      for (int i = 0; i < 5; ++i)
        for (int k = i + 1; k < 5; ++k)
          if (rng.uniform() < 0.3) h.add_edge(i, k);
      const NcParams a = nc_params(OperatorSystem::from_graph(g), cfg);
      const NcParams b = nc_params(OperatorSystem::from_graph(h), cfg);
      auto le = [](const NcValue& x, const NcValue& y) { return x.value.as_double() <= y.value.as_double() + 1e-6; };
      for (auto m : {&NcParams::omega, &NcParams::omega_tilde, &NcParams::omega_f})
        if (!le(a.*m, b.*m)) ++bad;
      for (auto m : {&NcParams::Omega, &NcParams::Omega_f, &NcParams::Omega_tilde_f})
        if (!le(b.*m, a.*m)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
  r.check("ncgraphs.sandwich", [&](Rng&, bool& ok) {
    int bad = 0, tested = 0;
    std::vector<OperatorSystem> systems;
    for (const Graph& g : test_graphs()) systems.push_back(OperatorSystem::from_graph(g));
    for (const char* name : {"ci:3", "t:2", "t:3", "s:2", "s:3"}) systems.push_back(builtin_family(name));
    for (const auto& s : systems) {
      const GeneratedCorner ap = projection_families(s, ProjKind::Abelian).corner();
      for (const auto& p : projection_families(s, ProjKind::Full).projections) {
        ++tested;
        if (!ab_membership(ap, p)) ++bad;
      }
    }
    ok = bad == 0;
    return std::to_string(tested) + " full projections, " + std::to_string(bad) + " violations";
  });
  r.check("ncgraphs.chi_f_equals_omega_f", [&](Rng&, bool& ok) {
    double worst = 0.0;
    std::vector<OperatorSystem> systems;
    for (const Graph& g : test_graphs()) systems.push_back(OperatorSystem::from_graph(g));
    for (const char* name : {"ci:2", "ci:3", "t:2", "t:3", "s:2", "s:3"}) systems.push_back(builtin_family(name));
    for (const auto& s : systems) worst = std::max(worst, nc_params(s, cfg).chi_f_omega_f_residual);
    ok = worst <= 1e-4;
    return "max residual " + g9(worst);
  });
  r.check("ncgraphs.tensor_multiplicativity", [&](Rng&, bool& ok) {
    double worst = 0.0;
    const std::vector<Graph> small{Graph::complete(2), Graph::path(3), Graph::empty(2)};
    for (const auto& g : small)
      for (const auto& h : small) {
        const OperatorSystem sg = OperatorSystem::from_graph(g), sh = OperatorSystem::from_graph(h);
        const NcParams pg = nc_params(sg, cfg), ph = nc_params(sh, cfg), pp = nc_params(tensor(sg, sh), cfg);
        worst = std::max(worst, pp.chi_f.value.value() - pg.chi_f.value.value() * ph.chi_f.value.value());
        worst = std::max(worst, pg.omega_tilde.value.value() * ph.omega_tilde.value.value() - pp.omega_tilde.value.value());
      }
    ok = worst <= 1e-3;
    return "max violation " + g9(worst);
  });
  r.check("ncgraphs.rotation_perturbation", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (const Graph& g : {Graph::cycle(4), Graph::path(3)}) {
      const OperatorSystem s = OperatorSystem::from_graph(g);
      const int d = g.n();
      HermitianMatrix k = random_hermitian(d, rng);
      k = (1e-4 / max_eigenvalue(eigh(k).apply([](double x) { return std::abs(x); }))) * k;
      const SpectralDecomposition e = eigh(k);
      CMatrix u = e.eigenvectors;
      for (int i = 0; i < d; ++i) u.col(i) *= std::exp(Complex(0, e.eigenvalues(i)));
      u = u * e.eigenvectors.adjoint();
      const State rho(0.8 * random_state(d, rng).matrix() + (0.2 / d) * HermitianMatrix::identity(d));
      const double h0 = nc_graph_entropy(s, rho, cfg).value.value();
      const double h1 = nc_graph_entropy(s.conjugated(u), rho, cfg).value.value();
      worst = std::max(worst, std::abs(h0 - h1));
    }
    ok = worst <= 1e-2;
    return "max change " + g9(worst);
  });
}

void tensor_suite(Runner& r, const SolverConfig& cfg) {
  r.check("tensorprod.multiplicativity", [&](Rng& rng, bool& ok) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const GeneratedCorner a = random_standard_corner(rng.uniform_int(1, 3), rng.uniform_int(1, 3), rng);
      const GeneratedCorner b = random_standard_corner(rng.uniform_int(1, 3), rng.uniform_int(1, 3), rng);
      const GeneratedCorner p = max_tensor(a, b);
      auto rel = [](double x, double y, double z) { return std::abs(z - x * y) / (1.0 + x * y); };
      worst = std::max({worst, rel(gamma(a), gamma(b), gamma(p)),
                        rel(n_param(a, cfg), n_param(b, cfg), n_param(p, cfg)),
                        rel(m_param(a, cfg).value(), m_param(b, cfg).value(), m_param(p, cfg).value())});
    }
    ok = worst <= 1e-3;
    return "max relative error " + g9(worst);
  });
  r.check("tensorprod.integer_covers", [&](Rng&, bool& ok) {
    const OperatorSystem s = OperatorSystem::from_graph(Graph::cycle(5));
    const NcParams one = nc_params(s, cfg);
    const NcParams two = nc_params(tensor(s, s), cfg);
    const double c1 = one.chi.value.value(), c2 = two.chi.value.value();
    const double o1 = one.Omega.value.value(), o2 = two.Omega.value.value();
    ok = c2 <= c1 * c1 && o2 <= o1 * o1;
    return "chi " + g9(c2) + " <= " + g9(c1 * c1) + ", Omega " + g9(o2) + " <= " + g9(o1 * o1);
  });
  r.check("tensorprod.entropy_inequality", [&](Rng& rng, bool& ok) {
    int bad = 0;
    for (int t = 0; t < 5; ++t) {
      const GeneratedCorner a = random_standard_corner(2, rng.uniform_int(1, 3), rng);
      const GeneratedCorner b = random_standard_corner(2, rng.uniform_int(1, 3), rng);
      if (!product_entropy_check(a, b, random_state(4, rng), cfg).inequality_holds) ++bad;
    }
    ok = bad == 0;
    return std::to_string(bad) + " violations";
  });
}

void cli_suite(Runner& r) {
  r.check("cli.determinism_and_round_trip", [](Rng&, bool& ok) {
    const char* argv[] = {"cornerlab", "ncgraph", "--builtin", "t:2", "--p", "0.3,0.7", "--entropy"};
    std::ostringstream o1, o2, e1, e2;
    const int c1 = run(7, argv, o1, e1);
    const int c2 = run(7, argv, o2, e2);
    const auto j = nlohmann::json::parse(o1.str());
    ok = c1 == 0 && c2 == 0 && o1.str() == o2.str() && j.dump(2) + "\n" == o1.str();
    return "exit " + std::to_string(c1) + ", " + std::to_string(o1.str().size()) + " bytes";
  });
}

}  // namespace

std::vector<SelftestCheck> run_selftest(SolverConfig cfg) {
  cfg.seed = kSeed;
  Runner r;
  hermlin_suite(r);
  optcore_suite(r, cfg);
  corner_suite(r, cfg);
  entropy_suite(r, cfg);
  graphs_suite(r, cfg);
  ncgraphs_suite(r, cfg);
  tensor_suite(r, cfg);
  cli_suite(r);
  return r.checks;
}

}  // namespace cornerlab::cli
