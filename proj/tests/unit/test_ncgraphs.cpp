#include <cmath>

#include <gtest/gtest.h>

#include "cornerlab/graphs.hpp"
#include "cornerlab/ncgraphs.hpp"
#include "cornerlab/random.hpp"
#include "oracles.hpp"
#include "testing.hpp"

using namespace cornerlab;

namespace {

CVector ones(int d) { return CVector::Ones(d); }

HermitianMatrix projector_onto(const CMatrix& frame) { return hermitian_part(frame * frame.adjoint()); }

}  // namespace

TEST(OperatorSystem, FromGraphBasisSizes) {
  EXPECT_EQ(opsys_from_graph(Graph::empty(4)).size(), 4u);
  EXPECT_EQ(opsys_from_graph(Graph::complete(4)).size(), 16u);
  EXPECT_EQ(opsys_from_graph(Graph::cycle(5)).size(), 15u);
}

TEST(OperatorSystem, Validation) {
  // Missing the identity.
  EXPECT_CL_ERROR(OperatorSystem(2, {HermitianMatrix::diagonal({1, 0})}), ErrorCode::InvalidOperatorSystem);
  // Dependent basis.
  EXPECT_CL_ERROR(OperatorSystem(2, {HermitianMatrix::identity(2), 2.0 * HermitianMatrix::identity(2)}),
                  ErrorCode::InvalidOperatorSystem);
  EXPECT_CL_ERROR(OperatorSystem(65, {HermitianMatrix::identity(65)}), ErrorCode::DimOverflow);
  const OperatorSystem s(2, {HermitianMatrix::identity(2)});
  EXPECT_TRUE(s.contains(CMatrix::Identity(2, 2) * Complex(0, 3)));
  EXPECT_FALSE(s.contains(HermitianMatrix::diagonal({1, 0}).mat()));
  EXPECT_NEAR(s.residual(HermitianMatrix::diagonal({1, 0}).mat()), std::sqrt(0.5), 1e-12);
}

TEST(OperatorSystem, TensorOfGraphsIsStrongProduct) {
  const OperatorSystem a = opsys_from_graph(Graph::path(3)), b = opsys_from_graph(Graph::complete(2));
  const OperatorSystem t = tensor(a, b);
  ASSERT_TRUE(t.source_graph().has_value());
  EXPECT_EQ(*t.source_graph(), strong_product(Graph::path(3), Graph::complete(2)));
  // Same span as the Kronecker products of the bases.
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) EXPECT_TRUE(t.contains(kron(x, y).mat()));
  EXPECT_EQ(t.size(), a.size() * b.size());
}

TEST(Classify, Examples) {
  const OperatorSystem diag = opsys_from_graph(Graph::empty(3));
  EXPECT_TRUE(classify_projection(diag, HermitianMatrix::identity(3)).abelian);
  const OperatorSystem t3 = builtin_family("t:3");
  EXPECT_TRUE(classify_projection(t3, (1.0 / 3) * HermitianMatrix::outer(ones(3))).full);
  Rng rng(3);
  for (const auto& s : {diag, t3, builtin_family("ci:3"), builtin_family("s:3")}) {
    const ProjectionFlags f = classify_projection(s, HermitianMatrix::outer(random_unit_vector(3, rng)));
    EXPECT_TRUE(f.abelian);
    EXPECT_TRUE(f.clique_certified);
  }
  EXPECT_CL_ERROR(classify_projection(diag, 0.5 * HermitianMatrix::identity(3)), ErrorCode::NotProjection);
}

TEST(Classify, GraphSetsByDefinition) {
  const Graph c5 = Graph::cycle(5);
  const OperatorSystem s = opsys_from_graph(c5);
  for (unsigned m = 1; m < 32; ++m) {
    std::vector<double> d(5);
    int k = 0;
    for (int v = 0; v < 5; ++v) k += (d[v] = (m >> v) & 1u);
    const ProjectionFlags f = classify_projection(s, HermitianMatrix::diagonal(d));
    EXPECT_EQ(f.abelian, oracle::independent(c5, m));
    // Full = clique for diagonal projections of graph systems.
    EXPECT_EQ(f.full, oracle::independent(complement(c5), m));
  }
}

TEST(Families, Examples) {
  const ProjectionFamily ap = projection_families(opsys_from_graph(Graph::cycle(5)), ProjKind::Abelian);
  int rank_two = 0;
  for (const auto& p : ap.projections) rank_two += std::lround(p.trace()) == 2;
  EXPECT_EQ(rank_two, 5);
  for (int d = 2; d <= 4; ++d)
    EXPECT_TRUE(projection_families(builtin_family("ci:" + std::to_string(d)), ProjKind::Full).empty());
  for (int d = 2; d <= 4; ++d) {
    const ProjectionFamily cp = projection_families(builtin_family("s:" + std::to_string(d)), ProjKind::Clique);
    bool has_identity = false;
    for (const auto& p : cp.projections)
      has_identity = has_identity || (p - HermitianMatrix::identity(d)).frobenius_norm() < 1e-12;
    EXPECT_TRUE(has_identity);
  }
}

TEST(Families, MembersClassifyCorrectly) {
  for (const char* name : {"ci:3", "t:2", "t:3", "s:2", "s:3"}) {
    const OperatorSystem s = builtin_family(name);
    for (ProjKind k : {ProjKind::Abelian, ProjKind::Clique, ProjKind::Full}) {
      const ProjectionFamily f = projection_families(s, k);
      for (std::size_t i = 0; i < f.projections.size(); ++i) {
        const ProjectionFlags fl = classify_projection(s, f.projections[i], f.frames[i]);
        if (k == ProjKind::Abelian) EXPECT_TRUE(fl.abelian) << name;
        if (k == ProjKind::Clique) EXPECT_TRUE(fl.clique_certified) << name;
        if (k == ProjKind::Full) EXPECT_TRUE(fl.full) << name;
      }
    }
  }
}

TEST(Search, ObjectiveGradientMatchesFiniteDifferences) {
  Rng rng(5);
  const std::vector<OperatorSystem> systems{builtin_family("t:3"), opsys_from_graph(Graph::cycle(4)),
                                            builtin_family("s:3")};
  for (const auto& s : systems) {
    for (ProjKind k : {ProjKind::Abelian, ProjKind::Clique, ProjKind::Full}) {
      const int d = s.dim();
      const CMatrix v = random_unitary(d, rng).leftCols(2);
      CMatrix dir = CMatrix::Zero(d, 2);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < 2; ++j) dir(i, j) = Complex(rng.normal(), rng.normal());
      CMatrix g;
      search_objective(s, k, v, &g);
      const double h = 1e-6;
      const double fd = (search_objective(s, k, v + h * dir, nullptr) - search_objective(s, k, v - h * dir, nullptr)) / (2 * h);
      const double an = (g.adjoint() * dir).trace().real();
      EXPECT_NEAR(fd, an, 1e-6 * std::max(1.0, std::abs(an)));
    }
  }
}

TEST(Search, FindsFullProjectionsOfT2) {
  const OperatorSystem s = builtin_family("t:2").forget_origin();
  const ProjectionFamily fp = projection_families(s, ProjKind::Full);
  EXPECT_EQ(fp.provenance, Provenance::Searched);
  ASSERT_GE(fp.projections.size(), 2u);
  for (const auto& p : fp.projections) {
    EXPECT_EQ(std::lround(p.trace()), 1);
    EXPECT_TRUE(classify_projection(s, p).full);
  }
  const NcParams params = nc_params(s, SolverConfig{});
  EXPECT_NEAR(params.Omega_tilde_f.value.value(), 2.0, 1e-4);
  EXPECT_NE(params.Omega_tilde_f.exactness, Exactness::Exact);
}

TEST(Search, CiTensorSHasNoRankTwoClique) {
  // omega(CI_2 (x) S_2) = 1: the search must not certify a 2-element clique.
  const OperatorSystem s = tensor(builtin_family("ci:2"), builtin_family("s:2")).forget_origin();
  SearchConfig search;
  search.budget = 200;
  EXPECT_FALSE(search_projection(s, ProjKind::Clique, 2, search).has_value());
  const ProjectionFamily cp = projection_families(tensor(builtin_family("ci:2"), builtin_family("s:2")), ProjKind::Clique);
  for (const auto& p : cp.projections) EXPECT_EQ(std::lround(p.trace()), 1);
}

TEST(NcParams, GraphSystemsMatchClassicalValues) {
  const SolverConfig cfg;
  for (const Graph& g : {Graph::cycle(5), Graph::cycle(4), Graph::complete(3), Graph::petersen()}) {
    const NcParams p = nc_params(opsys_from_graph(g), cfg);
    EXPECT_DOUBLE_EQ(p.alpha.value.value(), oracle::alpha(g));
    EXPECT_DOUBLE_EQ(p.omega.value.value(), oracle::omega(g));
    EXPECT_NEAR(p.chi_f.value.value(), chi_f_lp(g).value, 1e-4);
    EXPECT_NEAR(p.omega_f.value.value(), chi_f_lp(g).value, 1e-4);
    EXPECT_LE(p.chi_f_omega_f_residual, 1e-4);
    EXPECT_DOUBLE_EQ(p.chi.value.value(), oracle::chi(g));
    EXPECT_DOUBLE_EQ(p.Omega.value.value(), oracle::chi(complement(g)));
    EXPECT_NEAR(p.Omega_f.value.value(), chi_f_lp(complement(g)).value, 1e-4);
    EXPECT_EQ(p.chi_f.exactness, Exactness::Exact);
  }
}

TEST(NcParams, ConjugationInvariance) {
  Rng rng(7);
  const OperatorSystem s = opsys_from_graph(Graph::cycle(5));
  const NcParams a = nc_params(s, {});
  const NcParams b = nc_params(s.conjugated(random_unitary(5, rng)), {});
  EXPECT_NEAR(a.chi_f.value.value(), b.chi_f.value.value(), 1e-4);
  EXPECT_NEAR(a.Omega_f.value.value(), b.Omega_f.value.value(), 1e-4);
  EXPECT_EQ(a.alpha.value, b.alpha.value);
}

TEST(NcParams, MonotoneOnNestedGraphs) {
  Rng rng(11);
  for (int t = 0; t < 5; ++t) {
    Graph g(5);
    for (int i = 0; i < 5; ++i)
      for (int k = i + 1; k < 5; ++k)
        if (rng.uniform() < 0.4) g.add_edge(i, k);
    Graph h = g;
    for (int i = 0; i < 5; ++i)
      for (int k = i + 1; k < 5; ++k)
        if (rng.uniform() < 0.3) h.add_edge(i, k);
    const NcParams a = nc_params(opsys_from_graph(g), {}), b = nc_params(opsys_from_graph(h), {});
    EXPECT_LE(a.omega.value.as_double(), b.omega.value.as_double() + 1e-6);
    EXPECT_LE(a.omega_tilde.value.as_double(), b.omega_tilde.value.as_double() + 1e-6);
    EXPECT_LE(a.omega_f.value.as_double(), b.omega_f.value.as_double() + 1e-6);
    EXPECT_GE(a.Omega.value.as_double(), b.Omega.value.as_double() - 1e-6);
    EXPECT_GE(a.Omega_f.value.as_double(), b.Omega_f.value.as_double() - 1e-6);
    EXPECT_GE(a.Omega_tilde_f.value.as_double(), b.Omega_tilde_f.value.as_double() - 1e-6);
  }
}

TEST(NcParams, SubmultiplicativeChiF) {
  const std::vector<Graph> small{Graph::complete(2), Graph::path(3), Graph::empty(2), Graph::cycle(4)};
  for (const auto& g : small)
    for (const auto& h : small) {
      const OperatorSystem sg = opsys_from_graph(g), sh = opsys_from_graph(h);
      const NcParams pg = nc_params(sg, {}), ph = nc_params(sh, {}), pt = nc_params(tensor(sg, sh), {});
      EXPECT_LE(pt.chi_f.value.value(), pg.chi_f.value.value() * ph.chi_f.value.value() + 1e-3);
      EXPECT_GE(pt.omega_tilde.value.value(), pg.omega_tilde.value.value() * ph.omega_tilde.value.value() - 1e-3);
    }
}

TEST(NcEntropy, Examples) {
  Rng rng(13);
  const SolverConfig cfg;
  const State rho = random_state(4, rng);
  EXPECT_NEAR(nc_graph_entropy(opsys_from_graph(Graph::empty(4)), rho, cfg).value.value(), 0.0, 1e-6);
  EXPECT_NEAR(nc_graph_entropy(opsys_from_graph(Graph::complete(4)), rho, cfg).value.value(), von_neumann(rho), 1e-3);
  EXPECT_NEAR(nc_graph_entropy(opsys_from_graph(Graph::cycle(5)), State::maximally_mixed(5), cfg).value.value(),
              std::log(2.5), 1e-3);
}

TEST(NcEntropy, DiagonalStatesMatchKorner) {
  Rng rng(17);
  const SolverConfig cfg;
  for (const Graph& g : {Graph::cycle(5), Graph::cycle(4), Graph::complete(3), Graph::petersen()}) {
    for (int t = 0; t < 3; ++t) {
      const auto p = random_distribution(g.n(), rng, 0.1);
      EXPECT_NEAR(nc_graph_entropy(opsys_from_graph(g), State::diagonal(p), cfg).value.value(),
                  korner_entropy(g, p, cfg), 1e-3);
    }
  }
}

TEST(NcEntropy, MaximumIsLogChiF) {
  const SolverConfig cfg;
  const OperatorSystem s = opsys_from_graph(Graph::cycle(5));
  const GeneratedCorner ap = projection_families(s, ProjKind::Abelian).corner();
  const MaxEntropyResult m = max_entropy_state(ap, cfg);
  EXPECT_NEAR(m.value, std::log(nc_params(s, cfg).chi_f.value.value()), 1e-6);
}

TEST(Capacity, Examples) {
  const SolverConfig cfg;
  for (int d = 2; d <= 4; ++d) {
    const CapacityReport ci = capacity_bounds(builtin_family("ci:" + std::to_string(d)), 1, cfg);
    EXPECT_DOUBLE_EQ(ci.lower[0], d);
    EXPECT_NEAR(ci.Omega_f.value(), d, 1e-6);
    const CapacityReport t = capacity_bounds(builtin_family("t:" + std::to_string(d)), 1, cfg);
    EXPECT_DOUBLE_EQ(t.lower[0], d);
    EXPECT_NEAR(t.Omega_f.value(), d, 1e-6);
  }
  const CapacityReport c5 = capacity_bounds(opsys_from_graph(Graph::cycle(5)), 2, cfg);
  ASSERT_EQ(c5.lower.size(), 2u);
  EXPECT_DOUBLE_EQ(c5.lower[0], 2.0);
  EXPECT_DOUBLE_EQ(c5.lower[1], std::sqrt(5.0));
  EXPECT_TRUE(c5.lower_exact[1]);
  const CapacityReport big = capacity_bounds(builtin_family("s:9"), 2, cfg);
  EXPECT_TRUE(big.truncated);
}

TEST(Builtins, NamesAndRows) {
  EXPECT_CL_ERROR(builtin_family("x:2"), ErrorCode::UnknownName);
  EXPECT_CL_ERROR(builtin_family("t"), ErrorCode::UnknownName);
  EXPECT_CL_ERROR(builtin_family("t:0"), ErrorCode::UnknownName);
  EXPECT_EQ(builtin_family("ci:3").size(), 1u);
  EXPECT_EQ(builtin_family("t:3").size(), 2u);
  EXPECT_EQ(builtin_family("s:3").size(), 7u);
  for (const char* f : {"ci:2", "ci:3", "ci:4", "t:2", "t:3", "t:4", "s:2", "s:3", "s:4"})
    for (const auto& r : section9_rows(f, {})) EXPECT_TRUE(r.pass) << r.system << " " << r.parameter;
}

TEST(Builtins, ClosedFormsAgreeWithSearch) {
  // T_2 and S_2 by search (origin dropped) reproduce the closed-form values.
  const SolverConfig cfg;
  const NcParams t = nc_params(builtin_family("t:2").forget_origin(), cfg);
  EXPECT_NEAR(t.Omega_tilde_f.value.value(), 2.0, 1e-4);
  const NcParams s = nc_params(builtin_family("s:2").forget_origin(), cfg);
  EXPECT_NEAR(s.Omega_tilde_f.value.value(), 2.0, 1e-4);
  EXPECT_NEAR(s.Omega_f.value.value(), 1.0, 1e-4);
}

TEST(Sandwich, FullProjectionsPairAtMostOneWithAbelian) {
  for (const char* name : {"t:2", "t:3", "s:2", "s:3"}) {
    const OperatorSystem s = builtin_family(name);
    const GeneratedCorner ap = projection_families(s, ProjKind::Abelian).corner();
    for (const auto& p : projection_families(s, ProjKind::Full).projections) EXPECT_TRUE(ab_membership(ap, p)) << name;
  }
  (void)projector_onto;
}
