#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "cornerlab/entropy.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/random.hpp"
#include "oracles.hpp"
#include "testing.hpp"

using namespace cornerlab;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (rng.uniform() < p) g.add_edge(i, k);
  return g;
}

unsigned mask_of(const VertexSet& s) {
  unsigned m = 0;
  for (int v : s) m |= 1u << v;
  return m;
}

}  // namespace

TEST(Graph, FactoriesAndEdges) {
  EXPECT_EQ(Graph::cycle(5).edge_count(), 5);
  EXPECT_EQ(Graph::complete(4).edge_count(), 6);
  EXPECT_EQ(Graph::path(4).edge_count(), 3);
  const Graph p = Graph::petersen();
  EXPECT_EQ(p.n(), 10);
  EXPECT_EQ(p.edge_count(), 15);
  for (int v = 0; v < 10; ++v) {
    int deg = 0;
    for (int u = 0; u < 10; ++u) deg += u != v && p.adjacent(u, v);
    EXPECT_EQ(deg, 3);
  }
  EXPECT_CL_ERROR(Graph::from_edges(3, {{0, 3}}), ErrorCode::InvalidArgument);
}

TEST(Combinators, Examples) {
  EXPECT_EQ(complement(Graph::complete(3)), Graph::empty(3));
  EXPECT_EQ(strong_product(Graph::complete(2), Graph::complete(2)), Graph::complete(4));
  EXPECT_EQ(graph_combinator(Graph::complete(3), std::nullopt, GraphOp::Complement), Graph::empty(3));
  EXPECT_CL_ERROR(graph_combinator(Graph::complete(2), std::nullopt, GraphOp::Strong), ErrorCode::MissingOperand);
  EXPECT_CL_ERROR(graph_combinator(Graph::complete(2), std::nullopt, GraphOp::Disjunctive), ErrorCode::MissingOperand);
}

TEST(Combinators, ProductDefinitionsByPairs) {
  Rng rng(3);
  const Graph g = random_graph(4, 0.5, rng), h = random_graph(3, 0.5, rng);
  const Graph s = strong_product(g, h), d = disjunctive_product(g, h);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 3; ++l) {
          const int a = i * 3 + k, b = j * 3 + l;
          if (a == b) continue;
          const bool gi = i == j || g.adjacent(i, j), hk = k == l || h.adjacent(k, l);
          EXPECT_EQ(s.adjacent(a, b), gi && hk);
          EXPECT_EQ(d.adjacent(a, b), (i != j && g.adjacent(i, j)) || (k != l && h.adjacent(k, l)));
        }
}

TEST(IndependentSets, Examples) {
  const auto e = independent_sets(Graph::empty(4), true);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (VertexSet{0, 1, 2, 3}));
  const auto k = independent_sets(Graph::complete(4), true);
  ASSERT_EQ(k.size(), 4u);
  for (const auto& s : k) EXPECT_EQ(s.size(), 1u);
  const auto c5 = independent_sets(Graph::cycle(5), true);
  ASSERT_EQ(c5.size(), 5u);
  for (const auto& s : c5) EXPECT_EQ(s.size(), 2u);
}

TEST(IndependentSets, MatchSubsetEnumeration) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng.uniform_int(1, 9), 0.4, rng);
    std::vector<unsigned> got;
    for (const auto& s : independent_sets(g, true)) got.push_back(mask_of(s));
    std::sort(got.begin(), got.end());
    auto want = oracle::maximal_independent_masks(g);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want);
    int all = 0;
    for (unsigned m = 0; m < (1u << g.n()); ++m) all += oracle::independent(g, m);
    // The empty set is included.
    EXPECT_EQ(static_cast<int>(independent_sets(g, false).size()), all);
    std::vector<unsigned> cliques;
    for (const auto& s : maximal_cliques(g)) cliques.push_back(mask_of(s));
    std::sort(cliques.begin(), cliques.end());
    auto want_c = oracle::maximal_independent_masks(complement(g));
    std::sort(want_c.begin(), want_c.end());
    EXPECT_EQ(cliques, want_c);
  }
}

TEST(IndependentSets, TooLarge) {
  EXPECT_CL_ERROR(independent_sets(Graph::empty(kMaxGraphVertices + 1), true), ErrorCode::TooLarge);
  EXPECT_CL_ERROR(independent_sets(Graph::empty(kMaxAllSetsVertices + 1), false), ErrorCode::TooLarge);
}

TEST(Numbers, AgainstBruteForce) {
  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    const Graph g = random_graph(rng.uniform_int(1, 10), rng.uniform(), rng);
    EXPECT_EQ(alpha(g), oracle::alpha(g));
    EXPECT_EQ(omega(g), oracle::omega(g));
    EXPECT_EQ(chi_exact(g), oracle::chi(g));
    EXPECT_EQ(clique_cover_number(g), oracle::chi(complement(g)));
  }
}

TEST(Numbers, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(chi_exact(Graph::complete(n)), n);
  EXPECT_EQ(chi_exact(Graph::cycle(5)), 3);
  EXPECT_EQ(chi_exact(Graph::petersen()), 3);
  EXPECT_EQ(oracle::chi(Graph::petersen()), 3);
  EXPECT_EQ(alpha(strong_product(Graph::cycle(5), Graph::cycle(5))), 5);
  EXPECT_EQ(oracle::alpha(strong_product(Graph::cycle(5), Graph::cycle(5))), 5);
}

TEST(ChiF, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const ChiFResult r = chi_f_lp(Graph::complete(n));
    EXPECT_DOUBLE_EQ(r.value, n);
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_EQ(r.exact->num, n);
    EXPECT_EQ(r.exact->den, 1);
  }
  const ChiFResult c5 = chi_f_lp(Graph::cycle(5));
  EXPECT_DOUBLE_EQ(c5.value, 2.5);
  EXPECT_EQ(c5.exact->num, 5);
  EXPECT_EQ(c5.exact->den, 2);
  EXPECT_DOUBLE_EQ(chi_f_lp(Graph::petersen()).value, 2.5);
  EXPECT_DOUBLE_EQ(chi_f_lp(Graph::cycle(7)).value, 7.0 / 3);
  EXPECT_DOUBLE_EQ(chi_f_lp(Graph::cycle(9)).value, 9.0 / 4);
}

TEST(ChiF, AgainstCoverGridAndDuality) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_DOUBLE_EQ(chi_f_lp(c5).value, oracle::fractional_cover_grid(oracle::maximal_independent_masks(c5), 5, 10));
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(rng.uniform_int(2, 8), 0.5, rng);
    const ChiFResult r = chi_f_lp(g);
    // Feasible cover, feasible dual (weight <= 1 on every independent set), equal totals.
    std::vector<double> cover(g.n(), 0.0);
    double total = 0.0;
    for (std::size_t k = 0; k < r.sets.size(); ++k) {
      for (int v : r.sets[k]) cover[v] += r.set_weights[k];
      total += r.set_weights[k];
    }
    for (double c : cover) EXPECT_GE(c, 1 - 1e-9);
    for (const auto& s : independent_sets(g, true)) {
      double w = 0.0;
      for (int v : s) w += r.vertex_weights[v];
      EXPECT_LE(w, 1 + 1e-9);
    }
    double packing = 0.0;
    for (double w : r.vertex_weights) packing += w;
    EXPECT_NEAR(total, packing, 1e-9);
    EXPECT_NEAR(r.value, total, 1e-9);
    EXPECT_LE(omega(g), r.value + 1e-9);
    EXPECT_LE(r.value, chi_exact(g) + 1e-9);
  }
}

TEST(SnapRational, Basics) {
  const auto r = snap_rational(2.5000000001);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->num, 5);
  EXPECT_EQ(r->den, 2);
  EXPECT_FALSE(snap_rational(std::sqrt(2.0), 100).has_value());
}

TEST(Corners, VpAndFvp) {
  const DiagonalCorner vp = vp_corner(Graph::cycle(5));
  EXPECT_EQ(vp.kind(), DiagonalCorner::Kind::VGen);
  EXPECT_EQ(vp.data().size(), 5u);
  const DiagonalCorner fvp = fvp_polytope(Graph::cycle(5));
  EXPECT_EQ(fvp.kind(), DiagonalCorner::Kind::HPoly);
  EXPECT_EQ(fvp.data().size(), 5u);  // edges are the maximal cliques
  EXPECT_TRUE(fvp.contains({0.5, 0.5, 0.5, 0.5, 0.5}));
  EXPECT_FALSE(fvp.contains({0.6, 0.5, 0.5, 0.5, 0.5}));
}

TEST(Korner, Examples) {
  Rng rng(13);
  const SolverConfig cfg;
  const auto p = random_distribution(4, rng);
  EXPECT_NEAR(korner_entropy(Graph::empty(4), p, cfg), 0.0, 1e-9);
  EXPECT_NEAR(korner_entropy(Graph::complete(4), p, cfg), oracle::shannon(p), 1e-6);
  EXPECT_NEAR(korner_entropy(Graph::complete(4), std::vector<double>(4, 0.25), cfg), std::log(4.0), 1e-6);
  EXPECT_NEAR(korner_entropy(Graph::cycle(5), std::vector<double>(5, 0.2), cfg), std::log(2.5), 1e-6);
}

TEST(Korner, ComplementInequalityAndPerfectEquality) {
  Rng rng(17);
  const SolverConfig cfg;
  for (const Graph& g : {Graph::cycle(4), Graph::path(4), Graph::path(5), Graph::cycle(5), Graph::petersen()}) {
    const bool perfect = g.n() != 10 && !(g == Graph::cycle(5));
    for (int t = 0; t < 5; ++t) {
      const auto p = random_distribution(g.n(), rng, 0.1);
      const double s = korner_entropy(g, p, cfg) + korner_entropy(complement(g), p, cfg);
      EXPECT_GE(s, oracle::shannon(p) - 1e-3);
      if (perfect) EXPECT_NEAR(s, oracle::shannon(p), 1e-3);
    }
  }
  // C5 is imperfect: the sum is strictly larger at the uniform distribution.
  const std::vector<double> u(5, 0.2);
  EXPECT_GT(korner_entropy(Graph::cycle(5), u, cfg) + korner_entropy(complement(Graph::cycle(5)), u, cfg),
            std::log(5.0) + 1e-2);
}

TEST(Korner, MaximumIsLogChiF) {
  const SolverConfig cfg;
  for (const Graph& g : {Graph::cycle(5), Graph::cycle(4), Graph::complete(3), Graph::petersen()}) {
    const MaxEntropyResult m = max_entropy_state(vp_corner(g).lift(), cfg);
    EXPECT_NEAR(m.value, std::log(chi_f_lp(g).value), 1e-3);
    EXPECT_NEAR(korner_entropy(g, m.state.matrix().diag(), cfg), m.value, 1e-3);
  }
}

TEST(RateSequences, Examples) {
  const RateSequences k2 = rate_sequences(Graph::complete(2), 2);
  EXPECT_EQ(k2.alpha_seq, (std::vector<double>{1, 1}));
  EXPECT_EQ(k2.chi_seq, (std::vector<double>{2, 2}));
  const RateSequences e = rate_sequences(Graph::empty(3), 2);
  for (double x : e.chi_seq) EXPECT_DOUBLE_EQ(x, 1.0);
  const RateSequences c5 = rate_sequences(Graph::cycle(5), 3);
  ASSERT_GE(c5.alpha_seq.size(), 2u);
  EXPECT_DOUBLE_EQ(c5.alpha_seq[1], std::sqrt(5.0));
  for (double x : c5.chi_seq) EXPECT_GE(x, c5.omega_floor);
  for (double x : c5.chi_disj_seq) EXPECT_GE(x, c5.chi_f_floor);
  EXPECT_TRUE(c5.truncated);
}

TEST(Dimacs, ParsesAndRejects) {
  const Graph g = parse_dimacs("c comment\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(g, Graph::cycle(5));
  EXPECT_CL_ERROR(parse_dimacs("p edge 2 1\ne 1 3\n"), ErrorCode::ParseError);
  EXPECT_CL_ERROR(parse_dimacs("x 1 2\n"), ErrorCode::ParseError);
}
