#include <cmath>

#include <gtest/gtest.h>

#include "cornerlab/corner.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/random.hpp"
#include "oracles.hpp"
#include "testing.hpp"

using namespace cornerlab;

namespace {

CVector vec(std::initializer_list<Complex> x) {
  CVector v(static_cast<int>(x.size()));
  int i = 0;
  for (auto c : x) v(i++) = c;
  return v;
}

HermitianMatrix plus_state() { return 0.5 * HermitianMatrix::outer(vec({1, 1})); }

GeneratedCorner c5_ap() { return vp_corner(Graph::cycle(5)).lift(); }

GeneratedCorner t3_fp() {
  return GeneratedCorner(3, {(1.0 / 3) * HermitianMatrix::outer(vec({1, 1, 1}))});
}

}  // namespace

TEST(GeneratedCorner, RejectsNonPsdGenerators) {
  EXPECT_CL_ERROR(GeneratedCorner(2, {HermitianMatrix::diagonal({1, -1})}), ErrorCode::NotPSD);
  EXPECT_CL_ERROR(GeneratedCorner(2, {HermitianMatrix::identity(3)}), ErrorCode::DimensionMismatch);
}

TEST(Gamma, Examples) {
  for (int d = 1; d <= 4; ++d) {
    EXPECT_DOUBLE_EQ(gamma(GeneratedCorner::unit_ball(d)), d);
    EXPECT_DOUBLE_EQ(gamma(GeneratedCorner::unit_trace(d)), 1.0);
  }
  EXPECT_DOUBLE_EQ(gamma(c5_ap()), oracle::alpha(Graph::cycle(5)));
}

TEST(NParam, Examples) {
  const SolverConfig cfg;
  for (int d = 1; d <= 4; ++d) {
    EXPECT_NEAR(n_param(GeneratedCorner::unit_ball(d), cfg), 1.0, 1e-7);
    EXPECT_NEAR(n_param(GeneratedCorner::unit_trace(d), cfg), 1.0 / d, 1e-7);
  }
  EXPECT_NEAR(n_param(c5_ap(), cfg), 0.4, 1e-7);
}

TEST(MParam, Examples) {
  const SolverConfig cfg;
  for (int d = 1; d <= 4; ++d) {
    EXPECT_NEAR(m_param(GeneratedCorner::unit_ball(d), cfg).value(), 1.0, 1e-6);
    EXPECT_NEAR(m_param(GeneratedCorner::unit_trace(d), cfg).value(), d, 1e-6);
  }
  EXPECT_TRUE(m_param(t3_fp(), cfg).is_pos_inf());
  EXPECT_TRUE(m_param(GeneratedCorner::zero(2), cfg).is_pos_inf());
}

TEST(ParamReport, DualityOnRandomCorners) {
  Rng rng(61);
  const SolverConfig cfg;
  for (int t = 0; t < 15; ++t) {
    const GeneratedCorner c = random_standard_corner(rng.uniform_int(1, 5), rng.uniform_int(1, 6), rng);
    const ParamReport r = param_report(c, cfg);
    EXPECT_NEAR(r.m_param.value() * r.n_param, 1.0, 1e-4);
    EXPECT_NEAR(r.m_param.value(), r.gamma_ab.value(), 1e-4);
    ASSERT_TRUE(r.ab_point.has_value());
    EXPECT_TRUE(ab_membership(c, *r.ab_point));
    EXPECT_NEAR(r.ab_point->trace(), r.gamma_ab.value(), 1e-9);
  }
}

TEST(Membership, Examples) {
  const SolverConfig cfg;
  EXPECT_EQ(membership(GeneratedCorner::unit_ball(2), HermitianMatrix::zero(2), cfg), Tri::Inside);
  EXPECT_EQ(membership(GeneratedCorner::unit_ball(2), HermitianMatrix::diagonal({1, 1.1}), cfg), Tri::Outside);
  // A_{I_2} through the rank-one projectors along e1, e2 and |+>.
  const GeneratedCorner a(2, {HermitianMatrix::diagonal({1, 0}), HermitianMatrix::diagonal({0, 1}),
                              HermitianMatrix::outer(vec({1, 1})) * 0.5});
  EXPECT_EQ(membership(a, 0.5 * plus_state(), cfg), Tri::Inside);
  EXPECT_EQ(membership(a, plus_state() + HermitianMatrix::diagonal({0.05, 0}), cfg), Tri::Outside);
  EXPECT_EQ(membership(a, HermitianMatrix::diagonal({1, -0.1}), cfg), Tri::Outside);
}

TEST(Membership, HereditaryOnRandomCorners) {
  Rng rng(67);
  const SolverConfig cfg;
  for (int t = 0; t < 10; ++t) {
    const int d = rng.uniform_int(1, 4);
    const GeneratedCorner c = random_standard_corner(d, rng.uniform_int(1, 4), rng);
    const auto w = random_distribution(static_cast<int>(c.size()), rng);
    HermitianMatrix a = HermitianMatrix::zero(d);
    for (std::size_t i = 0; i < w.size(); ++i) a += w[i] * c.generators()[i];
    EXPECT_EQ(membership(c, a, cfg), Tri::Inside);
    EXPECT_EQ(membership(c, 0.7 * a, cfg), Tri::Inside);
    // Every member has trace <= gamma.
    EXPECT_EQ(membership(c, ((gamma(c) + 0.1) / a.trace()) * a, cfg), Tri::Outside);
  }
}

TEST(AbMembership, Examples) {
  for (int d = 1; d <= 3; ++d) {
    EXPECT_TRUE(ab_membership(GeneratedCorner::unit_ball(d), (1.0 / d) * HermitianMatrix::identity(d)));
    EXPECT_TRUE(ab_membership(GeneratedCorner::zero(d), 100.0 * HermitianMatrix::identity(d)));
    EXPECT_FALSE(ab_membership(GeneratedCorner::unit_trace(d),
                               HermitianMatrix::identity(d) + HermitianMatrix::diagonal(std::vector<double>(d, 0.0)) +
                                   0.1 * HermitianMatrix::outer(CVector::Unit(d, 0))));
  }
  EXPECT_FALSE(ab_membership(GeneratedCorner::unit_ball(2), HermitianMatrix::diagonal({1, -0.1})));
}

TEST(AbMembership, AntitoneInGenerators) {
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    const int d = rng.uniform_int(1, 4);
    const GeneratedCorner small = random_standard_corner(d, rng.uniform_int(1, 3), rng);
    auto g = small.generators();
    g.push_back(random_psd(d, rng.uniform_int(1, d), rng));
    const GeneratedCorner big(d, g);
    const HermitianMatrix n0 = random_psd(d, rng.uniform_int(1, d), rng);
    const HermitianMatrix n = (0.999 * ab_ray_scale(big, n0).value()) * n0;
    ASSERT_TRUE(ab_membership(big, n));
    EXPECT_TRUE(ab_membership(small, n));
  }
}

TEST(AbRayScale, Examples) {
  for (int d = 1; d <= 3; ++d) {
    EXPECT_NEAR(ab_ray_scale(GeneratedCorner::unit_ball(d), HermitianMatrix::identity(d)).value(), 1.0 / d, 1e-15);
    EXPECT_NEAR(ab_ray_scale(GeneratedCorner::unit_trace(d), HermitianMatrix::outer(CVector::Unit(d, 0))).value(),
                1.0, 1e-15);
  }
  EXPECT_TRUE(ab_ray_scale(t3_fp(), HermitianMatrix::outer(vec({1, -1, 0}))).is_pos_inf());
  EXPECT_CL_ERROR(ab_ray_scale(t3_fp(), HermitianMatrix::diagonal({1, 0, -1})), ErrorCode::NotPSD);
}

TEST(RayCheck, Examples) {
  const SolverConfig cfg;
  const auto b = reflexivity_ray_check(GeneratedCorner::unit_ball(2), {HermitianMatrix::identity(2)}, cfg);
  EXPECT_NEAR(b.t_a[0], 1.0, 1e-6);
  EXPECT_NEAR(b.t_aa[0], 1.0, 1e-6);
  const auto a = reflexivity_ray_check(GeneratedCorner::unit_trace(2), {HermitianMatrix::identity(2)}, cfg);
  EXPECT_NEAR(a.t_a[0], 0.5, 1e-6);
  EXPECT_NEAR(a.t_aa[0], 0.5, 1e-6);
  EXPECT_TRUE(a.passed);
}

TEST(RayCheck, RandomCornerFiftyRays) {
  Rng rng(73);
  SolverConfig cfg;
  cfg.seed = 5;
  const auto r = reflexivity_ray_check(random_standard_corner(3, 3, rng), 50, cfg);
  EXPECT_EQ(r.trials, 50);
  EXPECT_LE(r.max_discrepancy, 1e-3);
  EXPECT_TRUE(r.passed);
}

TEST(RayCheck, EmptyInterior) {
  EXPECT_CL_ERROR(reflexivity_ray_check(GeneratedCorner(2, {HermitianMatrix::diagonal({1, 0})}), 3, {}),
                  ErrorCode::EmptyInterior);
}

TEST(DiagExpectation, Examples) {
  const HermitianMatrix d = HermitianMatrix::diagonal({0.3, 2.0});
  EXPECT_LE((diag_expectation(d) - d).frobenius_norm(), 1e-15);
  EXPECT_LE((diag_expectation(plus_state()) - 0.5 * HermitianMatrix::identity(2)).frobenius_norm(), 1e-15);
  // In the |+>, |-> frame the same state is already diagonal.
  CMatrix f(2, 2);
  f << 1, 1, 1, -1;
  f /= std::sqrt(2.0);
  EXPECT_LE((diag_expectation(plus_state(), f) - plus_state()).frobenius_norm(), 1e-14);
  CMatrix bad = CMatrix::Identity(2, 2) * 2.0;
  EXPECT_CL_ERROR(diag_expectation(plus_state(), bad), ErrorCode::NonOrthonormalBasis);
}

TEST(DiagExpectation, ContractionForDiagonalCorners) {
  Rng rng(79);
  const SolverConfig cfg;
  for (int t = 0; t < 10; ++t) {
    const int d = rng.uniform_int(2, 4);
    std::vector<std::vector<double>> v(3, std::vector<double>(d));
    for (auto& x : v)
      for (auto& y : x) y = rng.uniform();
    const GeneratedCorner c = GeneratedCorner::from_diagonals(v);
    // rank-one point below a generator: sqrt(G) u u* sqrt(G) with |u| <= 1.
    const auto root = eigh(c.generators()[0]).apply([](double x) { return std::sqrt(std::max(x, 0.0)); });
    const HermitianMatrix m = hermitian_part(root.mat() * HermitianMatrix::outer(random_unit_vector(d, rng)).mat() *
                                             root.mat());
    ASSERT_EQ(membership(c, m, cfg), Tri::Inside);
    EXPECT_EQ(membership(c, diag_expectation(m), cfg), Tri::Inside);
  }
}

TEST(LiftMembership, Examples) {
  const SolverConfig cfg;
  const DiagonalCorner vp_k2 = vp_corner(Graph::complete(2));
  EXPECT_EQ(lift_membership(vp_k2, plus_state(), LiftKind::MaxLift, cfg), Tri::Inside);
  EXPECT_EQ(lift_membership(vp_k2, plus_state(), LiftKind::MinLift, cfg), Tri::Outside);
  EXPECT_EQ(lift_membership(vp_k2, HermitianMatrix::zero(2), LiftKind::MaxLift, cfg), Tri::Inside);
  EXPECT_EQ(lift_membership(vp_k2, HermitianMatrix::zero(2), LiftKind::MinLift, cfg), Tri::Inside);
  // HPoly supports the max lift only.
  const DiagonalCorner cube = DiagonalCorner::hpoly(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(lift_membership(cube, plus_state(), LiftKind::MaxLift, cfg), Tri::Inside);
  EXPECT_CL_ERROR(lift_membership(cube, plus_state(), LiftKind::MinLift, cfg), ErrorCode::RepresentationMismatch);
}

TEST(DiagonalCorner, ContainsAndAntiBlocker) {
  const DiagonalCorner vp = vp_corner(Graph::cycle(5));
  EXPECT_TRUE(vp.contains({0.4, 0.4, 0.4, 0.4, 0.4}));
  EXPECT_FALSE(vp.contains({0.5, 0.5, 0.5, 0.5, 0.5}));
  EXPECT_TRUE(vp.contains({1, 0, 1, 0, 0}));
  EXPECT_FALSE(vp.contains({1, 1, 0, 0, 0}));
  const DiagonalCorner flat = vp.flat_anti_blocker();
  EXPECT_EQ(flat.kind(), DiagonalCorner::Kind::HPoly);
  EXPECT_TRUE(flat.contains({0.5, 0.5, 0.5, 0.5, 0.5}));
  EXPECT_FALSE(flat.contains({1, 0, 1, 0, 0}));
  EXPECT_CL_ERROR(flat.lift(), ErrorCode::RepresentationMismatch);
}

TEST(GammaFCover, Examples) {
  const SolverConfig cfg;
  for (int d = 1; d <= 4; ++d) {
    EXPECT_NEAR(gamma_f_cover(GeneratedCorner::unit_ball(d), cfg).value(), 1.0, 1e-6);
    EXPECT_NEAR(gamma_f_cover(GeneratedCorner::unit_trace(d), cfg).value(), d, 1e-6);
  }
  EXPECT_NEAR(gamma_f_cover(c5_ap(), cfg).value(), 2.5, 1e-6);
  EXPECT_CL_ERROR(gamma_f_cover(GeneratedCorner(2, {HermitianMatrix::diagonal({0.5, 1})}), cfg),
                  ErrorCode::NotProjection);
}

TEST(Projection, SnapAndTest) {
  EXPECT_TRUE(is_projection(plus_state()));
  EXPECT_FALSE(is_projection(plus_state() * 2.0));
  const HermitianMatrix noisy = HermitianMatrix::diagonal({1 + 1e-10, 1e-10});
  EXPECT_LE((snap_projection(noisy) - HermitianMatrix::diagonal({1, 0})).frobenius_norm(), 1e-15);
}

TEST(Parameters, PerturbationStability) {
  Rng rng(83);
  const SolverConfig cfg;
  // M = 1/N moves by about M^2 |dN|; keep M <= 10 so 1e-4 stays below 1e-2.
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
    EXPECT_NEAR(gamma(c), gamma(c2), 1e-2);
    EXPECT_NEAR(n_param(c, cfg), n_param(c2, cfg), 1e-2);
    EXPECT_NEAR(m_param(c, cfg).value(), m_param(c2, cfg).value(), 1e-2);
  }
}
