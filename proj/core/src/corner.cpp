#include "cornerlab/corner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cornerlab/errors.hpp"
#include "cornerlab/random.hpp"

namespace cornerlab {

namespace {

constexpr double kInsideMargin = -1e-7;
constexpr double kOutsideMargin = -1e-5;

void require_dim(const HermitianMatrix& a, int d, const char* what) {
  if (a.dim() != d) fail(ErrorCode::DimensionMismatch, std::string(what) + ": dimension mismatch");
}

Tri decide(const OptResult& r) {
  if (r.value.value() >= kInsideMargin) return Tri::Inside;
  if (r.upper_bound <= kOutsideMargin) return Tri::Outside;
  return Tri::Indeterminate;
}

}  // namespace

GeneratedCorner::GeneratedCorner(int dim, std::vector<HermitianMatrix> generators)
    : dim_(dim), gens_(std::move(generators)) {
  if (dim_ < 1) fail(ErrorCode::DimensionMismatch, "corner dimension must be >= 1");
  if (gens_.empty()) fail(ErrorCode::InvalidArgument, "corner needs at least one generator");
  for (const auto& g : gens_) {
    require_dim(g, dim_, "corner generator");
    require_psd(g, "corner generator", 1e-10 * std::max(1.0, g.frobenius_norm()));
  }
}

GeneratedCorner GeneratedCorner::unit_ball(int d) {
  return GeneratedCorner(d, {HermitianMatrix::identity(d)});
}

GeneratedCorner GeneratedCorner::unit_trace(int d) {
  std::vector<HermitianMatrix> g;
  for (int i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    g.push_back(HermitianMatrix::diagonal(e));
  }
  return GeneratedCorner(d, std::move(g));
}

GeneratedCorner GeneratedCorner::zero(int d) { return GeneratedCorner(d, {HermitianMatrix::zero(d)}); }

GeneratedCorner GeneratedCorner::from_diagonals(const std::vector<std::vector<double>>& vectors) {
  if (vectors.empty()) fail(ErrorCode::InvalidArgument, "no generator vectors");
  std::vector<HermitianMatrix> g;
  for (const auto& v : vectors) g.push_back(HermitianMatrix::diagonal(v));
  return GeneratedCorner(static_cast<int>(vectors.front().size()), std::move(g));
}

bool GeneratedCorner::all_diagonal(double tol) const {
  for (const auto& g : gens_) {
    CMatrix off = g.mat();
    off.diagonal().setZero();
    if (off.norm() > tol) return false;
  }
  return true;
}

DiagonalCorner::DiagonalCorner(Kind kind, int dim, std::vector<std::vector<double>> data)
    : kind_(kind), dim_(dim), data_(std::move(data)) {
  if (dim_ < 1) fail(ErrorCode::DimensionMismatch, "diagonal corner dimension must be >= 1");
  if (kind_ == Kind::VGen && data_.empty()) {
    fail(ErrorCode::InvalidArgument, "VGen corner needs at least one vector");
  }
  for (const auto& v : data_) {
    if (static_cast<int>(v.size()) != dim_) {
      fail(ErrorCode::DimensionMismatch, "diagonal corner vector has wrong length");
    }
    for (double x : v) {
      if (!(x >= 0.0)) fail(ErrorCode::InvalidArgument, "diagonal corner entries must be nonnegative");
    }
  }
}

DiagonalCorner DiagonalCorner::vgen(int dim, std::vector<std::vector<double>> vectors) {
  return DiagonalCorner(Kind::VGen, dim, std::move(vectors));
}

DiagonalCorner DiagonalCorner::hpoly(int dim, std::vector<std::vector<double>> rows) {
  return DiagonalCorner(Kind::HPoly, dim, std::move(rows));
}

bool DiagonalCorner::contains(const std::vector<double>& x, double tol) const {
  if (static_cast<int>(x.size()) != dim_) fail(ErrorCode::DimensionMismatch, "point has wrong length");
  for (double xi : x)
    if (xi < -tol) return false;
  if (kind_ == Kind::HPoly) {
    for (const auto& a : data_) {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) s += a[i] * std::max(0.0, x[i]);
      if (s > 1.0 + tol) return false;
    }
    return true;
  }
  // exists lambda in the simplex with sum_k lambda_k v_k >= x
  const int m = static_cast<int>(data_.size());
  std::vector<LinearConstraint> rows;
  for (int i = 0; i < dim_; ++i) {
    if (x[i] <= tol) continue;
    LinearConstraint r;
    r.coeffs.resize(m);
    for (int k = 0; k < m; ++k) r.coeffs[k] = data_[k][i];
    r.rel = Relation::GreaterEq;
    r.rhs = x[i] - tol;
    rows.push_back(std::move(r));
  }
  LinearConstraint simplex;
  simplex.coeffs.assign(m, 1.0);
  simplex.rel = Relation::Equal;
  simplex.rhs = 1.0;
  rows.push_back(std::move(simplex));
  const auto res = lp_solve(std::vector<double>(m, 0.0), rows, Sense::Maximize);
  return res.status == Status::Converged;
}

DiagonalCorner DiagonalCorner::flat_anti_blocker() const {
  return DiagonalCorner(kind_ == Kind::VGen ? Kind::HPoly : Kind::VGen, dim_, data_);
}

GeneratedCorner DiagonalCorner::lift() const {
  if (kind_ != Kind::VGen) {
    fail(ErrorCode::RepresentationMismatch, "lifting needs a vertex (VGen) representation");
  }
  return GeneratedCorner::from_diagonals(data_);
}

double gamma(const GeneratedCorner& corner) {
  double g = 0.0;
  for (const auto& gi : corner.generators()) g = std::max(g, gi.trace());
  return g;
}

OptResult n_param_certified(const GeneratedCorner& corner, const SolverConfig& cfg) {
  // Tighter than cfg.tol: the dual state also certifies gamma(A#) ~ 1/N,
  // whose error scales like gap / N^2.
  SolverConfig c = cfg;
  c.tol = cfg.tol * 1e-2;
  return max_min_eig_simplex(corner.generators(), HermitianMatrix::zero(corner.dim()), c);
}

double n_param(const GeneratedCorner& corner, const SolverConfig& cfg) {
  return std::max(0.0, n_param_certified(corner, cfg).value.value());
}

ExtReal m_param(const GeneratedCorner& corner, const SolverConfig& cfg) {
  return cone_cover_value(corner.generators(), HermitianMatrix::identity(corner.dim()), cfg);
}

ParamReport param_report(const GeneratedCorner& corner, const SolverConfig& cfg) {
  ParamReport rep;
  rep.gamma = gamma(corner);
  for (std::size_t i = 0; i < corner.size(); ++i) {
    if (corner.generators()[i].trace() == rep.gamma) {
      rep.gamma_argmax.assign(corner.size(), 0.0);
      rep.gamma_argmax[i] = 1.0;
      break;
    }
  }
  const auto n = n_param_certified(corner, cfg);
  rep.n_param = std::max(0.0, n.value.value());
  rep.n_gap = n.gap;
  rep.n_weights = n.point.weights();
  rep.m_param = m_param(corner, cfg);
  rep.ill_conditioned = rep.n_param > 0.0 && rep.n_param < 1e-6;
  rep.gamma_ab = ExtReal::pos_inf();
  if (n.dual_state && n.upper_bound > 1e-12 && rep.m_param.is_finite()) {
    const auto t = ab_ray_scale(corner, *n.dual_state);
    if (t.is_finite()) {
      rep.ab_point = *n.dual_state * t.value();
      rep.gamma_ab = rep.ab_point->trace();
    }
  }
  return rep;
}

Tri membership(const GeneratedCorner& corner, const HermitianMatrix& a, const SolverConfig& cfg) {
  require_dim(a, corner.dim(), "membership");
  if (min_eigenvalue(a) < -1e-10 * std::max(1.0, a.frobenius_norm())) return Tri::Outside;
  EarlyStop stop;
  stop.accept_at = kInsideMargin;
  stop.reject_at = kOutsideMargin;
  const auto r = max_min_eig_simplex(corner.generators(), a * -1.0, cfg, stop);
  return decide(r);
}

bool ab_membership(const GeneratedCorner& corner, const HermitianMatrix& n) {
  require_dim(n, corner.dim(), "ab_membership");
  if (!is_psd(n, 1e-10 * std::max(1.0, n.frobenius_norm()))) return false;
  for (const auto& g : corner.generators()) {
    if (inner(n, g) > 1.0 + 1e-9) return false;
  }
  return true;
}

ExtReal ab_ray_scale(const GeneratedCorner& corner, const HermitianMatrix& n0) {
  require_dim(n0, corner.dim(), "ab_ray_scale");
  if (n0.frobenius_norm() <= 0.0) fail(ErrorCode::InvalidArgument, "ab_ray_scale: zero ray");
  require_psd(n0, "ray", 1e-10 * std::max(1.0, n0.frobenius_norm()));
  double mx = 0.0;
  for (const auto& g : corner.generators()) mx = std::max(mx, inner(n0, g));
  if (mx <= 1e-15 * n0.frobenius_norm()) return ExtReal::pos_inf();
  return 1.0 / mx;
}

RayCheckReport reflexivity_ray_check(const GeneratedCorner& corner,
                                     const std::vector<HermitianMatrix>& rays,
                                     const SolverConfig& cfg) {
  const double n = n_param(corner, cfg);
  if (n < 1e-6) fail(ErrorCode::EmptyInterior, "reflexivity check needs a corner with N > 1e-6");
  const double g = gamma(corner);
  RayCheckReport rep;
  rep.trials = static_cast<int>(rays.size());
  for (const auto& ray : rays) {
    require_psd(ray, "ray");
    // t N0 in A forces t Tr N0 <= gamma; t N0 <= N I suffices for t N0 in A.
    double lo = n / max_eigenvalue(ray);
    double hi = g / ray.trace();
    // Bisect on the sign of the feasibility value itself. The Inside/Outside
    // margins of membership() would bias t_a upward on flat boundaries.
    const auto outside = [&](double t) {
      EarlyStop stop;
      stop.accept_at = 0.0;
      stop.reject_at = 0.0;
      const auto r = max_min_eig_simplex(corner.generators(), ray * -t, cfg, stop);
      if (r.value.value() >= 0.0) return false;
      if (r.upper_bound < 0.0) return true;
      return r.value.value() + r.upper_bound < 0.0;
    };
    if (!outside(hi)) lo = hi;
    while (hi - lo > 1e-7 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (outside(mid)) hi = mid;
      else lo = mid;
    }
    const double t_a = 0.5 * (lo + hi);
    const ExtReal cover = cone_cover_value(corner.generators(), ray, cfg);
    const double t_aa = cover.is_finite() && cover.value() > 0.0 ? 1.0 / cover.value() : 0.0;
    rep.t_a.push_back(t_a);
    rep.t_aa.push_back(t_aa);
    const double scale = std::max(t_a, t_aa);
    const double disc = scale > 0.0 ? std::abs(t_a - t_aa) / scale : 0.0;
    rep.max_discrepancy = std::max(rep.max_discrepancy, disc);
  }
  rep.passed = rep.max_discrepancy <= 1e-3;
  return rep;
}

RayCheckReport reflexivity_ray_check(const GeneratedCorner& corner, int trials,
                                     const SolverConfig& cfg) {
  Rng rng(cfg.seed);
  std::vector<HermitianMatrix> rays;
  for (int k = 0; k < trials; ++k) {
    const int rank = 1 + rng.uniform_int(0, corner.dim() - 1);
    rays.push_back(random_psd(corner.dim(), rank, rng));
  }
  return reflexivity_ray_check(corner, rays, cfg);
}

HermitianMatrix diag_expectation(const HermitianMatrix& a, const std::optional<CMatrix>& basis) {
  const int d = a.dim();
  if (!basis) {
    CMatrix out = CMatrix::Zero(d, d);
    out.diagonal() = a.mat().diagonal();
    return hermitian_part(out);
  }
  const CMatrix& v = *basis;
  if (v.rows() != d || v.cols() != d) fail(ErrorCode::DimensionMismatch, "basis must be d x d");
  if ((v.adjoint() * v - CMatrix::Identity(d, d)).norm() > 1e-10) {
    fail(ErrorCode::NonOrthonormalBasis, "basis columns are not orthonormal");
  }
  const CMatrix inner_vals = v.adjoint() * a.mat() * v;
  CMatrix diag = CMatrix::Zero(d, d);
  diag.diagonal() = inner_vals.diagonal();
  return hermitian_part(v * diag * v.adjoint());
}

Tri lift_membership(const DiagonalCorner& diag, const HermitianMatrix& m, LiftKind kind,
                    const SolverConfig& cfg) {
  require_dim(m, diag.dim(), "lift_membership");
  if (kind == LiftKind::MinLift) {
    if (diag.kind() != DiagonalCorner::Kind::VGen) {
      fail(ErrorCode::RepresentationMismatch, "MinLift needs a VGen diagonal corner");
    }
    return membership(diag.lift(), m, cfg);
  }
  if (min_eigenvalue(m) < -1e-10 * std::max(1.0, m.frobenius_norm())) return Tri::Outside;
  return diag.contains(m.diag()) ? Tri::Inside : Tri::Outside;
}

bool is_projection(const HermitianMatrix& p, double tol) {
  return (p.mat() * p.mat() - p.mat()).norm() <= tol;
}

HermitianMatrix snap_projection(const HermitianMatrix& p) {
  const auto sd = eigh(p);
  return sd.apply([](double x) { return x > 0.5 ? 1.0 : 0.0; });
}

ExtReal gamma_f_cover(const GeneratedCorner& proj_corner, const SolverConfig& cfg) {
  std::vector<HermitianMatrix> snapped;
  for (const auto& g : proj_corner.generators()) {
    if (!is_projection(g)) fail(ErrorCode::NotProjection, "gamma_f_cover: generator is not a projection");
    snapped.push_back(snap_projection(g));
  }
  return m_param(GeneratedCorner(proj_corner.dim(), std::move(snapped)), cfg);
}

GeneratedCorner random_standard_corner(int d, int m, Rng& rng) {
  if (d < 1 || m < 1) fail(ErrorCode::InvalidArgument, "random_standard_corner: need d, m >= 1");
  for (;;) {
    std::vector<HermitianMatrix> g;
    HermitianMatrix sum = HermitianMatrix::zero(d);
    for (int i = 0; i < m; ++i) {
      g.push_back(random_psd(d, rng.uniform_int(1, d), rng, 0.5 + rng.uniform()));
      sum += g.back();
    }
    if (min_eigenvalue(sum) >= 1e-3) return GeneratedCorner(d, std::move(g));
  }
}

}  // namespace cornerlab
