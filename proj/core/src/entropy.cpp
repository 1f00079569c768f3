#include "cornerlab/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "cornerlab/errors.hpp"

namespace cornerlab {

namespace {

constexpr int kMaxColumns = 500;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void check_distribution(const std::vector<double>& p, int d) {
  if (static_cast<int>(p.size()) != d) fail(ErrorCode::DimensionMismatch, "distribution has wrong length");
  double s = 0.0;
  for (double x : p) {
    if (!(x >= -1e-12)) fail(ErrorCode::NotState, "negative probability");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-10) fail(ErrorCode::NotState, "distribution does not sum to 1");
}

}  // namespace

double von_neumann(const State& rho) {
  const auto sd = eigh(rho.matrix());
  double h = 0.0;
  for (int i = 0; i < sd.eigenvalues.size(); ++i) h -= xlogx(std::max(0.0, sd.eigenvalues(i)));
  return h;
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) h -= xlogx(x);
  return h;
}

ExtReal relative_entropy(const State& rho, const HermitianMatrix& sigma) {
  if (sigma.dim() != rho.dim()) fail(ErrorCode::DimensionMismatch, "relative_entropy: dimension mismatch");
  require_psd(sigma, "relative_entropy sigma", 1e-8);
  const ExtReal cross = rho_log_trace(rho, sigma);
  if (!cross.is_finite()) return ExtReal::pos_inf();
  return -von_neumann(rho) - cross.value();
}

EntropyResult corner_entropy(const GeneratedCorner& corner, const State& rho,
                             const SolverConfig& cfg) {
  if (rho.dim() != corner.dim()) fail(ErrorCode::DimensionMismatch, "corner_entropy: dimension mismatch");
  const OptResult r = entropy_min_simplex(corner.generators(), rho, cfg);
  EntropyResult out;
  out.value = r.value;
  out.gap = r.gap;
  out.iterations = r.iterations;
  out.status = r.status;
  out.weights = r.point.weights();
  if (r.minimizer) {
    out.minimizer = *r.minimizer;
  } else {
    HermitianMatrix a = HermitianMatrix::zero(corner.dim());
    for (std::size_t i = 0; i < corner.size(); ++i) a += corner.generators()[i] * r.point[i];
    out.minimizer = a;
  }
  return out;
}

MaxEntropyResult max_entropy_state(const GeneratedCorner& corner, const SolverConfig& cfg) {
  const OptResult n = n_param_certified(corner, cfg);
  if (n.value.value() <= 1e-6) fail(ErrorCode::EmptyInterior, "max_entropy_state: N <= 1e-6");
  MaxEntropyResult out;
  out.value = -std::log(n.value.value());
  // The dual state rho minimizes max_i Tr(rho G_i); Jensen then gives
  // H_A(rho) >= -log(upper bound).
  out.state = n.dual_state ? State::normalized(*n.dual_state) : State::maximally_mixed(corner.dim());
  out.attained = corner_entropy(corner, out.state, cfg).value;
  if (!out.attained.is_finite() || out.attained.value() < out.value - 1e-2) {
    fail(ErrorCode::AssertionFailed, "max_entropy_state: certificate state falls short of -log N");
  }
  return out;
}

ExtReal polytope_entropy_diag(const DiagonalCorner& poly, const std::vector<double>& p,
                              const SolverConfig& cfg) {
  if (poly.kind() != DiagonalCorner::Kind::HPoly) {
    fail(ErrorCode::RepresentationMismatch, "polytope_entropy_diag needs an HPoly corner");
  }
  cfg.validate();
  const int d = poly.dim();
  check_distribution(p, d);

  // Down-closed, so dropping coordinates outside supp(p) projects exactly.
  std::vector<int> supp;
  for (int i = 0; i < d; ++i)
    if (p[i] > 0.0) supp.push_back(i);
  const int s = static_cast<int>(supp.size());
  std::vector<std::vector<double>> rows;
  for (const auto& a : poly.data()) {
    std::vector<double> r(s);
    bool any = false;
    for (int j = 0; j < s; ++j) {
      r[j] = a[supp[j]];
      any = any || r[j] > 0.0;
    }
    if (any) rows.push_back(std::move(r));
  }
  for (int j = 0; j < s; ++j) {
    bool bounded = false;
    for (const auto& r : rows) bounded = bounded || r[j] > 0.0;
    if (!bounded) fail(ErrorCode::UnboundedDirection, "coordinate with positive weight is unbounded");
  }

  std::vector<double> q(s);
  for (int j = 0; j < s; ++j) q[j] = p[supp[j]];
  double c = 0.0;
  for (const auto& r : rows) {
    double sum = 0.0;
    for (double x : r) sum += x;
    c = std::max(c, sum);
  }
  std::vector<std::vector<double>> atoms{std::vector<double>(s, 1.0 / c)};

  std::vector<LinearConstraint> lp_rows;
  for (const auto& r : rows) lp_rows.push_back({r, Relation::LessEq, 1.0});

  SolverConfig inner = cfg;
  inner.tol = cfg.tol * 0.1;
  double value = 0.0;
  for (int round = 0; round < kMaxColumns; ++round) {
    const OptResult r = entropy_min_simplex_diag(atoms, q, inner);
    value = r.value.value();
    std::vector<double> v(s, 0.0);
    for (std::size_t k = 0; k < atoms.size(); ++k)
      for (int j = 0; j < s; ++j) v[j] += r.point[k] * atoms[k][j];
    // Linear oracle for the gradient -q/v; the gap is <q/v, x*> - 1.
    std::vector<double> obj(s);
    for (int j = 0; j < s; ++j) obj[j] = q[j] / v[j];
    const LpResult lp = lp_solve(obj, lp_rows, Sense::Maximize);
    if (lp.status != Status::Converged) fail(ErrorCode::AssertionFailed, "polytope oracle LP failed");
    if (lp.value - 1.0 <= cfg.tol) break;
    atoms.push_back(lp.x);
  }
  return value;
}

SplitReport entropy_split_check(const DiagonalCorner& diag_gen, const std::vector<double>& p,
                                const SolverConfig& cfg) {
  if (diag_gen.kind() != DiagonalCorner::Kind::VGen) {
    fail(ErrorCode::RepresentationMismatch, "entropy_split_check needs a VGen corner");
  }
  check_distribution(p, diag_gen.dim());
  for (int i = 0; i < diag_gen.dim(); ++i) {
    if (p[i] <= 0.0) continue;
    double col = 0.0;
    for (const auto& v : diag_gen.data()) col += v[i];
    if (col <= 0.0) fail(ErrorCode::EmptyInterior, "corner vanishes on a coordinate in supp(p)");
  }
  SplitReport rep;
  rep.shannon = shannon(p);
  rep.h_corner = entropy_min_simplex_diag(diag_gen.data(), p, cfg).value;
  rep.h_anti_blocker = polytope_entropy_diag(diag_gen.flat_anti_blocker(), p, cfg);
  rep.residual = std::abs(rep.shannon - rep.h_corner.value() - rep.h_anti_blocker.value());
  rep.passed = rep.residual <= 1e-3;
  return rep;
}

LowerBoundReport entropy_lower_bound_check(const GeneratedCorner& corner,
                                           const std::vector<double>& p,
                                           const SolverConfig& cfg) {
  if (!corner.all_diagonal()) {
    fail(ErrorCode::InvalidArgument, "entropy_lower_bound_check needs diagonal generators");
  }
  check_distribution(p, corner.dim());
  const State rho = State::diagonal(p);
  const double g = gamma(corner);
  LowerBoundReport rep;
  rep.h_corner = corner_entropy(corner, rho, cfg).value;
  rep.bound = shannon(p) - std::log(g);
  rep.holds = rep.h_corner.is_pos_inf() ||
              (rep.h_corner.is_finite() && rep.h_corner.value() >= rep.bound - 1e-4);
  rep.equality_predicted = membership(corner, rho.matrix() * g, cfg) == Tri::Inside;
  rep.equality_observed = rep.h_corner.is_finite() && std::abs(rep.h_corner.value() - rep.bound) <= 1e-6;
  return rep;
}

}  // namespace cornerlab
