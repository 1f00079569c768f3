#include "cornerlab/tensorprod.hpp"

#include <algorithm>
#include <cmath>

#include "cornerlab/errors.hpp"
#include "cornerlab/random.hpp"

namespace cornerlab {

namespace {

constexpr int kMaxProductDim = 64;

// Anti-blocker boundary points along a ray list; unbounded rays are kept with
// scale 0 and reported separately.
struct AbPoint {
  HermitianMatrix n;
  bool unbounded = false;
};

std::vector<AbPoint> boundary_points(const GeneratedCorner& c, int rays, Rng& rng) {
  const int d = c.dim();
  std::vector<HermitianMatrix> dirs{HermitianMatrix::identity(d) * (1.0 / d)};
  for (int i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    dirs.push_back(HermitianMatrix::diagonal(e));
  }
  for (int k = 0; k < rays; ++k) dirs.push_back(random_psd(d, 1 + rng.uniform_int(0, d - 1), rng));
  std::vector<AbPoint> out;
  for (const auto& r : dirs) {
    const ExtReal t = ab_ray_scale(c, r);
    if (t.is_finite()) out.push_back({r * t.value(), false});
    else out.push_back({r, true});
  }
  return out;
}

bool is_diagonal(const HermitianMatrix& a) {
  CMatrix off = a.mat();
  off.diagonal().setZero();
  return off.norm() <= 1e-12;
}

}  // namespace

GeneratedCorner max_tensor(const GeneratedCorner& a, const GeneratedCorner& b) {
  if (a.dim() * b.dim() > kMaxProductDim) fail(ErrorCode::DimOverflow, "product dimension exceeds 64");
  std::vector<HermitianMatrix> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(kron(x, y));
  return GeneratedCorner(a.dim() * b.dim(), std::move(g));
}

MinTensorVerdict min_tensor_membership(const GeneratedCorner& a, const GeneratedCorner& b,
                                       const HermitianMatrix& m, const SolverConfig& cfg, int rays) {
  if (m.dim() != a.dim() * b.dim()) fail(ErrorCode::DimensionMismatch, "M has the wrong dimension");
  require_psd(m, "min_tensor_membership M", 1e-10 * std::max(1.0, m.frobenius_norm()));
  Rng rng(cfg.seed);
  const auto pa = boundary_points(a, rays, rng);
  const auto pb = boundary_points(b, rays, rng);
  MinTensorVerdict v;
  for (const auto& x : pa)
    for (const auto& y : pb) {
      const double pairing = inner(m, kron(x.n, y.n));
      // An unbounded ray admits every multiple, so any positive pairing separates.
      const bool separated = (x.unbounded || y.unbounded) ? pairing > 1e-9 : pairing > 1.0 + 1e-9;
      if (!x.unbounded && !y.unbounded) v.max_pairing = std::max(v.max_pairing, pairing);
      if (separated) {
        v.verdict = Tri::Outside;
        v.approximate = false;
        v.witness_a = x.n;
        v.witness_b = y.n;
        return v;
      }
    }
  return v;
}

HermitianMatrix partial_trace_second(const HermitianMatrix& rho, int d1, int d2) {
  if (rho.dim() != d1 * d2) fail(ErrorCode::DimensionMismatch, "partial trace: dimension mismatch");
  CMatrix out = CMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) out(i, j) += rho(i * d2 + k, j * d2 + k);
  return hermitian_part(out);
}

HermitianMatrix partial_trace_first(const HermitianMatrix& rho, int d1, int d2) {
  if (rho.dim() != d1 * d2) fail(ErrorCode::DimensionMismatch, "partial trace: dimension mismatch");
  CMatrix out = CMatrix::Zero(d2, d2);
  for (int k = 0; k < d2; ++k)
    for (int l = 0; l < d2; ++l)
      for (int i = 0; i < d1; ++i) out(k, l) += rho(i * d2 + k, i * d2 + l);
  return hermitian_part(out);
}

ProductEntropyReport product_entropy_check(const GeneratedCorner& a, const GeneratedCorner& b,
                                           const State& rho, const SolverConfig& cfg) {
  const int d1 = a.dim();
  const int d2 = b.dim();
  const State r1 = State::normalized(partial_trace_second(rho.matrix(), d1, d2));
  const State r2 = State::normalized(partial_trace_first(rho.matrix(), d1, d2));
  ProductEntropyReport rep;
  rep.lhs = corner_entropy(max_tensor(a, b), rho, cfg).value;
  const ExtReal h1 = corner_entropy(a, r1, cfg).value;
  const ExtReal h2 = corner_entropy(b, r2, cfg).value;
  rep.rhs = (h1.is_finite() && h2.is_finite()) ? ExtReal(h1.value() + h2.value()) : ExtReal::pos_inf();
  if (rep.rhs.is_pos_inf()) {
    rep.inequality_holds = true;
  } else {
    rep.inequality_holds = rep.lhs.is_finite() && rep.lhs.value() <= rep.rhs.value() + 1e-3;
  }
  const bool product = (rho.matrix().mat() - kron(r1.matrix(), r2.matrix()).mat()).norm() <= 1e-10;
  rep.equality_expected = product && is_diagonal(rho.matrix()) && a.all_diagonal() && b.all_diagonal();
  rep.equality_holds = rep.lhs == rep.rhs ||
                       (rep.lhs.is_finite() && rep.rhs.is_finite() &&
                        std::abs(rep.lhs.value() - rep.rhs.value()) <= 1e-3);
  return rep;
}

}  // namespace cornerlab
