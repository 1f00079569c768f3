#include "cornerlab/optcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "cornerlab/errors.hpp"

namespace cornerlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMixEps = 1e-9;
// Barrier path: re-center until the Newton decrement drops below kCenterTol,
// then shrink mu by kMuFactor.
constexpr double kCenterTol = 1e-7;
constexpr double kMuFactor = 0.05;

void check_dims(const std::vector<HermitianMatrix>& mats, int d, const char* what) {
  if (mats.empty()) fail(ErrorCode::InvalidArgument, std::string(what) + ": empty generator list");
  for (const auto& m : mats) {
    if (m.dim() != d) fail(ErrorCode::DimensionMismatch, std::string(what) + ": dimension mismatch");
  }
}

HermitianMatrix combine(const std::vector<HermitianMatrix>& f, const std::vector<double>& w) {
  CMatrix x = CMatrix::Zero(f[0].dim(), f[0].dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (w[i] != 0.0) x += w[i] * f[i].mat();
  }
  return hermitian_part(x);
}

std::vector<double> clean_simplex(std::vector<double> w) {
  double s = 0.0;
  for (auto& x : w) {
    if (x < 0.0) x = 0.0;
    s += x;
  }
  if (s <= 0.0) return std::vector<double>(w.size(), 1.0 / static_cast<double>(w.size()));
  for (auto& x : w) x /= s;
  return w;
}

// ---------------------------------------------------------------------------
// max_lambda lambda_min(C + sum lambda_i F_i) by a log-barrier path-following
// method on (lambda, t):
//   maximize t + mu (log det(X(lambda) - tI) + sum_i log lambda_i),  sum lambda = 1.
// Certificates: the lower bound is lambda_min(X(lambda)) at the iterate; the
// state rho = S^{-1}/Tr S^{-1} (S = X - tI) gives the upper bound
// <rho,C> + max_i <rho,F_i>, valid for every state.

class BarrierSolver {
 public:
  BarrierSolver(const std::vector<HermitianMatrix>& f, const HermitianMatrix& c)
      : f_(f), c_(c), m_(static_cast<int>(f.size())), d_(c.dim()) {}

  OptResult solve(const SolverConfig& cfg, const EarlyStop& stop) {
    std::vector<double> lam(m_, 1.0 / m_);
    if (m_ == 1) return finish_single(lam);

    auto sd0 = eigh(x_of(lam));
    double scale = 1.0 + std::abs(sd0.max()) + std::abs(sd0.min());
    for (const auto& fi : f_) scale = std::max(scale, fi.frobenius_norm());
    double t = sd0.min() - 0.5 * scale;
    double mu = scale / (d_ + m_);
    record(lam, sd0);
    update_upper(lam, t);

    int newton_steps = 0;
    const int max_steps = std::max(50, std::min(cfg.max_iters, 2000));
    bool done = false;
    while (!done && newton_steps < max_steps) {
      // Centering for the current mu.
      for (int inner = 0; inner < 60 && newton_steps < max_steps; ++inner) {
        ++newton_steps;
        const double decrement = newton_step(lam, t, mu);
        if (stop_now(stop)) {
          done = true;
          break;
        }
        if (decrement < kCenterTol) break;
      }
      if (done) break;
      if (best_ub_ - best_lb_ <= cfg.tol) break;
      if (mu < 1e-17 * scale) break;  // numerical floor
      mu *= kMuFactor;
    }
    return result(newton_steps, cfg, stop);
  }

 private:
  HermitianMatrix x_of(const std::vector<double>& lam) const { return c_ + combine(f_, lam); }

  bool stop_now(const EarlyStop& stop) const {
    return best_lb_ >= stop.accept_at || best_ub_ <= stop.reject_at;
  }

  void record(const std::vector<double>& lam, const SpectralDecomposition& sd) {
    if (sd.min() > best_lb_) {
      best_lb_ = sd.min();
      best_lam_ = lam;
      best_vec_ = sd.eigenvectors.col(0);
    }
    if (best_ub_ == kInf) consider_state(HermitianMatrix::outer(sd.eigenvectors.col(0)));
  }

  void consider_state(const HermitianMatrix& rho) {
    double mx = -kInf;
    for (const auto& fi : f_) mx = std::max(mx, inner(rho, fi));
    const double ub = inner(rho, c_) + mx;
    if (ub < best_ub_) {
      best_ub_ = ub;
      best_rho_ = rho;
    }
  }

  void update_upper(const std::vector<double>& lam, double t) {
    const HermitianMatrix s = x_of(lam) - HermitianMatrix::identity(d_) * t;
    const auto sd = eigh(s);
    if (sd.min() <= 0.0) return;
    HermitianMatrix inv = sd.apply([](double x) { return 1.0 / x; });
    consider_state(inv * (1.0 / inv.trace()));
  }

  // One damped Newton step; returns the Newton decrement.
  double newton_step(std::vector<double>& lam, double& t, double mu) {
    const HermitianMatrix x = x_of(lam);
    const HermitianMatrix s = x - HermitianMatrix::identity(d_) * t;
    const auto sd = eigh(s);
    const Eigen::VectorXd inv_eig = sd.eigenvalues.cwiseInverse();
    const CMatrix sinv = sd.eigenvectors * inv_eig.cast<Complex>().asDiagonal() * sd.eigenvectors.adjoint();
    const CMatrix sinv2 = sinv * sinv;
    const double tr_sinv = inv_eig.sum();

    // Certificates at the current iterate.
    {
      SpectralDecomposition sx{sd.eigenvalues.array() + t, sd.eigenvectors};
      record(lam, sx);
      consider_state(hermitian_part(sinv / tr_sinv));
    }

    const int n = m_ + 1;
    std::vector<CMatrix> k(m_);
    Eigen::VectorXd grad(n);
    Eigen::MatrixXd hess(n, n);
    for (int i = 0; i < m_; ++i) {
      k[i] = sinv * f_[i].mat();
      grad(i) = mu * (k[i].trace().real() + 1.0 / lam[i]);
    }
    grad(m_) = 1.0 - mu * tr_sinv;
    for (int i = 0; i < m_; ++i) {
      for (int j = i; j < m_; ++j) {
        // Tr(K_i K_j) = sum_ab K_i(a,b) K_j(b,a)
        const double v = (k[i].array() * k[j].transpose().array()).sum().real();
        hess(i, j) = hess(j, i) = -mu * v;
      }
      hess(i, i) -= mu / (lam[i] * lam[i]);
      const double v = (sinv2 * f_[i].mat()).trace().real();
      hess(i, m_) = hess(m_, i) = mu * v;
    }
    hess(m_, m_) = -mu * sinv2.trace().real();

    // KKT system for the equality sum lambda = 1.
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + 1, n + 1);
    kkt.topLeftCorner(n, n) = hess;
    for (int i = 0; i < m_; ++i) kkt(i, n) = kkt(n, i) = 1.0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs.head(n) = -grad;
    const Eigen::VectorXd sol = kkt.partialPivLu().solve(rhs);
    Eigen::VectorXd dz = sol.head(n);
    if (!dz.allFinite()) return 0.0;
    const double decrement = std::sqrt(std::max(0.0, -dz.dot(hess * dz)));

    // Fraction-to-boundary for lambda, then backtracking on the barrier objective.
    double step = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (dz(i) < 0.0) step = std::min(step, -0.99 * lam[i] / dz(i));
    }
    const double phi0 = t + mu * barrier(sd.eigenvalues, lam);
    const double slope = grad.dot(dz);
    std::vector<double> trial(m_);
    for (int tries = 0; tries < 60; ++tries, step *= 0.5) {
      for (int i = 0; i < m_; ++i) trial[i] = lam[i] + step * dz(i);
      const double t_new = t + step * dz(m_);
      bool ok = true;
      for (double v : trial)
        if (!(v > 0.0)) ok = false;
      if (!ok) continue;
      const auto sd_new = eigh(x_of(trial) - HermitianMatrix::identity(d_) * t_new);
      if (!(sd_new.min() > 0.0)) continue;
      const double phi = t_new + mu * barrier(sd_new.eigenvalues, trial);
      if (phi >= phi0 + 1e-4 * step * slope || step < 1e-12) {
        lam = trial;
        t = t_new;
        return decrement;
      }
    }
    return 0.0;
  }

  static double barrier(const Eigen::VectorXd& s_eig, const std::vector<double>& lam) {
    double b = 0.0;
    for (Eigen::Index i = 0; i < s_eig.size(); ++i) b += std::log(s_eig(i));
    for (double v : lam) b += std::log(v);
    return b;
  }

  OptResult finish_single(const std::vector<double>& lam) {
    const auto sd = eigh(x_of(lam));
    record(lam, sd);
    OptResult res;
    res.value = best_lb_;
    res.point = SimplexPoint(best_lam_);
    res.gap = std::max(0.0, best_ub_ - best_lb_);
    res.upper_bound = best_ub_;
    res.iterations = 0;
    res.status = Status::Converged;
    res.min_eigvec = best_vec_;
    res.dual_state = best_rho_;
    return res;
  }

  OptResult result(int iterations, const SolverConfig& cfg, const EarlyStop& stop) {
    OptResult res;
    res.value = best_lb_;
    res.point = SimplexPoint(clean_simplex(best_lam_));
    res.gap = std::max(0.0, best_ub_ - best_lb_);
    res.upper_bound = best_ub_;
    res.iterations = iterations;
    res.status = (res.gap <= cfg.tol || stop_now(stop)) ? Status::Converged : Status::MaxIters;
    res.min_eigvec = best_vec_;
    res.dual_state = best_rho_;
    return res;
  }

  const std::vector<HermitianMatrix>& f_;
  const HermitianMatrix& c_;
  int m_;
  int d_;
  double best_lb_ = -kInf;
  double best_ub_ = kInf;
  std::vector<double> best_lam_;
  CVector best_vec_;
  std::optional<HermitianMatrix> best_rho_;
};

// ---------------------------------------------------------------------------
// Pairwise Frank-Wolfe over the probability simplex with an exact line search
// on the derivative along e_s - e_a.

using SimplexObjective =
    std::function<double(const std::vector<double>& lam, std::vector<double>* grad)>;

struct FwOutcome {
  std::vector<double> lam;
  double value = kInf;
  double gap = kInf;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

FwOutcome pairwise_frank_wolfe(int m, const SimplexObjective& obj, double tol, int max_iters) {
  FwOutcome out;
  std::vector<double> lam(m, 1.0 / m);
  std::vector<double> g(m);
  double fval = obj(lam, &g);
  std::vector<double> trial(m);
  std::vector<double> gt(m);
  int it = 0;
  for (; it < max_iters; ++it) {
    int s = 0;
    for (int i = 1; i < m; ++i)
      if (g[i] < g[s]) s = i;
    int a = -1;
    for (int i = 0; i < m; ++i)
      if (lam[i] > 0.0 && (a < 0 || g[i] > g[a])) a = i;
    double dot = 0.0;
    for (int i = 0; i < m; ++i) dot += lam[i] * g[i];
    const double gap = dot - g[s];
    out.gap = gap;
    if (gap <= tol) {
      out.converged = true;
      break;
    }
    if (a == s || g[a] - g[s] <= 0.0) {
      out.converged = true;
      break;
    }
    const double gmax = lam[a];
    auto move = [&](double step) {
      trial = lam;
      trial[s] += step;
      trial[a] -= step;
      if (trial[a] < 0.0) trial[a] = 0.0;
    };
    // phi'(step) = g_s - g_a at the moved point.
    auto slope = [&](double step, double& fv) {
      move(step);
      fv = obj(trial, &gt);
      if (!std::isfinite(fv)) return kInf;
      return gt[s] - gt[a];
    };
    double f_hi;
    double d_hi = slope(gmax, f_hi);
    double step;
    double f_new;
    if (d_hi <= 0.0 && std::isfinite(f_hi)) {
      step = gmax;  // drop step
      f_new = f_hi;
    } else {
      double lo = 0.0;
      double d_lo = g[s] - g[a];
      double hi = gmax;
      double f_mid = fval;
      step = 0.0;
      f_new = fval;
      int side = 0;
      for (int k = 0; k < 60; ++k) {
        double mid;
        if (std::isfinite(d_hi)) {
          mid = lo - d_lo * (hi - lo) / (d_hi - d_lo);  // regula falsi
          if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
        } else {
          mid = 0.5 * (lo + hi);
        }
        const double dm = slope(mid, f_mid);
        if (std::isfinite(f_mid) && f_mid <= f_new) {
          f_new = f_mid;
          step = mid;
        }
        if (!std::isfinite(dm) || dm > 0.0) {
          hi = mid;
          d_hi = dm;
          if (side == -1 && std::isfinite(d_lo)) d_lo *= 0.5;  // Illinois
          side = -1;
        } else {
          lo = mid;
          d_lo = dm;
          if (side == 1 && std::isfinite(d_hi)) d_hi *= 0.5;
          side = 1;
        }
        if (std::abs(dm) <= 1e-13 * (1.0 + std::abs(g[a] - g[s])) || hi - lo <= 1e-16 * (1.0 + gmax))
          break;
      }
    }
    if (step <= 0.0 || !(f_new <= fval)) {
      // No progress possible along the pairwise direction.
      out.converged = gap <= 10 * tol;
      break;
    }
    move(step);
    if (step >= gmax) trial[a] = 0.0;
    lam = trial;
    fval = obj(lam, &g);
    out.trace.push_back(fval);
  }
  out.lam = lam;
  out.value = fval;
  out.iterations = it;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

void SolverConfig::validate() const {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidConfig, "tol must be > 0");
  if (max_iters < 1) fail(ErrorCode::InvalidConfig, "max_iters must be >= 1");
  if (!(bisection_tol > 0.0)) fail(ErrorCode::InvalidConfig, "bisection_tol must be > 0");
}

SimplexPoint::SimplexPoint(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) fail(ErrorCode::InvalidArgument, "simplex point needs at least one weight");
  double s = 0.0;
  for (double x : w_) {
    if (!(x >= -1e-12)) fail(ErrorCode::InvalidArgument, "simplex weight below -1e-12");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-10) fail(ErrorCode::InvalidArgument, "simplex weights do not sum to 1");
}

SimplexPoint SimplexPoint::uniform(std::size_t m) {
  return SimplexPoint(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

SimplexPoint SimplexPoint::vertex(std::size_t m, std::size_t i) {
  std::vector<double> w(m, 0.0);
  w.at(i) = 1.0;
  return SimplexPoint(std::move(w));
}

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::Converged: return "Converged";
    case Status::MaxIters: return "MaxIters";
    case Status::Infeasible: return "Infeasible";
    case Status::Unbounded: return "Unbounded";
  }
  return "?";
}

const char* tri_name(Tri t) noexcept {
  switch (t) {
    case Tri::Inside: return "Inside";
    case Tri::Outside: return "Outside";
    case Tri::Indeterminate: return "Indeterminate";
  }
  return "?";
}

OptResult max_min_eig_simplex(const std::vector<HermitianMatrix>& f, const HermitianMatrix& c,
                              const SolverConfig& cfg, const EarlyStop& stop) {
  cfg.validate();
  check_dims(f, c.dim(), "max_min_eig_simplex");
  BarrierSolver solver(f, c);
  return solver.solve(cfg, stop);
}

ExtReal cone_cover_value(const std::vector<HermitianMatrix>& g, const HermitianMatrix& d,
                         const SolverConfig& cfg) {
  cfg.validate();
  check_dims(g, d.dim(), "cone_cover_value");
  for (const auto& gi : g) require_psd(gi, "generator");
  require_psd(d, "target");
  if (d.frobenius_norm() <= 1e-14) return 0.0;

  // Finite iff ran D lies in ran(sum G_i); then work on that range.
  HermitianMatrix s = HermitianMatrix::zero(d.dim());
  for (const auto& gi : g) s += gi;
  const CMatrix p = range_basis(s);
  if (p.cols() == 0) return ExtReal::pos_inf();
  const CMatrix outside = d.mat() - p * (p.adjoint() * d.mat());
  if (outside.norm() > 1e-8 * (1.0 + d.frobenius_norm())) return ExtReal::pos_inf();

  std::vector<HermitianMatrix> gc;
  gc.reserve(g.size());
  for (const auto& gi : g) gc.push_back(gi.compress(p));
  const HermitianMatrix dc = d.compress(p);
  const int r = dc.dim();

  // Smallest t covering D with the fixed combination lam; +inf if impossible.
  auto feasible_t = [&](const std::vector<double>& lam) {
    const HermitianMatrix x = combine(gc, lam);
    const auto sd = eigh(x);
    const double thr = zero_threshold(x);
    int first = 0;
    while (first < r && sd.eigenvalues(first) <= thr) ++first;
    if (first == r) return kInf;
    const CMatrix vp = sd.eigenvectors.rightCols(r - first);
    if (first > 0) {
      const CMatrix rest = dc.mat() - vp * (vp.adjoint() * dc.mat());
      if (rest.norm() > 1e-10 * (1.0 + dc.frobenius_norm())) return kInf;
    }
    Eigen::VectorXd inv_sqrt = sd.eigenvalues.tail(r - first).cwiseSqrt().cwiseInverse();
    const CMatrix w = vp * inv_sqrt.cast<Complex>().asDiagonal();
    return std::max(0.0, max_eigenvalue(dc.compress(w)));
  };
  // Lower bound from any state: t >= <rho,D> / max_i <rho,G_i>.
  auto lower_t = [&](const HermitianMatrix& rho) {
    double mx = 0.0;
    for (const auto& gi : gc) mx = std::max(mx, inner(rho, gi));
    if (mx <= 0.0) return 0.0;
    return inner(rho, dc) / mx;
  };

  double gamma = 0.0;
  for (const auto& gi : gc) gamma = std::max(gamma, gi.trace());
  double lo = std::max(dc.trace() / gamma, lower_t(dc * (1.0 / dc.trace())));
  double hi = feasible_t(std::vector<double>(gc.size(), 1.0 / static_cast<double>(gc.size())));
  if (!std::isfinite(hi)) {
    // Cannot happen after compression (uniform mix is positive definite).
    fail(ErrorCode::AssertionFailed, "cone_cover_value: no feasible start");
  }

  // Root of phi(t) = max_lambda lambda_min(t X(lambda) - D), which is
  // nondecreasing in t. Each probe also tightens [lo, hi] through the
  // certificates above; the next probe is an Illinois step inside [lo, hi].
  SolverConfig inner_cfg = cfg;
  double ta = 0.0, fa = 0.0, tb = 0.0, fb = 0.0;
  bool have_a = false, have_b = false;
  int side = 0;
  int stalled = 0;
  for (int it = 0; it < 100 && hi - lo > cfg.bisection_tol * std::max(1.0, hi); ++it) {
    const double w = hi - lo;
    double t = 0.5 * (lo + hi);
    if (stalled == 0 && have_a && have_b && fb > fa) {
      const double sec = ta - fa * (tb - ta) / (fb - fa);
      if (sec > lo + 0.01 * w && sec < hi - 0.01 * w) t = sec;
    }
    std::vector<HermitianMatrix> ft;
    ft.reserve(gc.size());
    for (const auto& gi : gc) ft.push_back(gi * t);
    inner_cfg.tol = std::max(1e-12, 0.1 * cfg.bisection_tol) * std::max(1.0, t * gamma);
    const auto res = max_min_eig_simplex(ft, dc * -1.0, inner_cfg);
    const double lb = res.value.value();
    if (lb >= 0.0) hi = std::min(hi, t);
    if (res.upper_bound < 0.0) lo = std::max(lo, t);
    hi = std::min(hi, feasible_t(res.point.weights()));
    if (res.dual_state) lo = std::max(lo, lower_t(*res.dual_state));
    if (lo > hi) lo = hi;  // roundoff between two certified bounds
    // A probe that cannot shrink the bracket means the certificates are at
    // the inner solver's resolution; retry once at the midpoint, then stop.
    if (hi - lo > 0.99 * w) {
      if (++stalled == 2) break;
    } else {
      stalled = 0;
    }
    const double phi = 0.5 * (lb + res.upper_bound);
    if (phi < 0.0) {
      ta = t;
      fa = phi;
      have_a = true;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      tb = t;
      fb = phi;
      have_b = true;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
  }
  return 0.5 * (lo + hi);
}

OptResult entropy_min_simplex(const std::vector<HermitianMatrix>& g, const State& rho,
                              const SolverConfig& cfg) {
  cfg.validate();
  check_dims(g, rho.dim(), "entropy_min_simplex");
  for (const auto& gi : g) require_psd(gi, "generator");
  const int m = static_cast<int>(g.size());
  const int d = rho.dim();

  OptResult res;
  HermitianMatrix s = HermitianMatrix::zero(d);
  for (const auto& gi : g) s += gi;
  const CMatrix p = range_basis(s);
  const double outside = 1.0 - (p.cols() ? rho.matrix().compress(p).trace() : 0.0);
  if (p.cols() == 0 || outside > 1e-10) {
    res.value = ExtReal::pos_inf();
    res.point = SimplexPoint::uniform(m);
    res.status = Status::Infeasible;
    return res;
  }

  std::vector<HermitianMatrix> gc;
  gc.reserve(m);
  bool singular = false;
  for (const auto& gi : g) {
    gc.push_back(gi.compress(p));
    if (min_eigenvalue(gc.back()) <= zero_threshold(gc.back())) singular = true;
  }
  const HermitianMatrix rc = rho.matrix().compress(p);
  const double eps = singular ? kMixEps : 0.0;
  const int r = rc.dim();

  auto evaluate = [&](const std::vector<double>& lam, double mix, std::vector<double>* grad) {
    CMatrix x = CMatrix::Zero(r, r);
    for (int i = 0; i < m; ++i) {
      const double w = (1.0 - mix) * lam[i] + mix / m;
      if (w != 0.0) x += w * gc[i].mat();
    }
    const auto sd = eigh(hermitian_part(x));
    const CMatrix rho_u = sd.eigenvectors.adjoint() * rc.mat() * sd.eigenvectors;
    const double thr = zero_threshold(hermitian_part(x));
    double f = 0.0;
    for (int k = 0; k < r; ++k) {
      const double w = rho_u(k, k).real();
      if (sd.eigenvalues(k) <= std::max(thr * 1e-6, 1e-300)) {
        if (w > 1e-12) return kInf;
        continue;
      }
      f -= w * std::log(sd.eigenvalues(k));
    }
    if (grad) {
      // Gradient of -Tr(rho log X) w.r.t. lambda_i is -(1-mix) <Q, G_i>.
      CMatrix q = rho_u;
      const auto& a = sd.eigenvalues;
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          const double diff = a(k) - a(l);
          double gam;
          if (std::abs(diff) <= 1e-8 * std::max(a(k), a(l))) gam = 2.0 / (a(k) + a(l));
          else gam = std::log(a(k) / a(l)) / diff;
          q(k, l) *= gam;
        }
      }
      const CMatrix qf = sd.eigenvectors * q * sd.eigenvectors.adjoint();
      const HermitianMatrix qh = hermitian_part(qf);
      grad->assign(m, 0.0);
      for (int i = 0; i < m; ++i) (*grad)[i] = -(1.0 - mix) * inner(qh, gc[i]);
    }
    return f;
  };

  const auto fw = pairwise_frank_wolfe(
      m, [&](const std::vector<double>& lam, std::vector<double>* grad) { return evaluate(lam, eps, grad); },
      cfg.tol, cfg.max_iters);

  std::vector<double> lam = clean_simplex(fw.lam);
  double value = fw.value;
  double used_mix = eps;
  if (eps > 0.0) {
    const double exact = evaluate(lam, 0.0, nullptr);
    if (std::isfinite(exact) && exact <= value) {
      value = exact;
      used_mix = 0.0;
    }
  }
  std::vector<double> w(m);
  for (int i = 0; i < m; ++i) w[i] = (1.0 - used_mix) * lam[i] + used_mix / m;
  res.value = value;
  res.point = SimplexPoint(lam);
  res.gap = std::max(0.0, fw.gap);
  res.iterations = fw.iterations;
  res.status = fw.converged ? Status::Converged : Status::MaxIters;
  res.minimizer = combine(g, w);
  res.trace = fw.trace;
  return res;
}

OptResult entropy_min_simplex_diag(const std::vector<std::vector<double>>& v,
                                   const std::vector<double>& p, const SolverConfig& cfg) {
  cfg.validate();
  if (v.empty()) fail(ErrorCode::InvalidArgument, "entropy_min_simplex_diag: no generators");
  const int n = static_cast<int>(p.size());
  const int m = static_cast<int>(v.size());
  for (const auto& vk : v) {
    if (static_cast<int>(vk.size()) != n)
      fail(ErrorCode::DimensionMismatch, "entropy_min_simplex_diag: dimension mismatch");
    for (double x : vk)
      if (x < -1e-12) fail(ErrorCode::NotPSD, "entropy_min_simplex_diag: negative generator entry");
  }
  double psum = 0.0;
  for (double x : p) {
    if (x < -1e-12) fail(ErrorCode::NotState, "negative probability");
    psum += x;
  }
  if (std::abs(psum - 1.0) > 1e-10) fail(ErrorCode::NotState, "distribution does not sum to 1");

  // Only the support of p matters.
  std::vector<int> supp;
  for (int i = 0; i < n; ++i)
    if (p[i] > 0.0) supp.push_back(i);
  OptResult res;
  bool singular = false;
  for (int i : supp) {
    double col = 0.0;
    for (const auto& vk : v) {
      col += vk[i];
      if (vk[i] <= 0.0) singular = true;
    }
    if (col <= 0.0) {
      res.value = ExtReal::pos_inf();
      res.point = SimplexPoint::uniform(m);
      res.status = Status::Infeasible;
      return res;
    }
  }
  const double eps = singular ? kMixEps : 0.0;

  std::vector<double> x(n);
  auto evaluate = [&](const std::vector<double>& lam, double mix, std::vector<double>* grad) {
    for (int i : supp) {
      double acc = 0.0;
      for (int k = 0; k < m; ++k) acc += ((1.0 - mix) * lam[k] + mix / m) * v[k][i];
      x[i] = acc;
    }
    double f = 0.0;
    for (int i : supp) {
      if (x[i] <= 0.0) return kInf;
      f -= p[i] * std::log(x[i]);
    }
    if (grad) {
      grad->assign(m, 0.0);
      for (int k = 0; k < m; ++k) {
        double acc = 0.0;
        for (int i : supp) acc += p[i] * v[k][i] / x[i];
        (*grad)[k] = -(1.0 - mix) * acc;
      }
    }
    return f;
  };
  const auto fw = pairwise_frank_wolfe(
      m, [&](const std::vector<double>& lam, std::vector<double>* grad) { return evaluate(lam, eps, grad); },
      cfg.tol, cfg.max_iters);
  std::vector<double> lam = clean_simplex(fw.lam);
  double value = fw.value;
  double used_mix = eps;
  if (eps > 0.0) {
    const double exact = evaluate(lam, 0.0, nullptr);
    if (std::isfinite(exact) && exact <= value) {
      value = exact;
      used_mix = 0.0;
    }
  }
  std::vector<double> diag(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) diag[i] += ((1.0 - used_mix) * lam[k] + used_mix / m) * v[k][i];
  res.value = value;
  res.point = SimplexPoint(lam);
  res.gap = std::max(0.0, fw.gap);
  res.iterations = fw.iterations;
  res.status = fw.converged ? Status::Converged : Status::MaxIters;
  res.minimizer = HermitianMatrix::diagonal(diag);
  res.trace = fw.trace;
  return res;
}

}  // namespace cornerlab
