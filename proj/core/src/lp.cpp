#include <cmath>
#include <limits>
#include <vector>

#include "cornerlab/errors.hpp"
#include "cornerlab/optcore.hpp"

namespace cornerlab {

namespace {

constexpr double kPivotTol = 1e-9;
// Consecutive degenerate pivots before switching from Dantzig to Bland.
constexpr int kDegenerateSwitch = 50;

class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), t_(static_cast<std::size_t>(rows) * (cols + 1), 0.0) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }
  double& rhs(int i) { return at(i, n_); }
  double rhs(int i) const { return at(i, n_); }
  int rows() const { return m_; }
  int cols() const { return n_; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= n_; ++j) at(r, j) /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= n_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
  }

 private:
  int m_;
  int n_;
  std::vector<double> t_;
};

enum class Outcome { Optimal, Unbounded, IterationLimit };

// Maximizes cost . x over the current basis; columns with allowed[j] false
// never enter.
Outcome run_simplex(Tableau& t, std::vector<int>& basis, const std::vector<double>& cost,
                    const std::vector<char>& allowed, int& iterations, int max_iters) {
  const int m = t.rows();
  const int n = t.cols();
  std::vector<double> reduced(n);
  bool bland = false;
  int degenerate_run = 0;
  while (iterations < max_iters) {
    for (int j = 0; j < n; ++j) {
      double d = cost[j];
      for (int i = 0; i < m; ++i) d -= cost[basis[i]] * t.at(i, j);
      reduced[j] = d;
    }
    for (int i = 0; i < m; ++i) reduced[basis[i]] = 0.0;
    int enter = -1;
    double best = kPivotTol;
    for (int j = 0; j < n; ++j) {
      if (!allowed[j] || reduced[j] <= kPivotTol) continue;
      if (bland) {
        enter = j;
        break;
      }
      if (reduced[j] > best) {
        best = reduced[j];
        enter = j;
      }
    }
    if (enter < 0) return Outcome::Optimal;
    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double a = t.at(i, enter);
      if (a <= kPivotTol) continue;
      const double r = t.rhs(i) / a;
      if (leave < 0 || r < ratio - 1e-12) {
        ratio = r;
        leave = i;
      } else if (r <= ratio + 1e-12 && basis[i] < basis[leave]) {
        leave = i;  // Bland tie-break on the leaving variable
      }
    }
    if (leave < 0) return Outcome::Unbounded;
    if (ratio <= 1e-12) {
      if (++degenerate_run > kDegenerateSwitch) bland = true;
    } else {
      degenerate_run = 0;
    }
    t.pivot(leave, enter);
    basis[leave] = enter;
    ++iterations;
  }
  return Outcome::IterationLimit;
}

}  // namespace

LpResult lp_solve(const std::vector<double>& c, const std::vector<LinearConstraint>& constraints,
                  Sense sense) {
  const int n = static_cast<int>(c.size());
  if (n < 1) fail(ErrorCode::DimensionMismatch, "lp_solve: no variables");
  const int m = static_cast<int>(constraints.size());
  for (const auto& row : constraints) {
    if (static_cast<int>(row.coeffs.size()) != n) {
      fail(ErrorCode::DimensionMismatch, "lp_solve: constraint length differs from objective");
    }
  }

  // Standardize to nonnegative right-hand sides.
  std::vector<double> sign(m, 1.0);
  std::vector<Relation> rel(m);
  int n_slack = 0;
  int n_art = 0;
  for (int r = 0; r < m; ++r) {
    rel[r] = constraints[r].rel;
    if (constraints[r].rhs < 0) {
      sign[r] = -1.0;
      if (rel[r] == Relation::LessEq) rel[r] = Relation::GreaterEq;
      else if (rel[r] == Relation::GreaterEq) rel[r] = Relation::LessEq;
    }
    if (rel[r] != Relation::Equal) ++n_slack;
    if (rel[r] != Relation::LessEq) ++n_art;
  }

  const int cols = n + n_slack + n_art;
  Tableau t(m, cols);
  std::vector<int> basis(m);
  std::vector<int> init_col(m);
  std::vector<char> is_art(cols, 0);
  int next_slack = n;
  int next_art = n + n_slack;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) t.at(r, j) = sign[r] * constraints[r].coeffs[j];
    t.rhs(r) = sign[r] * constraints[r].rhs;
    if (rel[r] == Relation::LessEq) {
      t.at(r, next_slack) = 1.0;
      basis[r] = init_col[r] = next_slack++;
    } else {
      if (rel[r] == Relation::GreaterEq) t.at(r, next_slack++) = -1.0;
      t.at(r, next_art) = 1.0;
      is_art[next_art] = 1;
      basis[r] = init_col[r] = next_art++;
    }
  }

  LpResult out;
  const int max_iters = 50000 + 50 * (m + cols);
  std::vector<char> allowed(cols, 1);

  if (n_art > 0) {
    std::vector<double> cost1(cols, 0.0);
    for (int j = 0; j < cols; ++j)
      if (is_art[j]) cost1[j] = -1.0;
    const auto oc = run_simplex(t, basis, cost1, allowed, out.iterations, max_iters);
    if (oc == Outcome::IterationLimit) {
      out.status = Status::MaxIters;
      return out;
    }
    double infeas = 0.0;
    double scale = 1.0;
    for (int r = 0; r < m; ++r) {
      scale = std::max(scale, std::abs(constraints[r].rhs));
      if (is_art[basis[r]]) infeas += t.rhs(r);
    }
    if (infeas > 1e-9 * scale) {
      out.status = Status::Infeasible;
      return out;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (!is_art[basis[r]]) continue;
      for (int j = 0; j < cols; ++j) {
        if (is_art[j] || std::abs(t.at(r, j)) <= kPivotTol) continue;
        t.pivot(r, j);
        basis[r] = j;
        break;
      }
    }
    for (int j = 0; j < cols; ++j)
      if (is_art[j]) allowed[j] = 0;
  }

  const double dir = sense == Sense::Maximize ? 1.0 : -1.0;
  std::vector<double> cost2(cols, 0.0);
  for (int j = 0; j < n; ++j) cost2[j] = dir * c[j];
  const auto oc = run_simplex(t, basis, cost2, allowed, out.iterations, max_iters);
  if (oc == Outcome::Unbounded) {
    out.status = Status::Unbounded;
    return out;
  }
  if (oc == Outcome::IterationLimit) {
    out.status = Status::MaxIters;
    return out;
  }

  out.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) out.x[basis[r]] = std::max(0.0, t.rhs(r));
  }
  out.value = 0.0;
  for (int j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  out.duals.assign(m, 0.0);
  for (int r = 0; r < m; ++r) {
    double y = 0.0;
    for (int i = 0; i < m; ++i) y += cost2[basis[i]] * t.at(i, init_col[r]);
    out.duals[r] = dir * sign[r] * y;
  }
  out.status = Status::Converged;
  return out;
}

}  // namespace cornerlab
