#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cornerlab/extreal.hpp"
#include "cornerlab/hermlin.hpp"

namespace cornerlab {

struct SolverConfig {
  double tol = 1e-7;
  int max_iters = 20000;
  double bisection_tol = 1e-9;
  std::uint64_t seed = 42;

  // InvalidConfig on non-positive tolerances or iteration budgets.
  void validate() const;
};

// Probability vector: weights >= -1e-12, sum 1 within 1e-10.
class SimplexPoint {
 public:
  SimplexPoint() = default;
  explicit SimplexPoint(std::vector<double> weights);

  static SimplexPoint uniform(std::size_t m);
  static SimplexPoint vertex(std::size_t m, std::size_t i);

  const std::vector<double>& weights() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }

 private:
  std::vector<double> w_;
};

enum class Status { Converged, MaxIters, Infeasible, Unbounded };
const char* status_name(Status s) noexcept;

enum class Tri { Inside, Outside, Indeterminate };
const char* tri_name(Tri t) noexcept;

struct OptResult {
  ExtReal value;
  SimplexPoint point;
  double gap = 0.0;
  int iterations = 0;
  Status status = Status::Converged;

  // max_min_eig_simplex only: certified upper bound, unit eigenvector for the
  // smallest eigenvalue at `point`, and a dual state rho with
  // <rho, C> + max_i <rho, F_i> = upper_bound.
  double upper_bound = 0.0;
  CVector min_eigvec;
  std::optional<HermitianMatrix> dual_state;

  // Entropy solvers only: minimizer sum_i lambda_i G_i (diagonal solver puts
  // it on the diagonal) and the objective after each iteration.
  std::optional<HermitianMatrix> minimizer;
  std::vector<double> trace;
};

// Optional early exit for feasibility questions: stop as soon as the certified
// lower bound reaches accept_at or the certified upper bound drops to reject_at.
struct EarlyStop {
  double accept_at = 1e300;
  double reject_at = -1e300;
};

// max over the simplex of lambda_min(C + sum_i lambda_i F_i).
// value is a lower bound attained at point; value + gap is a certified upper
// bound from the dual state (log-barrier path following).
OptResult max_min_eig_simplex(const std::vector<HermitianMatrix>& f, const HermitianMatrix& c,
                              const SolverConfig& cfg, const EarlyStop& stop = {});

// min { t >= 0 : exists lambda with t sum_i lambda_i G_i >= D }, +inf when no
// finite t works (D not supported on ran(sum_i G_i)).
ExtReal cone_cover_value(const std::vector<HermitianMatrix>& g, const HermitianMatrix& d,
                         const SolverConfig& cfg);

// min over the simplex of -Tr(rho log sum_i lambda_i G_i). Infeasible (+inf)
// exactly when rho has weight outside ran(sum_i G_i).
OptResult entropy_min_simplex(const std::vector<HermitianMatrix>& g, const State& rho,
                              const SolverConfig& cfg);

// Diagonal specialization: generators are nonnegative vectors.
OptResult entropy_min_simplex_diag(const std::vector<std::vector<double>>& v,
                                   const std::vector<double>& p, const SolverConfig& cfg);

enum class Relation { LessEq, GreaterEq, Equal };
enum class Sense { Minimize, Maximize };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
};

struct LpResult {
  Status status = Status::Converged;
  double value = 0.0;
  std::vector<double> x;
  // Shadow prices: d(optimal value)/d(rhs_r) for each constraint row.
  std::vector<double> duals;
  int iterations = 0;
};

// Dense two-phase simplex over x >= 0. Pivot tolerance 1e-9.
LpResult lp_solve(const std::vector<double>& c, const std::vector<LinearConstraint>& constraints,
                  Sense sense);

}  // namespace cornerlab
