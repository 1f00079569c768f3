#pragma once

#include <vector>

#include "cornerlab/corner.hpp"
#include "cornerlab/extreal.hpp"
#include "cornerlab/hermlin.hpp"
#include "cornerlab/optcore.hpp"

namespace cornerlab {

struct EntropyResult {
  ExtReal value;
  HermitianMatrix minimizer;  // sum_i lambda_i G_i at the optimum
  double gap = 0.0;
  int iterations = 0;
  Status status = Status::Converged;
  std::vector<double> weights;
  // False when the corner was an inner approximation; value is then an upper bound.
  bool exact = true;
};

// Natural logarithms throughout.
double von_neumann(const State& rho);
double shannon(const std::vector<double>& p);
// +inf when rho has weight on ker sigma.
ExtReal relative_entropy(const State& rho, const HermitianMatrix& sigma);

// min over the corner of -Tr(rho log A); +inf when rho leaves ran(sum G_i).
EntropyResult corner_entropy(const GeneratedCorner& corner, const State& rho,
                             const SolverConfig& cfg);

struct MaxEntropyResult {
  double value = 0.0;  // -log N
  State state = State::maximally_mixed(1);
  ExtReal attained;    // corner entropy at `state`
};

// EmptyInterior when N <= 1e-6.
MaxEntropyResult max_entropy_state(const GeneratedCorner& corner, const SolverConfig& cfg);

// min -sum p_i log v_i over {v >= 0 : <a_r, v> <= 1}; column generation with
// lp_solve as the linear oracle.
ExtReal polytope_entropy_diag(const DiagonalCorner& poly, const std::vector<double>& p,
                              const SolverConfig& cfg);

struct SplitReport {
  double shannon = 0.0;
  ExtReal h_corner;
  ExtReal h_anti_blocker;
  double residual = 0.0;
  bool passed = false;
};

SplitReport entropy_split_check(const DiagonalCorner& diag_gen, const std::vector<double>& p,
                                const SolverConfig& cfg);

struct LowerBoundReport {
  ExtReal h_corner;
  double bound = 0.0;  // H(p) - log gamma
  bool holds = false;
  bool equality_predicted = false;  // gamma * diag(p) is in the corner
  bool equality_observed = false;   // |H_A - bound| <= 1e-6
};

LowerBoundReport entropy_lower_bound_check(const GeneratedCorner& corner,
                                           const std::vector<double>& p,
                                           const SolverConfig& cfg = {});

}  // namespace cornerlab
