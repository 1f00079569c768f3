#pragma once

#include <optional>
#include <vector>

#include "cornerlab/extreal.hpp"
#include "cornerlab/hermlin.hpp"
#include "cornerlab/optcore.hpp"
#include "cornerlab/random.hpp"

namespace cornerlab {

// her(conv(G)) for a finite list of PSD generators.
class GeneratedCorner {
 public:
  GeneratedCorner(int dim, std::vector<HermitianMatrix> generators);

  // B_{I_d}: generated by the identity.
  static GeneratedCorner unit_ball(int d);
  // A_{I_d} through the canonical rank-one projectors (exact for gamma, N, M).
  static GeneratedCorner unit_trace(int d);
  // The degenerate corner {0}.
  static GeneratedCorner zero(int d);
  static GeneratedCorner from_diagonals(const std::vector<std::vector<double>>& vectors);

  int dim() const noexcept { return dim_; }
  const std::vector<HermitianMatrix>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool all_diagonal(double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<HermitianMatrix> gens_;
};

// Diagonal corner in R^d: VGen = her(conv(vectors)), HPoly = {x >= 0 : <a,x> <= 1}.
class DiagonalCorner {
 public:
  enum class Kind { VGen, HPoly };

  static DiagonalCorner vgen(int dim, std::vector<std::vector<double>> vectors);
  static DiagonalCorner hpoly(int dim, std::vector<std::vector<double>> rows);

  Kind kind() const noexcept { return kind_; }
  int dim() const noexcept { return dim_; }
  // Generator vectors (VGen) or inequality rows (HPoly).
  const std::vector<std::vector<double>>& data() const noexcept { return data_; }

  // VGen: LP feasibility of x <= sum lambda_k v_k; HPoly: direct evaluation.
  bool contains(const std::vector<double>& x, double tol = 1e-9) const;
  // The flat anti-blocker, switching representation (same vectors).
  DiagonalCorner flat_anti_blocker() const;
  // VGen only: the corner generated by diag(v_k).
  GeneratedCorner lift() const;

 private:
  DiagonalCorner(Kind kind, int dim, std::vector<std::vector<double>> data);

  Kind kind_;
  int dim_;
  std::vector<std::vector<double>> data_;
};

double gamma(const GeneratedCorner& corner);
// Largest beta with beta I in the corner (clamped at 0).
double n_param(const GeneratedCorner& corner, const SolverConfig& cfg);
// Full solver output behind n_param (weights, dual state, gap).
OptResult n_param_certified(const GeneratedCorner& corner, const SolverConfig& cfg);
// Smallest mu with mu A >= I for some A in the corner; +inf if none.
ExtReal m_param(const GeneratedCorner& corner, const SolverConfig& cfg);

struct ParamReport {
  double gamma = 0.0;
  double n_param = 0.0;
  double n_gap = 0.0;
  ExtReal m_param;
  // gamma of the anti-blocker through its certified point t* rho* (support
  // route; independent of the cone-cover bisection behind m_param).
  ExtReal gamma_ab;
  std::vector<double> gamma_argmax;   // generator attaining the max trace
  std::vector<double> n_weights;      // simplex point attaining n_param
  std::optional<HermitianMatrix> ab_point;
  // 0 < N < 1e-6: M is huge and poorly conditioned.
  bool ill_conditioned = false;
};

ParamReport param_report(const GeneratedCorner& corner, const SolverConfig& cfg);

// Decides whether A lies in the corner: Inside when the feasibility value is
// >= -1e-7, Outside when certified <= -1e-5, Indeterminate otherwise.
Tri membership(const GeneratedCorner& corner, const HermitianMatrix& a, const SolverConfig& cfg);

// N in the anti-blocker: PSD and Tr(N G_i) <= 1 + 1e-9 for every generator.
bool ab_membership(const GeneratedCorner& corner, const HermitianMatrix& n);

// t* = 1 / max_i Tr(N0 G_i), +inf when every pairing is <= 0.
ExtReal ab_ray_scale(const GeneratedCorner& corner, const HermitianMatrix& n0);

struct RayCheckReport {
  int trials = 0;
  double max_discrepancy = 0.0;
  bool passed = false;
  std::vector<double> t_a;   // sup{t : t N0 in A} by membership bisection
  std::vector<double> t_aa;  // 1 / cone_cover_value(G, N0)
};

// Random PSD rays (seeded by cfg.seed); pass at max relative discrepancy <= 1e-3.
RayCheckReport reflexivity_ray_check(const GeneratedCorner& corner, int trials,
                                     const SolverConfig& cfg);
// Same check along caller-supplied rays.
RayCheckReport reflexivity_ray_check(const GeneratedCorner& corner,
                                     const std::vector<HermitianMatrix>& rays,
                                     const SolverConfig& cfg);

// sum_i <A v_i, v_i> v_i v_i^* for an orthonormal frame (canonical by default).
HermitianMatrix diag_expectation(const HermitianMatrix& a,
                                 const std::optional<CMatrix>& basis = std::nullopt);

enum class LiftKind { MinLift, MaxLift };
Tri lift_membership(const DiagonalCorner& diag, const HermitianMatrix& m, LiftKind kind,
                    const SolverConfig& cfg);

// Fractional projection cover number of a projection-generated corner (= M).
ExtReal gamma_f_cover(const GeneratedCorner& proj_corner, const SolverConfig& cfg);

// Random standard corner: m generators of random rank and trace in [0.5, 1.5],
// resampled until sum G_i >= 1e-3 I.
GeneratedCorner random_standard_corner(int d, int m, Rng& rng);

// Projection test ||P^2 - P||_F <= 1e-8, and eigenvalue snapping to {0, 1}.
bool is_projection(const HermitianMatrix& p, double tol = 1e-8);
HermitianMatrix snap_projection(const HermitianMatrix& p);

}  // namespace cornerlab
