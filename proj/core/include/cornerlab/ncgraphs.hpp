#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/graphs.hpp"
#include "cornerlab/hermlin.hpp"
#include "cornerlab/optcore.hpp"

namespace cornerlab {

enum class BuiltinKind { CI, T, S };

// A self-adjoint unital subspace of M_d, given by a Hermitian spanning basis
// of its Hermitian part.
class OperatorSystem {
 public:
  // InvalidOperatorSystem when the basis is dependent or misses I.
  OperatorSystem(int dim, std::vector<HermitianMatrix> basis);

  int dim() const noexcept { return dim_; }
  const std::vector<HermitianMatrix>& basis() const noexcept { return basis_; }
  // Orthonormal for Re Tr(AB); also an orthonormal basis of the complex span.
  const std::vector<HermitianMatrix>& orthonormal_basis() const noexcept { return onb_; }
  std::size_t size() const noexcept { return basis_.size(); }

  // Frobenius distance from X to the complex span.
  double residual(const CMatrix& x) const;
  bool contains(const CMatrix& x, double tol = 1e-7) const { return residual(x) <= tol; }

  // Where the system came from; families and integer covers use this.
  const std::optional<Graph>& source_graph() const noexcept { return graph_; }
  std::optional<std::pair<BuiltinKind, int>> builtin() const { return builtin_; }
  bool is_tensor() const noexcept { return factors_ != nullptr; }
  const OperatorSystem& factor(int i) const;
  // The system equals U S_src U^* for the recorded source.
  const CMatrix& frame() const noexcept { return frame_; }

  OperatorSystem conjugated(const CMatrix& u) const;
  // Drops the origin so every derived quantity goes through the generic path.
  OperatorSystem forget_origin() const;

  static OperatorSystem from_graph(const Graph& g);
  static OperatorSystem builtin_system(BuiltinKind kind, int d);

 private:
  friend OperatorSystem tensor(const OperatorSystem& a, const OperatorSystem& b);
  OperatorSystem(int dim, std::vector<HermitianMatrix> basis, bool filter_dependent);

  int dim_;
  std::vector<HermitianMatrix> basis_;
  std::vector<HermitianMatrix> onb_;
  std::optional<Graph> graph_;
  std::optional<std::pair<BuiltinKind, int>> builtin_;
  std::shared_ptr<const std::pair<OperatorSystem, OperatorSystem>> factors_;
  CMatrix frame_;
};

// S_G: e_i e_i^*, plus e_ie_j^* + e_je_i^* and i(e_ie_j^* - e_je_i^*) per edge.
OperatorSystem opsys_from_graph(const Graph& g);

// Kronecker products of basis pairs, dependent products dropped. Graph
// systems multiply to the system of the strong product.
OperatorSystem tensor(const OperatorSystem& a, const OperatorSystem& b);

struct ProjectionFlags {
  bool abelian = false;
  bool full = false;
  bool clique_certified = false;
  double abelian_residual = 0.0;
  double full_residual = 0.0;
  double clique_residual = 0.0;
};

// NotProjection unless |P^2 - P|_F <= 1e-8. The frame (orthonormal columns
// spanning ran P) is the clique witness; eigenvectors of P by default.
ProjectionFlags classify_projection(const OperatorSystem& s, const HermitianMatrix& p,
                                    const std::optional<CMatrix>& frame = std::nullopt);

enum class ProjKind { Abelian, Clique, Full };
enum class Provenance { Combinatorial, ClosedForm, Searched, UserSupplied, Product };
const char* proj_kind_name(ProjKind k) noexcept;
const char* provenance_name(Provenance p) noexcept;

struct ProjectionFamily {
  int dim = 1;
  ProjKind kind = ProjKind::Abelian;
  Provenance provenance = Provenance::Combinatorial;
  std::vector<HermitianMatrix> projections;
  std::vector<CMatrix> frames;  // clique witnesses, one per projection
  // Every rank-one projection is abelian and (vacuously) a clique. The
  // closure is represented by the rank-one projections onto the columns of
  // closure_frame, which is exact whenever all projections are diagonal in it.
  bool rank_one_closure = false;
  CMatrix closure_frame;
  bool exact = true;

  bool empty() const noexcept { return projections.empty() && !rank_one_closure; }
  // The generated corner; the zero corner when empty.
  GeneratedCorner corner() const;
  // Adds the eigenprojectors of rho to the closure generators.
  GeneratedCorner corner_for(const State& rho) const;
  // Whether corner_for(rho) is the full projection-generated corner.
  bool entropy_exact(const State& rho) const;
};

struct SearchConfig {
  int budget = 200;  // random restarts per rank
  int max_steps = 300;
  std::uint64_t seed = 42;
};

// Exact families for graph systems and builtins (and their conjugates and
// tensor products of those); randomized Stiefel search otherwise.
ProjectionFamily projection_families(const OperatorSystem& s, ProjKind kind,
                                     const SearchConfig& search = {});

// Search objective for frames V (orthonormal columns): commutator energy for
// Abelian, squared distance of v_a v_b^* from S for Clique (a != b) and Full
// (all a, b). grad receives the Euclidean gradient for Re Tr(G^* dV).
double search_objective(const OperatorSystem& s, ProjKind kind, const CMatrix& v, CMatrix* grad);

// Gradient search for one projection of the given rank and kind. Returns the
// certified projection and its frame, if found within the budget.
std::optional<std::pair<HermitianMatrix, CMatrix>> search_projection(const OperatorSystem& s,
                                                                     ProjKind kind, int rank,
                                                                     const SearchConfig& search);

enum class Exactness { Exact, InnerApprox, Heuristic };
const char* exactness_name(Exactness e) noexcept;

struct NcValue {
  ExtReal value;
  Exactness exactness = Exactness::Exact;
};

struct NcParams {
  NcValue alpha;          // gamma(ap)
  NcValue omega;          // gamma(cp)
  NcValue omega_tilde;    // gamma(fp)
  NcValue chi_f;          // Gamma_f(ap)
  NcValue omega_f;        // gamma(ap#) by the support route
  NcValue Omega_f;        // Gamma_f(cp)
  NcValue Omega_tilde_f;  // Gamma_f(fp)
  NcValue chi;
  NcValue Omega;
  NcValue Omega_tilde;
  double chi_f_omega_f_residual = 0.0;
};

// AssertionFailed when |chi_f - omega_f| > 1e-4 max(1, chi_f).
NcParams nc_params(const OperatorSystem& s, const SolverConfig& cfg,
                   const SearchConfig& search = {});

// Entropy over ap(S); for graph systems at diagonal rho it must agree with
// the Korner entropy within 1e-3 (AssertionFailed otherwise).
EntropyResult nc_graph_entropy(const OperatorSystem& s, const State& rho, const SolverConfig& cfg,
                               const SearchConfig& search = {});

struct CapacityReport {
  std::vector<double> lower;       // alpha(S^{(x)k})^(1/k), k = 1..
  std::vector<bool> lower_exact;
  ExtReal Omega_f;
  ExtReal Omega_tilde_f;
  bool truncated = false;
  std::string note;
};

// n_max <= 2; powers beyond dimension 64 are skipped and flagged.
CapacityReport capacity_bounds(const OperatorSystem& s, int n_max, const SolverConfig& cfg);

// "ci:d", "t:d", "s:d"; UnknownName otherwise.
OperatorSystem builtin_family(const std::string& name);

struct Section9Row {
  std::string system;
  std::string parameter;
  ExtReal computed;
  ExtReal reference;
  double delta = 0.0;
  bool pass = false;
};

// Golden rows for the builtin families; reals compared at 1e-4.
std::vector<Section9Row> section9_rows(const std::string& family, const SolverConfig& cfg);

}  // namespace cornerlab
