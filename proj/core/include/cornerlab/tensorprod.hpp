#pragma once

#include <vector>

#include "cornerlab/corner.hpp"
#include "cornerlab/entropy.hpp"
#include "cornerlab/hermlin.hpp"
#include "cornerlab/optcore.hpp"

namespace cornerlab {

// Generators G_i (x) H_j. DimOverflow when d1 d2 > 64.
GeneratedCorner max_tensor(const GeneratedCorner& a, const GeneratedCorner& b);

struct MinTensorVerdict {
  Tri verdict = Tri::Inside;
  // Inside only means no tested product functional separated M.
  bool approximate = true;
  double max_pairing = 0.0;  // largest <M, N1 (x) N2> seen
  std::optional<HermitianMatrix> witness_a, witness_b;
};

// Outer test for the minimal tensor product: pairs M with N1 (x) N2, N_k on the
// boundary of the anti-blocker along I/d, the canonical rank-one rays and
// `rays` random PSD rays per factor (seeded by cfg.seed). NotPSD for M.
MinTensorVerdict min_tensor_membership(const GeneratedCorner& a, const GeneratedCorner& b,
                                       const HermitianMatrix& m, const SolverConfig& cfg,
                                       int rays = 20);

// Partial traces of an operator on C^{d1} (x) C^{d2}.
HermitianMatrix partial_trace_second(const HermitianMatrix& rho, int d1, int d2);  // keeps factor 1
HermitianMatrix partial_trace_first(const HermitianMatrix& rho, int d1, int d2);   // keeps factor 2

struct ProductEntropyReport {
  ExtReal lhs;  // entropy over the max product
  ExtReal rhs;  // sum of marginal entropies
  bool inequality_holds = false;
  bool equality_expected = false;  // diagonal product state, diagonal generators
  bool equality_holds = false;
};

// Checks lhs <= rhs + 1e-3, and equality within 1e-3 in the product diagonal case.
ProductEntropyReport product_entropy_check(const GeneratedCorner& a, const GeneratedCorner& b,
                                           const State& rho, const SolverConfig& cfg);

}  // namespace cornerlab
