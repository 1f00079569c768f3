#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cornerlab/hermlin.hpp"

namespace cornerlab {

// Seeded generator with deterministic child streams. Every randomized routine
// takes an Rng (or a seed) so runs reproduce from (seed, budget).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream derived from this generator's seed and `index`.
  Rng split(std::uint64_t index) const;

  double uniform();             // [0, 1)
  double normal();              // standard normal
  int uniform_int(int lo, int hi);  // inclusive

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Uniformly random unit vector in C^d (complex Gaussian, normalized).
CVector random_unit_vector(int d, Rng& rng);
// Haar-like random unitary from QR of a complex Gaussian matrix.
CMatrix random_unitary(int d, Rng& rng);
// W W^* with W a d x rank complex Gaussian matrix, scaled to trace `trace`.
HermitianMatrix random_psd(int d, int rank, Rng& rng, double trace = 1.0);
// Full-rank mixed state.
State random_state(int d, Rng& rng);
// Random distribution on n points with all entries >= floor/n.
std::vector<double> random_distribution(int n, Rng& rng, double floor = 0.0);
// Random Hermitian with Gaussian entries.
HermitianMatrix random_hermitian(int d, Rng& rng);

}  // namespace cornerlab
