#include "cornerlab/random.hpp"

#include <cmath>
#include <numbers>

namespace cornerlab {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

Rng Rng::split(std::uint64_t index) const { return Rng(mix(seed_ ^ mix(index + 1))); }

double Rng::uniform() {
  // 53 random bits; avoids implementation-defined std distributions.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // Box-Muller, one variate per call.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

CVector random_unit_vector(int d, Rng& rng) {
  CVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

CMatrix random_unitary(int d, Rng& rng) {
  CMatrix z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  // Fix column phases so the distribution does not depend on QR conventions.
  const CMatrix r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

HermitianMatrix random_psd(int d, int rank, Rng& rng, double trace) {
  CMatrix w(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) w(i, j) = Complex(rng.normal(), rng.normal());
  HermitianMatrix m = hermitian_part(w * w.adjoint());
  return m * (trace / m.trace());
}

State random_state(int d, Rng& rng) { return State::normalized(random_psd(d, d, rng)); }

std::vector<double> random_distribution(int n, Rng& rng, double floor) {
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    s += x;
  }
  for (auto& x : p) x = (1.0 - floor) * x / s + floor / n;
  // Absorb roundoff into the largest entry.
  double t = 0.0;
  for (double x : p) t += x;
  std::size_t big = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[big]) big = i;
  p[big] += 1.0 - t;
  return p;
}

HermitianMatrix random_hermitian(int d, Rng& rng) {
  CMatrix z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = Complex(rng.normal(), rng.normal());
  return hermitian_part(z);
}

}  // namespace cornerlab
