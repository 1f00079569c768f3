#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "cornerlab/extreal.hpp"

namespace cornerlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Complex self-adjoint d x d matrix. Construction symmetrizes the input and
// rejects inputs whose anti-Hermitian part exceeds 1e-8 (relative to scale).
class HermitianMatrix {
 public:
  // 1 x 1 zero.
  HermitianMatrix();
  explicit HermitianMatrix(const CMatrix& m);

  static HermitianMatrix zero(int d);
  static HermitianMatrix identity(int d);
  static HermitianMatrix diagonal(const std::vector<double>& diag);
  static HermitianMatrix from_real(const Eigen::MatrixXd& m);
  // v v^* (v is used as given, not normalized).
  static HermitianMatrix outer(const CVector& v);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const CMatrix& mat() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double trace() const;
  double frobenius_norm() const;
  std::vector<double> diag() const;

  // V^* A V; result has dimension V.cols().
  HermitianMatrix compress(const CMatrix& v) const;
  // V A V^*; result has dimension V.rows().
  HermitianMatrix expand(const CMatrix& v) const;

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

 private:
  struct Trusted {};
  HermitianMatrix(CMatrix m, Trusted);

  CMatrix m_;

  friend HermitianMatrix hermitian_part(const CMatrix& m);
};

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, HermitianMatrix a);
HermitianMatrix operator*(HermitianMatrix a, double s);

// (M + M^*)/2 without any residual check.
HermitianMatrix hermitian_part(const CMatrix& m);

// Re Tr(A B), the real trace pairing on Hermitian matrices.
double inner(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // orthonormal columns

  HermitianMatrix reconstruct() const;
  // U f(diag) U^*.
  HermitianMatrix apply(const std::function<double(double)>& f) const;
  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }
};

SpectralDecomposition eigh(const HermitianMatrix& a);
// Checks the anti-Hermitian residual first (NonHermitianInput above 1e-8).
SpectralDecomposition eigh(const CMatrix& a);

double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);

// Eigenvalues at or below this are treated as exact zeros: 1e-12 (1 + |A|_F).
double zero_threshold(const HermitianMatrix& a);

bool is_psd(const HermitianMatrix& a, double tol = 1e-10);
// Throws NotPSD when the smallest eigenvalue is below -tol.
void require_psd(const HermitianMatrix& a, const char* what, double tol = 1e-10);

// Orthonormal basis (columns) of the range; eigenvalues above zero_threshold.
CMatrix range_basis(const HermitianMatrix& a);

// Density matrix: PSD with unit trace, both within 1e-10.
class State {
 public:
  explicit State(HermitianMatrix m);

  static State maximally_mixed(int d);
  // v v^* / |v|^2.
  static State pure(const CVector& v);
  static State diagonal(const std::vector<double>& p);
  // Rescales a PSD nonzero matrix to unit trace; clips tiny negative
  // eigenvalues caused by roundoff.
  static State normalized(const HermitianMatrix& m);

  int dim() const noexcept { return m_.dim(); }
  const HermitianMatrix& matrix() const noexcept { return m_; }

 private:
  HermitianMatrix m_;
};

// Tr(rho log A) with the kernel convention: -inf when rho has weight on
// ker A. NotPSD if A has an eigenvalue below -1e-8.
ExtReal rho_log_trace(const State& rho, const HermitianMatrix& a);

// Gradient G of A -> Tr(rho log A): Tr(rho log(A+tH)) = ... + t Tr(G H).
// SingularPoint when A has an eigenvalue <= 1e-10.
HermitianMatrix log_trace_gradient(const State& rho, const HermitianMatrix& a);

// Same, reusing a decomposition of A.
HermitianMatrix log_trace_gradient(const HermitianMatrix& rho, const SpectralDecomposition& a);

}  // namespace cornerlab
