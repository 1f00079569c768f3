#include "cornerlab/hermlin.hpp"

#include <cmath>
#include <string>

#include "cornerlab/errors.hpp"

namespace cornerlab {

namespace {

constexpr double kHermitianTol = 1e-8;
constexpr double kKernelWeightTol = 1e-10;
constexpr double kNotPsdTol = 1e-8;
constexpr double kSingularTol = 1e-10;

double anti_hermitian_residual(const CMatrix& m) {
  return (m - m.adjoint()).norm() / 2.0;
}

}  // namespace

HermitianMatrix::HermitianMatrix() : m_(CMatrix::Zero(1, 1)) {}

HermitianMatrix::HermitianMatrix(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    fail(ErrorCode::DimensionMismatch, "Hermitian matrix must be square with d >= 1");
  }
  const double res = anti_hermitian_residual(m);
  if (!std::isfinite(res) || res > kHermitianTol * std::max(1.0, m.norm())) {
    fail(ErrorCode::NonHermitianInput,
         "matrix is not Hermitian (residual " + format_g9(res) + ")");
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix::HermitianMatrix(CMatrix m, Trusted) : m_(std::move(m)) {}

HermitianMatrix hermitian_part(const CMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    fail(ErrorCode::DimensionMismatch, "Hermitian matrix must be square with d >= 1");
  }
  return HermitianMatrix((m + m.adjoint()) * 0.5, HermitianMatrix::Trusted{});
}

HermitianMatrix HermitianMatrix::zero(int d) {
  if (d < 1) fail(ErrorCode::DimensionMismatch, "dimension must be >= 1");
  return HermitianMatrix(CMatrix::Zero(d, d), Trusted{});
}

HermitianMatrix HermitianMatrix::identity(int d) {
  if (d < 1) fail(ErrorCode::DimensionMismatch, "dimension must be >= 1");
  return HermitianMatrix(CMatrix::Identity(d, d), Trusted{});
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& diag) {
  const int d = static_cast<int>(diag.size());
  if (d < 1) fail(ErrorCode::DimensionMismatch, "dimension must be >= 1");
  CMatrix m = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = diag[i];
  return HermitianMatrix(std::move(m), Trusted{});
}

HermitianMatrix HermitianMatrix::from_real(const Eigen::MatrixXd& m) {
  return HermitianMatrix(CMatrix(m.cast<Complex>()));
}

HermitianMatrix HermitianMatrix::outer(const CVector& v) {
  if (v.size() < 1) fail(ErrorCode::DimensionMismatch, "empty vector");
  return hermitian_part(v * v.adjoint());
}

double HermitianMatrix::trace() const { return m_.trace().real(); }

double HermitianMatrix::frobenius_norm() const { return m_.norm(); }

std::vector<double> HermitianMatrix::diag() const {
  std::vector<double> out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = m_(i, i).real();
  return out;
}

HermitianMatrix HermitianMatrix::compress(const CMatrix& v) const {
  if (v.rows() != m_.rows()) fail(ErrorCode::DimensionMismatch, "compress: row count mismatch");
  return hermitian_part(v.adjoint() * m_ * v);
}

HermitianMatrix HermitianMatrix::expand(const CMatrix& v) const {
  if (v.cols() != m_.rows()) fail(ErrorCode::DimensionMismatch, "expand: column count mismatch");
  return hermitian_part(v * m_ * v.adjoint());
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim() != dim()) fail(ErrorCode::DimensionMismatch, "dimension mismatch in +");
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.dim() != dim()) fail(ErrorCode::DimensionMismatch, "dimension mismatch in -");
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }

double inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "inner: dimension mismatch");
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (a.mat().array() * b.mat().array().conjugate()).sum().real();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  return hermitian_part(kron(a.mat(), b.mat()));
}

HermitianMatrix SpectralDecomposition::reconstruct() const {
  return hermitian_part(eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
                        eigenvectors.adjoint());
}

HermitianMatrix SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  Eigen::VectorXd fx(eigenvalues.size());
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) fx(i) = f(eigenvalues(i));
  return hermitian_part(eigenvectors * fx.cast<Complex>().asDiagonal() * eigenvectors.adjoint());
}

SpectralDecomposition eigh(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.mat());
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::InvalidArgument, "eigensolver did not converge");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition eigh(const CMatrix& a) { return eigh(HermitianMatrix(a)); }

double min_eigenvalue(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.mat(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double max_eigenvalue(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.mat(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(a.dim() - 1);
}

double zero_threshold(const HermitianMatrix& a) { return 1e-12 * (1.0 + a.frobenius_norm()); }

bool is_psd(const HermitianMatrix& a, double tol) { return min_eigenvalue(a) >= -tol; }

void require_psd(const HermitianMatrix& a, const char* what, double tol) {
  const double lo = min_eigenvalue(a);
  if (lo < -tol) {
    fail(ErrorCode::NotPSD,
         std::string(what) + " is not positive semidefinite (min eigenvalue " + format_g9(lo) + ")");
  }
}

CMatrix range_basis(const HermitianMatrix& a) {
  const auto sd = eigh(a);
  const double thr = zero_threshold(a);
  int first = 0;
  while (first < a.dim() && sd.eigenvalues(first) <= thr) ++first;
  return sd.eigenvectors.rightCols(a.dim() - first);
}

State::State(HermitianMatrix m) : m_(std::move(m)) {
  const double tr = m_.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    fail(ErrorCode::NotState, "state trace is " + format_g9(tr) + ", expected 1");
  }
  const double lo = min_eigenvalue(m_);
  if (lo < -1e-10) {
    fail(ErrorCode::NotState, "state has negative eigenvalue " + format_g9(lo));
  }
}

State State::maximally_mixed(int d) { return State(HermitianMatrix::identity(d) * (1.0 / d)); }

State State::pure(const CVector& v) {
  const double n2 = v.squaredNorm();
  if (n2 <= 0.0) fail(ErrorCode::NotState, "pure state from zero vector");
  return State(HermitianMatrix::outer(v) * (1.0 / n2));
}

State State::diagonal(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p) {
    if (x < -1e-12) fail(ErrorCode::NotState, "negative probability");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-10) fail(ErrorCode::NotState, "probabilities do not sum to 1");
  return State(HermitianMatrix::diagonal(p));
}

State State::normalized(const HermitianMatrix& m) {
  auto sd = eigh(m);
  if (sd.min() < -1e-8 * (1.0 + m.frobenius_norm())) {
    fail(ErrorCode::NotPSD, "cannot normalize a non-PSD matrix to a state");
  }
  const auto clipped = sd.apply([](double x) { return x > 0.0 ? x : 0.0; });
  const double tr = clipped.trace();
  if (tr <= 0.0) fail(ErrorCode::NotState, "cannot normalize a zero matrix to a state");
  return State(clipped * (1.0 / tr));
}

ExtReal rho_log_trace(const State& rho, const HermitianMatrix& a) {
  if (rho.dim() != a.dim()) fail(ErrorCode::DimensionMismatch, "rho_log_trace: dimension mismatch");
  const auto sd = eigh(a);
  if (sd.min() < -kNotPsdTol) {
    fail(ErrorCode::NotPSD, "rho_log_trace: A has eigenvalue " + format_g9(sd.min()));
  }
  const double thr = zero_threshold(a);
  const CMatrix rho_u = rho.matrix().mat() * sd.eigenvectors;
  double acc = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double w = sd.eigenvectors.col(i).dot(rho_u.col(i)).real();
    if (sd.eigenvalues(i) <= thr) {
      if (w > kKernelWeightTol) return ExtReal::neg_inf();
      continue;
    }
    acc += w * std::log(sd.eigenvalues(i));
  }
  return acc;
}

HermitianMatrix log_trace_gradient(const HermitianMatrix& rho, const SpectralDecomposition& sd) {
  const int d = static_cast<int>(sd.eigenvalues.size());
  if (rho.dim() != d) fail(ErrorCode::DimensionMismatch, "log_trace_gradient: dimension mismatch");
  if (sd.min() <= kSingularTol) {
    fail(ErrorCode::SingularPoint,
         "log_trace_gradient: eigenvalue " + format_g9(sd.min()) + " too close to 0");
  }
  const auto& a = sd.eigenvalues;
  CMatrix g = sd.eigenvectors.adjoint() * rho.mat() * sd.eigenvectors;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      double gamma;
      const double diff = a(k) - a(l);
      if (std::abs(diff) <= 1e-8 * std::max(a(k), a(l))) {
        gamma = 2.0 / (a(k) + a(l));
      } else {
        gamma = std::log(a(k) / a(l)) / diff;
      }
      g(k, l) *= gamma;
    }
  }
  return hermitian_part(sd.eigenvectors * g * sd.eigenvectors.adjoint());
}

HermitianMatrix log_trace_gradient(const State& rho, const HermitianMatrix& a) {
  return log_trace_gradient(rho.matrix(), eigh(a));
}

}  // namespace cornerlab
