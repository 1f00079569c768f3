#include "cornerlab/ncgraphs.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <complex>
#include <limits>
#include <numbers>

#include "cornerlab/errors.hpp"
#include "cornerlab/random.hpp"

namespace cornerlab {

namespace {

constexpr double kIndependenceTol = 1e-10;
constexpr double kIdentityTol = 1e-9;
constexpr double kClassifyTol = 1e-7;
constexpr double kSearchAccept = 1e-9;
constexpr int kMaxSystemDim = 64;

double real_inner(const CMatrix& a, const CMatrix& b) { return (a.adjoint() * b).trace().real(); }

HermitianMatrix unit_matrix(int d, int i, int j, bool imaginary) {
  CMatrix m = CMatrix::Zero(d, d);
  if (i == j) {
    m(i, i) = 1.0;
  } else if (!imaginary) {
    m(i, j) = 1.0;
    m(j, i) = 1.0;
  } else {
    m(i, j) = Complex(0.0, 1.0);
    m(j, i) = Complex(0.0, -1.0);
  }
  return HermitianMatrix(m);
}

HermitianMatrix projector_onto(const CMatrix& cols) { return hermitian_part(cols * cols.adjoint()); }

// Orthonormal columns spanning ran P.
CMatrix range_frame(const HermitianMatrix& p) {
  const auto sd = eigh(p);
  std::vector<int> keep;
  for (int i = 0; i < sd.eigenvalues.size(); ++i)
    if (sd.eigenvalues(i) > 0.5) keep.push_back(i);
  CMatrix v(p.dim(), static_cast<int>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) v.col(static_cast<int>(k)) = sd.eigenvectors.col(keep[k]);
  return v;
}

int rank_of(const HermitianMatrix& p) { return static_cast<int>(std::lround(p.trace())); }

bool diagonal_in(const HermitianMatrix& p, const CMatrix& frame) {
  CMatrix c = frame.adjoint() * p.mat() * frame;
  c.diagonal().setZero();
  return c.norm() <= 1e-9;
}

bool is_identity(const HermitianMatrix& p) {
  return (p.mat() - CMatrix::Identity(p.dim(), p.dim())).norm() <= 1e-9;
}

CMatrix dft_matrix(int d) {
  CMatrix f(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), 2.0 * std::numbers::pi * j * k / d);
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// OperatorSystem

OperatorSystem::OperatorSystem(int dim, std::vector<HermitianMatrix> basis)
    : OperatorSystem(dim, std::move(basis), false) {}

OperatorSystem::OperatorSystem(int dim, std::vector<HermitianMatrix> basis, bool filter_dependent)
    : dim_(dim), frame_(CMatrix::Identity(std::max(dim, 1), std::max(dim, 1))) {
  if (dim_ < 1) fail(ErrorCode::InvalidOperatorSystem, "operator system dimension must be >= 1");
  if (dim_ > kMaxSystemDim) fail(ErrorCode::DimOverflow, "operator system dimension exceeds 64");
  if (basis.empty()) fail(ErrorCode::InvalidOperatorSystem, "operator system needs a basis");
  for (auto& b : basis) {
    if (b.dim() != dim_) fail(ErrorCode::DimensionMismatch, "basis element has the wrong dimension");
    CMatrix v = b.mat();
    // Two Gram–Schmidt passes keep the basis orthonormal to roundoff.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : onb_) v -= real_inner(q.mat(), v) * q.mat();
    const double norm = v.norm();
    if (norm <= kIndependenceTol * std::max(1.0, b.frobenius_norm())) {
      if (filter_dependent) continue;
      fail(ErrorCode::InvalidOperatorSystem, "basis elements are linearly dependent");
    }
    onb_.push_back(hermitian_part(v / norm));
    basis_.push_back(b);
  }
  const double id_res = residual(CMatrix::Identity(dim_, dim_));
  if (id_res > kIdentityTol * std::sqrt(static_cast<double>(dim_))) {
    fail(ErrorCode::InvalidOperatorSystem, "the identity is not in the span");
  }
}

double OperatorSystem::residual(const CMatrix& x) const {
  CMatrix r = x;
  for (const auto& q : onb_) r -= (q.mat() * x).trace() * q.mat();
  return r.norm();
}

const OperatorSystem& OperatorSystem::factor(int i) const {
  if (!factors_ || i < 0 || i > 1) fail(ErrorCode::InvalidArgument, "not a tensor product system");
  return i == 0 ? factors_->first : factors_->second;
}

OperatorSystem OperatorSystem::conjugated(const CMatrix& u) const {
  if (u.rows() != dim_ || u.cols() != dim_ ||
      (u.adjoint() * u - CMatrix::Identity(dim_, dim_)).norm() > 1e-10) {
    fail(ErrorCode::NonOrthonormalBasis, "conjugation needs a unitary of matching size");
  }
  std::vector<HermitianMatrix> b;
  for (const auto& x : basis_) b.push_back(x.expand(u));
  OperatorSystem out(dim_, std::move(b));
  out.graph_ = graph_;
  out.builtin_ = builtin_;
  out.factors_ = factors_;
  out.frame_ = u * frame_;
  return out;
}

OperatorSystem OperatorSystem::forget_origin() const { return OperatorSystem(dim_, basis_); }

OperatorSystem OperatorSystem::from_graph(const Graph& g) {
  const int d = g.n();
  if (d > kMaxGraphVertices) fail(ErrorCode::TooLarge, "graph system limited to 32 vertices");
  std::vector<HermitianMatrix> b;
  for (int i = 0; i < d; ++i) b.push_back(unit_matrix(d, i, i, false));
  for (auto [i, j] : g.edges()) {
    b.push_back(unit_matrix(d, i, j, false));
    b.push_back(unit_matrix(d, i, j, true));
  }
  OperatorSystem s(d, std::move(b));
  s.graph_ = g;
  return s;
}

OperatorSystem opsys_from_graph(const Graph& g) { return OperatorSystem::from_graph(g); }

OperatorSystem OperatorSystem::builtin_system(BuiltinKind kind, int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "builtin systems need d >= 1");
  std::vector<HermitianMatrix> b{HermitianMatrix::identity(d)};
  if (kind == BuiltinKind::T && d > 1) {
    b.push_back(HermitianMatrix(CMatrix::Ones(d, d)));
  } else if (kind == BuiltinKind::S) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        b.push_back(unit_matrix(d, i, j, false));
        b.push_back(unit_matrix(d, i, j, true));
      }
  }
  OperatorSystem s(d, std::move(b));
  s.builtin_ = std::make_pair(kind, d);
  return s;
}

OperatorSystem tensor(const OperatorSystem& a, const OperatorSystem& b) {
  if (a.dim() * b.dim() > kMaxSystemDim) fail(ErrorCode::DimOverflow, "tensor product dimension exceeds 64");
  const CMatrix ia = CMatrix::Identity(a.dim(), a.dim());
  const CMatrix ib = CMatrix::Identity(b.dim(), b.dim());
  if (a.source_graph() && b.source_graph() && a.frame().isApprox(ia) && b.frame().isApprox(ib)) {
    return OperatorSystem::from_graph(strong_product(*a.source_graph(), *b.source_graph()));
  }
  std::vector<HermitianMatrix> basis;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) basis.push_back(kron(x, y));
  OperatorSystem out(a.dim() * b.dim(), std::move(basis), true);
  out.factors_ = std::make_shared<const std::pair<OperatorSystem, OperatorSystem>>(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Projection classification

ProjectionFlags classify_projection(const OperatorSystem& s, const HermitianMatrix& p,
                                    const std::optional<CMatrix>& frame) {
  if (p.dim() != s.dim()) fail(ErrorCode::DimensionMismatch, "projection has the wrong dimension");
  if (!is_projection(p)) fail(ErrorCode::NotProjection, "matrix is not a projection");
  ProjectionFlags f;
  const auto& onb = s.orthonormal_basis();
  std::vector<CMatrix> comp;
  comp.reserve(onb.size());
  for (const auto& b : onb) comp.push_back(p.mat() * b.mat() * p.mat());
  for (std::size_t k = 0; k < comp.size(); ++k)
    for (std::size_t l = k + 1; l < comp.size(); ++l) {
      f.abelian_residual = std::max(f.abelian_residual, (comp[k] * comp[l] - comp[l] * comp[k]).norm());
    }
  f.abelian = f.abelian_residual <= kClassifyTol;

  CMatrix v = frame ? *frame : range_frame(p);
  if (v.rows() != s.dim() || (v.adjoint() * v - CMatrix::Identity(v.cols(), v.cols())).norm() > 1e-8) {
    fail(ErrorCode::NonOrthonormalBasis, "frame columns are not orthonormal");
  }
  if ((projector_onto(v).mat() - p.mat()).norm() > 1e-7) {
    fail(ErrorCode::InvalidArgument, "frame does not span the range of P");
  }
  for (int a = 0; a < v.cols(); ++a)
    for (int b = 0; b < v.cols(); ++b) {
      const double r = s.residual(v.col(a) * v.col(b).adjoint());
      f.full_residual = std::max(f.full_residual, r);
      if (a != b) f.clique_residual = std::max(f.clique_residual, r);
    }
  f.full = f.full_residual <= kClassifyTol;
  f.clique_certified = f.clique_residual <= kClassifyTol;
  return f;
}

const char* proj_kind_name(ProjKind k) noexcept {
  switch (k) {
    case ProjKind::Abelian: return "abelian";
    case ProjKind::Clique: return "clique";
    case ProjKind::Full: return "full";
  }
  return "?";
}

const char* provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Combinatorial: return "combinatorial";
    case Provenance::ClosedForm: return "closed_form";
    case Provenance::Searched: return "searched";
    case Provenance::UserSupplied: return "user_supplied";
    case Provenance::Product: return "product";
  }
  return "?";
}

const char* exactness_name(Exactness e) noexcept {
  switch (e) {
    case Exactness::Exact: return "exact";
    case Exactness::InnerApprox: return "inner_approx";
    case Exactness::Heuristic: return "heuristic";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Families

GeneratedCorner ProjectionFamily::corner() const {
  if (empty()) return GeneratedCorner::zero(dim);
  std::vector<HermitianMatrix> g = projections;
  if (rank_one_closure) {
    for (int i = 0; i < closure_frame.cols(); ++i) g.push_back(projector_onto(closure_frame.col(i)));
  }
  return GeneratedCorner(dim, std::move(g));
}

GeneratedCorner ProjectionFamily::corner_for(const State& rho) const {
  if (!rank_one_closure) return corner();
  std::vector<HermitianMatrix> g = corner().generators();
  const auto sd = eigh(rho.matrix());
  for (int i = 0; i < sd.eigenvectors.cols(); ++i) g.push_back(projector_onto(sd.eigenvectors.col(i)));
  return GeneratedCorner(dim, std::move(g));
}

bool ProjectionFamily::entropy_exact(const State& rho) const {
  if (!rank_one_closure) return true;
  if (projections.empty()) return true;
  for (const auto& p : projections)
    if (is_identity(p)) return true;
  if (!diagonal_in(rho.matrix(), closure_frame)) return false;
  for (const auto& p : projections)
    if (!diagonal_in(p, closure_frame)) return false;
  return true;
}

namespace {

ProjectionFamily make_family(int d, ProjKind kind, Provenance prov) {
  ProjectionFamily f;
  f.dim = d;
  f.kind = kind;
  f.provenance = prov;
  f.rank_one_closure = kind != ProjKind::Full;
  f.closure_frame = CMatrix::Identity(d, d);
  return f;
}

void add_projection(ProjectionFamily& f, const CMatrix& frame) {
  f.projections.push_back(projector_onto(frame));
  f.frames.push_back(frame);
}

CMatrix coordinate_frame(int d, const VertexSet& s) {
  CMatrix v = CMatrix::Zero(d, static_cast<int>(s.size()));
  for (std::size_t k = 0; k < s.size(); ++k) v(s[k], static_cast<int>(k)) = 1.0;
  return v;
}

ProjectionFamily graph_family(const Graph& g, ProjKind kind) {
  ProjectionFamily f = make_family(g.n(), kind, Provenance::Combinatorial);
  const auto sets = kind == ProjKind::Abelian ? independent_sets(g, true) : maximal_cliques(g);
  for (const auto& s : sets) add_projection(f, coordinate_frame(g.n(), s));
  return f;
}

ProjectionFamily builtin_projection_family(BuiltinKind b, int d, ProjKind kind) {
  ProjectionFamily f = make_family(d, kind, Provenance::ClosedForm);
  const CMatrix id = CMatrix::Identity(d, d);
  if (d == 1) {
    add_projection(f, id);
    return f;
  }
  switch (b) {
    case BuiltinKind::CI:
      // Every compression of CI is scalar, so I is abelian; no rank-one vv^*
      // lies in CI, so there are no full projections and only trivial cliques.
      if (kind == ProjKind::Abelian) add_projection(f, id);
      break;
    case BuiltinKind::T:
      if (kind == ProjKind::Abelian) {
        add_projection(f, id);
      } else if (kind == ProjKind::Full) {
        add_projection(f, CVector::Ones(d) / std::sqrt(static_cast<double>(d)));
        if (d == 2) {
          CVector u(2);
          u << 1.0, -1.0;
          add_projection(f, u / std::sqrt(2.0));
        }
      }
      break;
    case BuiltinKind::S:
      if (kind == ProjKind::Clique) {
        add_projection(f, id);
      } else if (kind == ProjKind::Full) {
        // Flat unit vectors: the DFT basis is a full PVM.
        const CMatrix dft = dft_matrix(d);
        for (int k = 0; k < d; ++k) add_projection(f, dft.col(k));
        if (d == 2) {
          CVector u(2);
          u << 1.0, Complex(0.0, 1.0);
          add_projection(f, u / std::sqrt(2.0));
          u << 1.0, Complex(0.0, -1.0);
          add_projection(f, u / std::sqrt(2.0));
        }
      }
      break;
  }
  return f;
}

ProjectionFamily conjugate_family(ProjectionFamily f, const CMatrix& u) {
  for (auto& p : f.projections) p = p.expand(u);
  for (auto& fr : f.frames) fr = u * fr;
  f.closure_frame = u * f.closure_frame;
  return f;
}

bool is_new(const std::vector<HermitianMatrix>& seen, const HermitianMatrix& p) {
  for (const auto& q : seen)
    if ((q.mat() - p.mat()).norm() <= 1e-6) return false;
  return true;
}

bool certified(const OperatorSystem& s, ProjKind kind, const HermitianMatrix& p, const CMatrix& frame) {
  const auto flags = classify_projection(s, p, frame);
  switch (kind) {
    case ProjKind::Abelian: return flags.abelian;
    case ProjKind::Clique: return flags.clique_certified;
    case ProjKind::Full: return flags.full;
  }
  return false;
}

// Products of factor members that certify in the product system. Abelian and
// full kinds multiply directly; clique products need a full factor.
ProjectionFamily product_family(const OperatorSystem& s, ProjKind kind, const SearchConfig& search) {
  const OperatorSystem& a = s.factor(0);
  const OperatorSystem& b = s.factor(1);
  ProjectionFamily f = make_family(s.dim(), kind, Provenance::Product);
  f.exact = false;
  auto members = [&](const OperatorSystem& sys, ProjKind k) {
    const ProjectionFamily fam = projection_families(sys, k, search);
    std::vector<CMatrix> frames = fam.frames;
    if (fam.rank_one_closure)
      for (int i = 0; i < fam.closure_frame.cols(); ++i) frames.push_back(fam.closure_frame.col(i));
    return frames;
  };
  std::vector<std::pair<std::vector<CMatrix>, std::vector<CMatrix>>> combos;
  if (kind == ProjKind::Clique) {
    combos.emplace_back(members(a, ProjKind::Full), members(b, ProjKind::Clique));
    combos.emplace_back(members(a, ProjKind::Clique), members(b, ProjKind::Full));
  } else {
    combos.emplace_back(members(a, kind), members(b, kind));
  }
  for (const auto& [fa, fb] : combos)
    for (const auto& x : fa)
      for (const auto& y : fb) {
        if (x.cols() * y.cols() == 1 && f.rank_one_closure) continue;
        const CMatrix frame = kron(x, y);
        const HermitianMatrix p = projector_onto(frame);
        if (is_new(f.projections, p) && certified(s, kind, p, frame)) {
          f.projections.push_back(p);
          f.frames.push_back(frame);
        }
      }
  return f;
}

CMatrix orthonormalize(const CMatrix& v) {
  Eigen::HouseholderQR<CMatrix> qr(v);
  return qr.householderQ() * CMatrix::Identity(v.rows(), v.cols());
}

ProjectionFamily searched_family(const OperatorSystem& s, ProjKind kind, const SearchConfig& search) {
  const int d = s.dim();
  ProjectionFamily f = make_family(d, kind, Provenance::Searched);
  f.exact = false;
  const CMatrix id = CMatrix::Identity(d, d);
  if (certified(s, kind, HermitianMatrix::identity(d), id)) {
    add_projection(f, id);
    return f;
  }
  const int lowest = kind == ProjKind::Full ? 1 : 2;
  for (int rank = d - 1; rank >= lowest; --rank) {
    const Rng base = Rng(search.seed).split(static_cast<std::uint64_t>(rank));
    int found = 0;
    for (int restart = 0; restart < search.budget && found < d; ++restart) {
      SearchConfig one = search;
      one.budget = 1;
      one.seed = base.split(static_cast<std::uint64_t>(restart)).seed();
      auto hit = search_projection(s, kind, rank, one);
      if (hit && is_new(f.projections, hit->first)) {
        f.projections.push_back(hit->first);
        f.frames.push_back(hit->second);
        ++found;
        // The complement is often of the same kind (antipodal pairs).
        const CMatrix full = Eigen::HouseholderQR<CMatrix>(hit->second).householderQ();
        const CMatrix rest = full.rightCols(d - rank);
        const HermitianMatrix q = hermitian_part(rest * rest.adjoint());
        if (d - rank >= lowest && is_new(f.projections, q) && certified(s, kind, q, rest)) {
          f.projections.push_back(q);
          f.frames.push_back(rest);
          ++found;
        }
      }
    }
  }
  return f;
}

}  // namespace

double search_objective(const OperatorSystem& s, ProjKind kind, const CMatrix& v, CMatrix* grad) {
  const auto& onb = s.orthonormal_basis();
  const int k = static_cast<int>(v.cols());
  double f = 0.0;
  if (grad) grad->setZero(v.rows(), v.cols());
  if (kind == ProjKind::Abelian) {
    std::vector<CMatrix> c;
    c.reserve(onb.size());
    for (const auto& b : onb) c.push_back(v.adjoint() * b.mat() * v);
    std::vector<CMatrix> n(onb.size(), CMatrix::Zero(k, k));
    for (std::size_t j = 0; j < c.size(); ++j)
      for (std::size_t l = j + 1; l < c.size(); ++l) {
        const CMatrix comm = c[j] * c[l] - c[l] * c[j];
        f += comm.squaredNorm();
        if (grad) {
          const CMatrix ks = comm.adjoint();
          n[j] += 2.0 * (c[l] * ks - ks * c[l]);
          n[l] += 2.0 * (ks * c[j] - c[j] * ks);
        }
      }
    if (grad)
      for (std::size_t j = 0; j < onb.size(); ++j) *grad += 2.0 * onb[j].mat() * v * n[j];
    return f;
  }
  auto outside = [&](const CMatrix& x) {
    CMatrix r = x;
    for (const auto& q : onb) r -= (q.mat() * x).trace() * q.mat();
    return r;
  };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b && kind == ProjKind::Clique) continue;
      const CMatrix r = outside(v.col(a) * v.col(b).adjoint());
      f += r.squaredNorm();
      if (grad) {
        grad->col(a) += 2.0 * r * v.col(b);
        grad->col(b) += 2.0 * r.adjoint() * v.col(a);
      }
    }
  return f;
}

std::optional<std::pair<HermitianMatrix, CMatrix>> search_projection(const OperatorSystem& s,
                                                                     ProjKind kind, int rank,
                                                                     const SearchConfig& search) {
  const int d = s.dim();
  if (rank < 1 || rank > d) fail(ErrorCode::InvalidArgument, "search rank out of range");
  Rng rng(search.seed);
  for (int restart = 0; restart < search.budget; ++restart) {
    Rng local = rng.split(static_cast<std::uint64_t>(restart));
    CMatrix v(d, rank);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < rank; ++j) v(i, j) = Complex(local.normal(), local.normal());
    v = orthonormalize(v);
    CMatrix g;
    double f = search_objective(s, kind, v, &g);
    double step = 1.0;
    for (int it = 0; it < search.max_steps && std::sqrt(f) > kSearchAccept; ++it) {
      // Riemannian gradient on the Stiefel manifold, then a QR retraction.
      const CMatrix vg = v.adjoint() * g;
      const CMatrix rg = g - v * (0.5 * (vg + vg.adjoint()));
      const double slope = rg.squaredNorm();
      if (slope <= 1e-30) break;
      bool moved = false;
      while (step > 1e-12) {
        const CMatrix trial = orthonormalize(v - step * rg);
        CMatrix tg;
        const double ft = search_objective(s, kind, trial, &tg);
        if (ft <= f - 0.3 * step * slope) {
          v = trial;
          f = ft;
          g = tg;
          step *= 2.0;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    if (std::sqrt(f) > 1e-6) continue;
    v = orthonormalize(v);
    const HermitianMatrix p = snap_projection(projector_onto(v));
    if (certified(s, kind, p, v)) return std::make_pair(p, v);
  }
  return std::nullopt;
}

ProjectionFamily projection_families(const OperatorSystem& s, ProjKind kind, const SearchConfig& search) {
  if (s.source_graph()) return conjugate_family(graph_family(*s.source_graph(), kind), s.frame());
  if (auto b = s.builtin()) return conjugate_family(builtin_projection_family(b->first, b->second, kind), s.frame());
  if (s.is_tensor()) return conjugate_family(product_family(s, kind, search), s.frame());
  return searched_family(s, kind, search);
}

// ---------------------------------------------------------------------------
// Parameters

namespace {

NcValue from_family(ExtReal v, const ProjectionFamily& f) {
  return {v, f.exact ? Exactness::Exact : Exactness::InnerApprox};
}

double family_gamma(const ProjectionFamily& f) {
  if (f.empty()) return 0.0;
  int best = f.rank_one_closure ? 1 : 0;
  for (const auto& p : f.projections) best = std::max(best, rank_of(p));
  return best;
}

// Members simultaneously diagonal in one frame: the corner is a lifted
// diagonal corner, and covers and packings are linear programs.
std::optional<std::vector<std::vector<double>>> diagonal_members(const ProjectionFamily& f) {
  const int d = f.dim;
  const CMatrix frame = f.closure_frame.size() > 0 ? f.closure_frame : CMatrix::Identity(d, d);
  std::vector<std::vector<double>> v;
  for (const auto& p : f.projections) {
    if (!diagonal_in(p, frame)) return std::nullopt;
    v.push_back(p.compress(frame).diag());
  }
  if (f.rank_one_closure) {
    for (int i = 0; i < d; ++i) {
      std::vector<double> e(d, 0.0);
      e[i] = 1.0;
      v.push_back(e);
    }
  }
  return v;
}

// min sum w_k subject to sum w_k v_k >= 1 coordinatewise.
ExtReal cover_lp(const std::vector<std::vector<double>>& v, int d) {
  std::vector<LinearConstraint> rows(d);
  for (int i = 0; i < d; ++i) {
    rows[i].rel = Relation::GreaterEq;
    rows[i].rhs = 1.0;
    for (const auto& x : v) rows[i].coeffs.push_back(x[i]);
  }
  const LpResult r = lp_solve(std::vector<double>(v.size(), 1.0), rows, Sense::Minimize);
  if (r.status == Status::Infeasible) return ExtReal::pos_inf();
  return r.value;
}

// max sum x_i subject to <v_k, x> <= 1, x >= 0.
ExtReal packing_lp(const std::vector<std::vector<double>>& v, int d) {
  std::vector<LinearConstraint> rows;
  for (const auto& x : v) rows.push_back({x, Relation::LessEq, 1.0});
  const LpResult r = lp_solve(std::vector<double>(d, 1.0), rows, Sense::Maximize);
  if (r.status == Status::Unbounded) return ExtReal::pos_inf();
  return r.value;
}

ExtReal family_cover(const ProjectionFamily& f, const SolverConfig& cfg) {
  if (f.empty()) return ExtReal::pos_inf();
  if (const auto v = diagonal_members(f)) return cover_lp(*v, f.dim);
  const GeneratedCorner c = f.corner();
  if (n_param(c, cfg) <= 1e-9) return ExtReal::pos_inf();
  return gamma_f_cover(c, cfg);
}

// gamma of the anti-blocker by the support route.
ExtReal family_packing(const ProjectionFamily& f, const SolverConfig& cfg) {
  if (f.empty()) return ExtReal::pos_inf();
  if (const auto v = diagonal_members(f)) return packing_lp(*v, f.dim);
  return param_report(f.corner(), cfg).gamma_ab;
}

// Greedy integer cover: add the member that most raises the count of
// eigenvalues >= 1, then complete with rank-one projections if allowed.
ExtReal greedy_cover(const ProjectionFamily& f) {
  const int d = f.dim;
  if (f.empty()) return ExtReal::pos_inf();
  HermitianMatrix sum = HermitianMatrix::zero(d);
  auto covered = [](const HermitianMatrix& m) {
    const auto ev = eigh(m).eigenvalues;
    int c = 0;
    for (int i = 0; i < ev.size(); ++i) c += ev(i) >= 1.0 - 1e-9;
    return c;
  };
  int used = 0;
  int have = 0;
  while (have < d && used < 4 * d) {
    int best = have;
    const HermitianMatrix* pick = nullptr;
    for (const auto& p : f.projections) {
      HermitianMatrix t = sum;
      t += p;
      const int c = covered(t);
      if (c > best) {
        best = c;
        pick = &p;
      }
    }
    if (!pick) break;
    sum += *pick;
    have = best;
    ++used;
  }
  if (have == d) return used;
  if (!f.rank_one_closure) return ExtReal::pos_inf();
  return used + (d - have);
}

struct IntegerCovers {
  NcValue chi, Omega, Omega_tilde;
};

IntegerCovers integer_covers(const OperatorSystem& s, const ProjectionFamily& ap, const ProjectionFamily& cp,
                             const ProjectionFamily& fp) {
  IntegerCovers c;
  if (const auto& g = s.source_graph()) {
    const int cc = clique_cover_number(*g);
    c.chi = {chi_exact(*g), Exactness::Exact};
    c.Omega = {cc, Exactness::Exact};
    c.Omega_tilde = {cc, Exactness::Exact};
    return c;
  }
  if (auto b = s.builtin()) {
    const int d = b->second;
    const ExtReal inf = d == 1 ? ExtReal(1.0) : ExtReal::pos_inf();
    switch (b->first) {
      case BuiltinKind::CI:
        c.chi = {1.0, Exactness::Exact};
        c.Omega = {static_cast<double>(d), Exactness::Exact};
        c.Omega_tilde = {inf, Exactness::Exact};
        break;
      case BuiltinKind::T:
        c.chi = {1.0, Exactness::Exact};
        c.Omega = {static_cast<double>(d), Exactness::Exact};
        c.Omega_tilde = {d == 2 ? ExtReal(2.0) : inf, Exactness::Exact};
        break;
      case BuiltinKind::S:
        c.chi = {static_cast<double>(d), Exactness::Exact};
        c.Omega = {1.0, Exactness::Exact};
        c.Omega_tilde = {static_cast<double>(d), Exactness::Exact};
        break;
    }
    return c;
  }
  c.chi = {greedy_cover(ap), Exactness::Heuristic};
  c.Omega = {greedy_cover(cp), Exactness::Heuristic};
  c.Omega_tilde = {greedy_cover(fp), Exactness::Heuristic};
  return c;
}

}  // namespace

NcParams nc_params(const OperatorSystem& s, const SolverConfig& cfg, const SearchConfig& search) {
  const ProjectionFamily ap = projection_families(s, ProjKind::Abelian, search);
  const ProjectionFamily cp = projection_families(s, ProjKind::Clique, search);
  const ProjectionFamily fp = projection_families(s, ProjKind::Full, search);
  NcParams out;
  out.alpha = from_family(family_gamma(ap), ap);
  out.omega = from_family(family_gamma(cp), cp);
  out.omega_tilde = from_family(family_gamma(fp), fp);

  out.chi_f = from_family(family_cover(ap, cfg), ap);
  out.omega_f = from_family(family_packing(ap, cfg), ap);
  if (out.chi_f.value.is_finite() && out.omega_f.value.is_finite()) {
    const double x = out.chi_f.value.value();
    out.chi_f_omega_f_residual = std::abs(x - out.omega_f.value.value());
    if (out.chi_f_omega_f_residual > 1e-4 * std::max(1.0, x)) {
      fail(ErrorCode::AssertionFailed, "chi_f and omega_f disagree: " + format_g9(x) + " vs " +
                                           out.omega_f.value.to_string());
    }
  } else if (out.chi_f.value.is_finite() != out.omega_f.value.is_finite()) {
    fail(ErrorCode::AssertionFailed, "chi_f and omega_f disagree on finiteness");
  }

  out.Omega_f = from_family(family_cover(cp, cfg), cp);
  out.Omega_tilde_f = from_family(family_cover(fp, cfg), fp);

  const IntegerCovers ic = integer_covers(s, ap, cp, fp);
  out.chi = ic.chi;
  out.Omega = ic.Omega;
  out.Omega_tilde = ic.Omega_tilde;
  return out;
}

EntropyResult nc_graph_entropy(const OperatorSystem& s, const State& rho, const SolverConfig& cfg,
                               const SearchConfig& search) {
  if (rho.dim() != s.dim()) fail(ErrorCode::DimensionMismatch, "state and system dimensions differ");
  const ProjectionFamily ap = projection_families(s, ProjKind::Abelian, search);
  EntropyResult r = corner_entropy(ap.corner_for(rho), rho, cfg);
  r.exact = ap.exact && ap.entropy_exact(rho);
  const auto& g = s.source_graph();
  const int d = s.dim();
  if (g && s.frame().isApprox(CMatrix::Identity(d, d)) && diagonal_in(rho.matrix(), CMatrix::Identity(d, d))) {
    const double k = korner_entropy(*g, rho.matrix().diag(), cfg);
    if (!r.value.is_finite() || std::abs(r.value.value() - k) > 1e-3) {
      fail(ErrorCode::AssertionFailed, "graph-system entropy differs from the Korner entropy");
    }
  }
  return r;
}

CapacityReport capacity_bounds(const OperatorSystem& s, int n_max, const SolverConfig& cfg) {
  if (n_max < 1 || n_max > 2) fail(ErrorCode::InvalidArgument, "capacity_bounds needs 1 <= n_max <= 2");
  const NcParams p = nc_params(s, cfg);
  CapacityReport rep;
  rep.Omega_f = p.Omega_f.value;
  rep.Omega_tilde_f = p.Omega_tilde_f.value;
  const double a = p.alpha.value.value();
  const bool a_exact = p.alpha.exactness == Exactness::Exact;
  rep.lower.push_back(a);
  rep.lower_exact.push_back(a_exact);
  if (n_max >= 2) {
    const int d = s.dim();
    if (d * d > kMaxSystemDim) {
      rep.truncated = true;
      rep.note = "S^(x)2 has dimension " + std::to_string(d * d) + ", beyond 64";
    } else if (const auto& g = s.source_graph(); g && g->n() * g->n() <= kMaxGraphVertices) {
      rep.lower.push_back(std::sqrt(static_cast<double>(alpha(strong_product(*g, *g)))));
      rep.lower_exact.push_back(true);
    } else {
      // Products of abelian projections stay abelian: alpha(S)^2 is a lower
      // bound, and it is attained when alpha(S) = d.
      rep.lower.push_back(a);
      rep.lower_exact.push_back(a_exact && std::lround(a) == d);
    }
  }
  for (double l : rep.lower) {
    for (const ExtReal& up : {rep.Omega_f, rep.Omega_tilde_f}) {
      if (up.is_finite() && l > up.value() + 1e-6 * std::max(1.0, up.value())) {
        fail(ErrorCode::AssertionFailed, "capacity lower bound exceeds an upper bound");
      }
    }
  }
  return rep;
}

OperatorSystem builtin_family(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) fail(ErrorCode::UnknownName, "unknown builtin '" + name + "'");
  std::string kind = name.substr(0, colon);
  std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(name.substr(colon + 1), &used);
    if (used != name.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorCode::UnknownName, "bad dimension in builtin '" + name + "'");
  }
  if (d < 1 || d > kMaxSystemDim) fail(ErrorCode::UnknownName, "builtin dimension out of range in '" + name + "'");
  if (kind == "ci") return OperatorSystem::builtin_system(BuiltinKind::CI, d);
  if (kind == "t") return OperatorSystem::builtin_system(BuiltinKind::T, d);
  if (kind == "s") return OperatorSystem::builtin_system(BuiltinKind::S, d);
  fail(ErrorCode::UnknownName, "unknown builtin '" + name + "'");
}

std::vector<Section9Row> section9_rows(const std::string& family, const SolverConfig& cfg) {
  const OperatorSystem s = builtin_family(family);
  const auto [kind, d] = *s.builtin();
  const NcParams p = nc_params(s, cfg);
  const ExtReal inf = ExtReal::pos_inf();
  const double dd = d;
  std::vector<Section9Row> rows;
  auto add = [&](const char* name, const NcValue& v, ExtReal reference, bool solver_real) {
    Section9Row r;
    r.system = family;
    r.parameter = name;
    r.computed = v.value;
    r.reference = reference;
    if (reference.is_finite() && v.value.is_finite()) {
      r.delta = std::abs(v.value.value() - reference.value());
      r.pass = r.delta <= (solver_real ? 1e-4 : 0.0);
    } else {
      r.delta = reference == v.value ? 0.0 : std::numeric_limits<double>::infinity();
      r.pass = reference == v.value;
    }
    rows.push_back(r);
  };
  switch (kind) {
    case BuiltinKind::CI:
      add("alpha", p.alpha, dd, false);
      add("omega", p.omega, 1.0, false);
      add("chi_f", p.chi_f, 1.0, true);
      add("chi", p.chi, 1.0, false);
      add("Omega_f", p.Omega_f, dd, true);
      add("Omega", p.Omega, dd, false);
      add("omega_tilde", p.omega_tilde, d >= 2 ? 0.0 : 1.0, false);
      add("Omega_tilde_f", p.Omega_tilde_f, d >= 2 ? inf : ExtReal(1.0), true);
      add("Omega_tilde", p.Omega_tilde, d >= 2 ? inf : ExtReal(1.0), false);
      break;
    case BuiltinKind::T:
      add("alpha", p.alpha, dd, false);
      add("omega", p.omega, 1.0, false);
      add("chi_f", p.chi_f, 1.0, true);
      add("chi", p.chi, 1.0, false);
      add("Omega_f", p.Omega_f, dd, true);
      add("Omega", p.Omega, dd, false);
      if (d >= 2) {
        add("omega_tilde", p.omega_tilde, 1.0, false);
        add("Omega_tilde_f", p.Omega_tilde_f, d == 2 ? ExtReal(2.0) : inf, true);
        add("Omega_tilde", p.Omega_tilde, d == 2 ? ExtReal(2.0) : inf, false);
      }
      break;
    case BuiltinKind::S:
      add("Omega_f", p.Omega_f, 1.0, true);
      add("Omega", p.Omega, 1.0, false);
      add("chi", p.chi, dd, false);
      if (d == 2) {
        add("alpha", p.alpha, 1.0, false);
        add("omega", p.omega, 2.0, false);
        add("Omega_tilde_f", p.Omega_tilde_f, 2.0, true);
        add("Omega_tilde", p.Omega_tilde, 2.0, false);
      }
      break;
  }
  return rows;
}

}  // namespace cornerlab
