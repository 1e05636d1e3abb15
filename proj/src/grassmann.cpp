#include "grasscurv/grassmann.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace grasscurv {

namespace {

Matrix signature(int k, int n) {
  Vector d = Vector::Constant(n, -1.0);
  d.head(k).setOnes();
  return d.asDiagonal();
}

void require_valid_k(int k, int n, const char* what) {
  if (n < 2 || k < 1 || k >= n) {
    std::ostringstream os;
    os << what << ": need 1 <= k < n, got k = " << k << ", n = " << n;
    throw DomainError(os.str());
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// GrassmannPoint

GrassmannPoint GrassmannPoint::from_matrix(const SymMatrix& q, int k) {
  const int n = static_cast<int>(q.order());
  require_valid_k(k, n, "point_from_matrix");
  const double tol = kPointTolerance * n;
  const Matrix& qm = q.matrix();

  const double involution = (qm * qm - Matrix::Identity(n, n)).norm();
  if (!(involution <= tol)) {
    throw ModelError("point_from_matrix: involution Q^2 = I violated, |Q^2 - I|_F = " +
                     fmt(involution));
  }
  const double trace_gap = std::abs(qm.trace() - (2.0 * k - n));
  if (!(trace_gap <= tol)) {
    throw ModelError("point_from_matrix: trace tr Q = " + fmt(qm.trace()) + " but 2k - n = " +
                     std::to_string(2 * k - n));
  }
  SymEig eig = sym_eig(q);
  // +1 eigenspace first, each eigenspace in ascending solver order, largest
  // entry of every column positive. Diagonal involutions get a permutation frame.
  Matrix v(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = j < k ? k - 1 - j : n - 1 - (j - k);
    v.col(j) = eig.vectors.col(src);
    Eigen::Index at = 0;
    v.col(j).cwiseAbs().maxCoeff(&at);
    if (v(at, j) < 0) v.col(j) = -v.col(j);
  }
  eig.vectors = std::move(v);
  const double frame_gap = (eig.vectors * signature(k, n) * eig.vectors.transpose() - qm).norm();
  if (!(frame_gap <= tol)) {
    throw ModelError("point_from_matrix: Q != V I_{k,n-k} V^T, residual " + fmt(frame_gap));
  }
  return GrassmannPoint(std::make_shared<State>(State{n, k, q, std::move(eig.vectors)}));
}

GrassmannPoint GrassmannPoint::standard(int k, int n) {
  require_valid_k(k, n, "GrassmannPoint::standard");
  return GrassmannPoint(std::make_shared<State>(
      State{n, k, SymMatrix(signature(k, n)), Matrix::Identity(n, n)}));
}

Matrix GrassmannPoint::to_frame(const Matrix& a) const {
  const Matrix& v = state_->v;
  return v.transpose() * a * v;
}

SymMatrix GrassmannPoint::from_frame(const Matrix& b) const {
  const Matrix& v = state_->v;
  return SymMatrix(v * b * v.transpose());
}

bool GrassmannPoint::same_as(const GrassmannPoint& other) const {
  if (state_ == other.state_) return true;
  return state_->k == other.state_->k && state_->n == other.state_->n &&
         state_->q.matrix() == other.state_->q.matrix();
}

void require_common_anchor(const GrassmannPoint& a, const GrassmannPoint& b, const char* what) {
  if (!a.same_as(b)) {
    throw AnchorError(std::string(what) + ": arguments are anchored at different points");
  }
}

// ---------------------------------------------------------------------------
// TangentVector

TangentVector TangentVector::from_block(const GrassmannPoint& at, const Matrix& x0) {
  const int n = at.n();
  const int k = at.k();
  if (x0.rows() != k || x0.cols() != n - k) {
    throw DimensionError("TangentVector: block must be " + std::to_string(k) + "x" +
                         std::to_string(n - k));
  }
  Matrix b = Matrix::Zero(n, n);
  b.topRightCorner(k, n - k) = x0;
  b.bottomLeftCorner(n - k, k) = x0.transpose();
  return TangentVector(at, at.from_frame(b), x0);
}

TangentVector TangentVector::from_matrix(const GrassmannPoint& at, const SymMatrix& x) {
  const int n = at.n();
  const int k = at.k();
  if (x.order() != n) {
    throw DimensionError("TangentVector: order " + std::to_string(x.order()) + " vs point order " +
                         std::to_string(n));
  }
  const Matrix& q = at.matrix().matrix();
  const double gap = (x.matrix() * q + q * x.matrix()).norm();
  if (!(gap <= kShapeTolerance * std::max(1.0, x.norm()))) {
    throw ModelError("TangentVector: XQ + QX = 0 violated, residual " + fmt(gap));
  }
  Matrix x0 = at.to_frame(x.matrix()).topRightCorner(k, n - k);
  return TangentVector(at, x, std::move(x0));
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require_common_anchor(a.anchor_, b.anchor_, "TangentVector +");
  return TangentVector(a.anchor_, a.x_ + b.x_, a.x0_ + b.x0_);
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
  require_common_anchor(a.anchor_, b.anchor_, "TangentVector -");
  return TangentVector(a.anchor_, a.x_ - b.x_, a.x0_ - b.x0_);
}

TangentVector operator*(double s, const TangentVector& a) {
  return TangentVector(a.anchor_, s * a.x_, s * a.x0_);
}

// ---------------------------------------------------------------------------
// NormalVector

NormalVector NormalVector::from_blocks(const GrassmannPoint& at, const Matrix& h1,
                                       const Matrix& h2) {
  const int n = at.n();
  const int k = at.k();
  if (h1.rows() != k || h1.cols() != k || h2.rows() != n - k || h2.cols() != n - k) {
    throw DimensionError("NormalVector: blocks must be " + std::to_string(k) + "x" +
                         std::to_string(k) + " and " + std::to_string(n - k) + "x" +
                         std::to_string(n - k));
  }
  const Matrix s1 = SymMatrix(h1).matrix();
  const Matrix s2 = SymMatrix(h2).matrix();
  Matrix b = Matrix::Zero(n, n);
  b.topLeftCorner(k, k) = s1;
  b.bottomRightCorner(n - k, n - k) = s2;
  return NormalVector(at, at.from_frame(b), s1, s2);
}

NormalVector NormalVector::from_matrix(const GrassmannPoint& at, const SymMatrix& h) {
  const int n = at.n();
  const int k = at.k();
  if (h.order() != n) {
    throw DimensionError("NormalVector: order " + std::to_string(h.order()) + " vs point order " +
                         std::to_string(n));
  }
  const Matrix& q = at.matrix().matrix();
  const double gap = (h.matrix() * q - q * h.matrix()).norm();
  if (!(gap <= kShapeTolerance * std::max(1.0, h.norm()))) {
    throw ModelError("NormalVector: HQ - QH = 0 violated, residual " + fmt(gap));
  }
  const Matrix f = at.to_frame(h.matrix());
  Matrix h1 = SymMatrix(f.topLeftCorner(k, k)).matrix();
  Matrix h2 = SymMatrix(f.bottomRightCorner(n - k, n - k)).matrix();
  return NormalVector(at, h, std::move(h1), std::move(h2));
}

NormalVector operator+(const NormalVector& a, const NormalVector& b) {
  require_common_anchor(a.anchor_, b.anchor_, "NormalVector +");
  return NormalVector(a.anchor_, a.h_ + b.h_, a.h1_ + b.h1_, a.h2_ + b.h2_);
}

NormalVector operator-(const NormalVector& a, const NormalVector& b) {
  require_common_anchor(a.anchor_, b.anchor_, "NormalVector -");
  return NormalVector(a.anchor_, a.h_ - b.h_, a.h1_ - b.h1_, a.h2_ - b.h2_);
}

NormalVector operator*(double s, const NormalVector& a) {
  return NormalVector(a.anchor_, s * a.h_, s * a.h1_, s * a.h2_);
}

// ---------------------------------------------------------------------------
// Basis

Vector TangentBasis::coordinates(const TangentVector& x) const {
  require_common_anchor(anchor, x.anchor(), "TangentBasis::coordinates");
  Vector c(static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    c(static_cast<Eigen::Index>(a)) = trace_inner(vectors[a].matrix(), x.matrix());
  }
  return c;
}

TangentVector TangentBasis::combine(const Vector& coords) const {
  if (coords.size() != static_cast<Eigen::Index>(vectors.size())) {
    throw DimensionError("TangentBasis::combine: expected " + std::to_string(vectors.size()) +
                         " coordinates");
  }
  const int k = anchor.k();
  const int nk = anchor.n() - k;
  Matrix x0(k, nk);
  const double s = std::sqrt(2.0) / 2.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < nk; ++j) {
      x0(i, j) = s * coords(i * nk + j);
    }
  }
  return TangentVector::from_block(anchor, x0);
}

TangentBasis tangent_basis(const GrassmannPoint& at) {
  const int k = at.k();
  const int nk = at.n() - k;
  TangentBasis basis{at, {}};
  basis.vectors.reserve(static_cast<std::size_t>(k * nk));
  const double s = std::sqrt(2.0) / 2.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < nk; ++j) {
      Matrix e = Matrix::Zero(k, nk);
      e(i, j) = s;
      basis.vectors.push_back(TangentVector::from_block(at, e));
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Constructors, projections, sampling

GrassmannPoint point_from_matrix(const SymMatrix& q, int k) {
  return GrassmannPoint::from_matrix(q, k);
}

GrassmannPoint point_random(int n, int k, Rng& rng) {
  require_valid_k(k, n, "point_random");
  const Matrix u = haar_orthogonal(n, rng);
  return GrassmannPoint::from_matrix(SymMatrix(u * signature(k, n) * u.transpose()), k);
}

TangentVector project_tangent(const GrassmannPoint& at, const SymMatrix& w) {
  if (w.order() != at.n()) {
    throw DimensionError("project_tangent: order mismatch");
  }
  const Matrix& q = at.matrix().matrix();
  const SymMatrix qwq(q * w.matrix() * q);
  return TangentVector::from_matrix(at, 0.5 * (w - qwq));
}

NormalVector project_normal(const GrassmannPoint& at, const SymMatrix& w) {
  if (w.order() != at.n()) {
    throw DimensionError("project_normal: order mismatch");
  }
  const Matrix& q = at.matrix().matrix();
  const SymMatrix qwq(q * w.matrix() * q);
  return NormalVector::from_matrix(at, 0.5 * (w + qwq));
}

TangentVector tangent_random(const GrassmannPoint& at, Rng& rng) {
  return TangentVector::from_block(at, gaussian_matrix(at.k(), at.n() - at.k(), rng));
}

NormalVector normal_random(const GrassmannPoint& at, Rng& rng) {
  const int k = at.k();
  const int nk = at.n() - k;
  const Matrix g1 = gaussian_matrix(k, k, rng);
  const Matrix g2 = gaussian_matrix(nk, nk, rng);
  return NormalVector::from_blocks(at, g1, g2);
}

// ---------------------------------------------------------------------------
// Geodesics and transport

SkewMatrix geodesic_generator(const TangentVector& x) {
  return 0.25 * commutator(x.matrix(), x.anchor().matrix());
}

Transvection::Transvection(const TangentVector& direction, double t)
    : start_(direction.anchor()), end_(direction.anchor()) {
  const int n = start_.n();
  if (t == 0.0) {
    rotation_ = Matrix::Identity(n, n);
    return;
  }
  rotation_ = skew_exp(t * geodesic_generator(direction));
  end_ = GrassmannPoint::from_matrix(conjugate(start_.matrix()), start_.k());
}

SymMatrix Transvection::conjugate(const SymMatrix& a) const {
  return SymMatrix(rotation_ * a.matrix() * rotation_.transpose());
}

TangentVector Transvection::carry(const TangentVector& y) const {
  require_common_anchor(start_, y.anchor(), "transport");
  if (end_.same_as(start_)) return y;
  return TangentVector::from_matrix(end_, conjugate(y.matrix()));
}

NormalVector Transvection::carry(const NormalVector& h) const {
  require_common_anchor(start_, h.anchor(), "transport");
  if (end_.same_as(start_)) return h;
  return NormalVector::from_matrix(end_, conjugate(h.matrix()));
}

GrassmannPoint geodesic(const GrassmannPoint& at, const TangentVector& x, double t) {
  require_common_anchor(at, x.anchor(), "geodesic");
  return Transvection(x, t).end();
}

TangentVector transport(const GrassmannPoint& at, const TangentVector& x, const TangentVector& y,
                        double t) {
  require_common_anchor(at, x.anchor(), "transport");
  require_common_anchor(at, y.anchor(), "transport");
  return Transvection(x, t).carry(y);
}

}  // namespace grasscurv
