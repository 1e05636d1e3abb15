#pragma once

// The involution model of the Grassmannian:
//
//   Gr(k,n) = { Q symmetric : Q^2 = I, tr Q = 2k - n }.
//
// A point Q = V I_{k,n-k} V^T carries a cached eigenframe V. Tangent vectors
// are the symmetric matrices anticommuting with Q, V [[0, X0], [X0^T, 0]] V^T;
// normal vectors commute with Q, V diag(H1, H2) V^T. The frame is not unique
// (any block rotation diag(O1, O2) works), so it stays an implementation
// detail: everything public is a function of the ambient matrices.

#include <memory>
#include <vector>

#include "grasscurv/matcore.hpp"

namespace grasscurv {

/// Tolerance (times n) for the construction invariants of points.
inline constexpr double kPointTolerance = 1e-10;
/// Tolerance (relative to max(1, |X|)) for tangent/normal shape checks.
inline constexpr double kShapeTolerance = 1e-10;

class GrassmannPoint {
 public:
  /// Validates Q^2 = I and tr Q = 2k - n, then computes the frame.
  static GrassmannPoint from_matrix(const SymMatrix& q, int k);
  /// I_{k,n-k} = diag(I_k, -I_{n-k}) with frame I_n.
  static GrassmannPoint standard(int k, int n);

  int n() const { return state_->n; }
  int k() const { return state_->k; }
  /// Manifold dimension m = k(n-k).
  int dim() const { return state_->k * (state_->n - state_->k); }

  const SymMatrix& matrix() const { return state_->q; }
  /// Orthogonal V with Q = V I_{k,n-k} V^T; +1 eigenvectors first.
  const Matrix& frame() const { return state_->v; }

  /// V^T A V.
  Matrix to_frame(const Matrix& a) const;
  /// V B V^T, symmetrized.
  SymMatrix from_frame(const Matrix& b) const;

  /// True when both refer to the same point (shared state or identical Q).
  bool same_as(const GrassmannPoint& other) const;

 private:
  struct State {
    int n;
    int k;
    SymMatrix q;
    Matrix v;
  };
  explicit GrassmannPoint(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  std::shared_ptr<const State> state_;
};

class TangentVector {
 public:
  /// V [[0, X0], [X0^T, 0]] V^T for a k x (n-k) block X0.
  static TangentVector from_block(const GrassmannPoint& at, const Matrix& x0);
  /// Validates XQ + QX = 0 and extracts X0.
  static TangentVector from_matrix(const GrassmannPoint& at, const SymMatrix& x);

  const GrassmannPoint& anchor() const { return anchor_; }
  const SymMatrix& matrix() const { return x_; }
  const Matrix& block() const { return x0_; }
  double norm() const { return x_.norm(); }

  friend TangentVector operator+(const TangentVector& a, const TangentVector& b);
  friend TangentVector operator-(const TangentVector& a, const TangentVector& b);
  friend TangentVector operator*(double s, const TangentVector& a);

 private:
  TangentVector(GrassmannPoint at, SymMatrix x, Matrix x0)
      : anchor_(std::move(at)), x_(std::move(x)), x0_(std::move(x0)) {}
  GrassmannPoint anchor_;
  SymMatrix x_;
  Matrix x0_;
};

class NormalVector {
 public:
  /// V diag(H1, H2) V^T; the blocks are symmetrized.
  static NormalVector from_blocks(const GrassmannPoint& at, const Matrix& h1, const Matrix& h2);
  /// Validates HQ - QH = 0 and extracts H1, H2.
  static NormalVector from_matrix(const GrassmannPoint& at, const SymMatrix& h);

  const GrassmannPoint& anchor() const { return anchor_; }
  const SymMatrix& matrix() const { return h_; }
  const Matrix& block1() const { return h1_; }
  const Matrix& block2() const { return h2_; }
  double norm() const { return h_.norm(); }

  friend NormalVector operator+(const NormalVector& a, const NormalVector& b);
  friend NormalVector operator-(const NormalVector& a, const NormalVector& b);
  friend NormalVector operator*(double s, const NormalVector& a);

 private:
  NormalVector(GrassmannPoint at, SymMatrix h, Matrix h1, Matrix h2)
      : anchor_(std::move(at)), h_(std::move(h)), h1_(std::move(h1)), h2_(std::move(h2)) {}
  GrassmannPoint anchor_;
  SymMatrix h_;
  Matrix h1_;
  Matrix h2_;
};

/// Orthonormal basis (sqrt(2)/2) V [[0, E_ij], [E_ij^T, 0]] V^T, (i,j) lexicographic.
struct TangentBasis {
  GrassmannPoint anchor;
  std::vector<TangentVector> vectors;

  std::size_t size() const { return vectors.size(); }
  const TangentVector& operator[](std::size_t i) const { return vectors[i]; }
  /// Coordinates of X in this basis.
  Vector coordinates(const TangentVector& x) const;
  /// Tangent vector with the given coordinates.
  TangentVector combine(const Vector& coords) const;
};

/// Throws AnchorError unless the two anchors coincide.
void require_common_anchor(const GrassmannPoint& a, const GrassmannPoint& b, const char* what);

GrassmannPoint point_from_matrix(const SymMatrix& q, int k);
/// U I_{k,n-k} U^T for Haar U.
GrassmannPoint point_random(int n, int k, Rng& rng);

/// (W - QWQ)/2.
TangentVector project_tangent(const GrassmannPoint& at, const SymMatrix& w);
/// (W + QWQ)/2.
NormalVector project_normal(const GrassmannPoint& at, const SymMatrix& w);

TangentVector tangent_random(const GrassmannPoint& at, Rng& rng);
NormalVector normal_random(const GrassmannPoint& at, Rng& rng);

TangentBasis tangent_basis(const GrassmannPoint& at);

/// The one-parameter group exp(t Omega) with Omega = [X, Q]/4 (the skew
/// generator V [[0, -X0/2], [X0^T/2, 0]] V^T), which moves the anchor along the
/// geodesic with initial velocity X and carries vectors along it.
class Transvection {
 public:
  Transvection(const TangentVector& direction, double t);

  const GrassmannPoint& start() const { return start_; }
  /// gamma(t) = exp(t Omega) Q exp(-t Omega).
  const GrassmannPoint& end() const { return end_; }
  const Matrix& rotation() const { return rotation_; }

  TangentVector carry(const TangentVector& y) const;
  NormalVector carry(const NormalVector& h) const;
  /// U A U^T for an arbitrary symmetric A.
  SymMatrix conjugate(const SymMatrix& a) const;

 private:
  GrassmannPoint start_;
  GrassmannPoint end_;
  Matrix rotation_;
};

/// Skew generator of the geodesic with initial velocity X: [X, Q]/4.
SkewMatrix geodesic_generator(const TangentVector& x);

GrassmannPoint geodesic(const GrassmannPoint& at, const TangentVector& x, double t);
TangentVector transport(const GrassmannPoint& at, const TangentVector& x, const TangentVector& y,
                        double t);

}  // namespace grasscurv
