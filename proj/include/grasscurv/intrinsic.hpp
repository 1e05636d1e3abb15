#pragma once

// Intrinsic curvature of Gr(k,n) in closed form. Throughout, m = k(n-k) is
// the manifold dimension; it is the "dimension" entering the Schouten, Weyl
// and Bach normalizations.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "grasscurv/grassmann.hpp"

namespace grasscurv::intrinsic {

/// Rie(X,Y,Z,W) = 1/2 tr((XY - YX) Z W). Rie(X,Y,Y,X) >= 0.
double riemann(const TangentVector& x, const TangentVector& y, const TangentVector& z,
               const TangentVector& w);

/// J(X,Y,Z,W) = 1/2 (Rie(X,Y,Z,W) + Rie(Z,Y,X,W))
///            = 1/2 [tr(XYZW) - tr(Y (XZ + ZX)/2 W)].
double jacobi(const TangentVector& x, const TangentVector& y, const TangentVector& z,
              const TangentVector& w);

/// Pairs whose Gram determinant is at most this times |X|^2 |Y|^2 are rejected.
inline constexpr double kDegeneratePlane = 1e-12;

/// |[X,Y]|^2 / (4 (|X|^2 |Y|^2 - tr(XY)^2)), in [0, 1/4].
double sectional(const TangentVector& x, const TangentVector& y);

/// (n-2)/8 tr(XY).
double ricci(const TangentVector& x, const TangentVector& y);

/// k(n-k)(n-2)/8.
double scalar_curvature(int k, int n);

/// Ric - (Sc/m) g; identically zero.
double traceless_ricci(const TangentVector& x, const TangentVector& y);

/// Symmetric bilinear form on one tangent space.
using BilinearForm = std::function<double(const TangentVector&, const TangentVector&)>;
/// Quadrilinear form on one tangent space.
using QuadrilinearForm = std::function<double(const TangentVector&, const TangentVector&,
                                              const TangentVector&, const TangentVector&)>;

/// Kulkarni-Nomizu product of two forms given as m x m coordinate matrices,
/// evaluated on coordinate vectors:
///   a(u,w) b(v,z) - a(u,z) b(v,w) - a(v,w) b(u,z) + a(v,z) b(u,w).
class KulkarniNomizu {
 public:
  KulkarniNomizu(Matrix alpha, Matrix beta);
  double operator()(const Vector& u, const Vector& v, const Vector& w, const Vector& z) const;

 private:
  Matrix alpha_;
  Matrix beta_;
};

KulkarniNomizu kulkarni_nomizu(const Matrix& alpha, const Matrix& beta);
/// Same product for forms given as functions of tangent vectors.
QuadrilinearForm kulkarni_nomizu(BilinearForm alpha, BilinearForm beta);

/// (n-2) / (16 (m-1)) tr(XY); requires m > 2.
double schouten(const TangentVector& x, const TangentVector& y);

/// Identically zero (Schouten is a constant multiple of g); requires m > 2.
double cotton(const TangentVector& u, const TangentVector& x, const TangentVector& y);

/// 1/2 tr((XY - YX) Z W) - (n-2)/(8(m-1)) (tr(XZ) tr(YW) - tr(XW) tr(YZ)).
/// Requires m > 2; returns 0 when m = 3.
double weyl(const TangentVector& x, const TangentVector& y, const TangentVector& z,
            const TangentVector& w);

/// (n-2)^2 / (32 (m-2)) tr(XY); requires m > 3.
double bach(const TangentVector& x, const TangentVector& y);

/// Largest r admitted by the delta-invariant formula: 2 floor(k/2) floor((n-k)/2).
int delta_max_planes(int k, int n);

struct DeltaInvariants {
  double upper;  // Sc - inf sum kappa = Sc
  double lower;  // Sc - sup sum kappa = Sc - r/4
};

DeltaInvariants delta_invariants(int k, int n, int r);

using Plane = std::pair<TangentVector, TangentVector>;

/// Orthonormal frames at I_{k,n-k} attaining the extremes of sum_j kappa(X_j, Y_j)
/// over r mutually orthogonal planes.
struct DeltaWitnesses {
  std::vector<Plane> curvature_max;  // sum kappa = r/4, certifies the lower invariant
  std::vector<Plane> curvature_min;  // sum kappa = 0, certifies the upper invariant
};

/// Frames built from 2x2 blocks of X0 placed on the block grid
/// (rows 2p..2p+1, columns 2q..2q+1), blocks taken lexicographically, two
/// planes per block.
DeltaWitnesses delta_witnesses(int k, int n, int r);

/// The eight 4x4 frames exactly as printed for Gr(2,4): first the set offered
/// for the upper bound of sum kappa, then the set offered for the lower bound.
/// The first set only reaches sum kappa = 1/4; see delta_witnesses for frames
/// that reach 1/2.
DeltaWitnesses printed_gr24_witnesses();

/// Sum of sectional curvatures over the planes.
double sectional_sum(const std::vector<Plane>& planes);

namespace printed {

/// tr(XYZW) - tr(Y (XZ + ZX)/2 W), twice the symmetrized Riemann tensor.
double jacobi(const TangentVector& x, const TangentVector& y, const TangentVector& z,
              const TangentVector& w);

}  // namespace printed

}  // namespace grasscurv::intrinsic
