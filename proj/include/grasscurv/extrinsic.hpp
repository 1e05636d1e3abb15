#pragma once

// Extrinsic geometry of Gr(k,n) inside the symmetric matrices with the trace
// inner product: fundamental forms, Gauss and Weingarten maps, mean,
// principal and Gaussian curvatures, relative nullity.
//
// Sign convention. The second fundamental form is
//
//   II(X,Y) = 1/2 V diag(-(X0 Y0^T + Y0 X0^T), X0^T Y0 + Y0^T X0) V^T,
//
// which is the normal part of the ambient acceleration (on Gr(1,2), a circle
// of radius sqrt(2), II(X,X) points at the centre). The shape operator is the
// adjoint, S(H)X = 1/2 V [[0, X0 H2 - H1 X0], [., 0]] V^T. The opposite-sign
// pair is kept under `printed::` for the sign ledger only.

#include <vector>

#include "grasscurv/grassmann.hpp"

namespace grasscurv::extrinsic {

/// g(X,Y) = tr(XY) = 2 tr(X0^T Y0).
double first_fundamental_form(const TangentVector& x, const TangentVector& y);

NormalVector second_fundamental_form(const TangentVector& x, const TangentVector& y);

struct GaussMap {
  GrassmannPoint anchor;
  /// Orthonormal basis of the normal space: H1-block units (diagonal, then
  /// (E_ab + E_ba)/sqrt(2) for a < b), then the H2 block in the same order.
  std::vector<NormalVector> basis;

  NormalVector project(const SymMatrix& w) const;
};

GaussMap gauss_map(const GrassmannPoint& at);

/// Shape operator S(H) applied to X.
TangentVector weingarten(const NormalVector& h, const TangentVector& x);

struct PrincipalSpectrum {
  std::vector<double> values;             // kappa_ij, (i,j) lexicographic
  std::vector<TangentVector> directions;  // orthonormal eigen-tangents
};

/// kappa_ij = (lambda_{k+j} - lambda_i)/2 from the eigenvalues of H1 (lambda_i)
/// and H2 (lambda_{k+j}).
PrincipalSpectrum principal_curvatures(const GrassmannPoint& at, const NormalVector& h);

/// det S(H) = 2^{-m} prod_ij (lambda_{k+j} - lambda_i).
double gaussian_curvature(const GrassmannPoint& at, const NormalVector& h);

/// (1/m) tr II = 1/(2m) V diag(-(n-k) I_k, k I_{n-k}) V^T.
NormalVector mean_curvature_vector(const GrassmannPoint& at);

/// ((k-n) tr H1 + k tr H2) / (2m), i.e. tr S(H) / m.
double mean_curvature_scalar(const GrassmannPoint& at, const NormalVector& h);

/// Closed form as printed: -1/2 (n/(2m) + (n-2)/4) tr(XY).
double third_fundamental_form_closed(const TangentVector& x, const TangentVector& y);

/// Gauss-Obata operator sum_j S(eta_j)^2 over the Gauss-map basis.
TangentVector gauss_obata(const TangentVector& x);

/// <gauss_obata(X), Y>; equals (n+2)/8 tr(XY).
double third_fundamental_form_definition(const TangentVector& x, const TangentVector& y);

/// Singular-value threshold (relative to sigma_max) for the nullity count.
inline constexpr double kNullityThreshold = 1e-8;

/// Dimension of { X : II(X, .) = 0 }, from the SVD of the m x (m * dim N)
/// flattening of II in orthonormal coordinates.
int relative_nullity_index(const GrassmannPoint& at);

namespace printed {

/// 1/2 V diag(X0 Y0^T + Y0 X0^T, -(X0^T Y0 + Y0^T X0)) V^T.
NormalVector second_fundamental_form(const TangentVector& x, const TangentVector& y);
/// 1/2 V [[0, H1 X0 - X0 H2], [., 0]] V^T.
TangentVector weingarten(const NormalVector& h, const TangentVector& x);

}  // namespace printed

}  // namespace grasscurv::extrinsic
