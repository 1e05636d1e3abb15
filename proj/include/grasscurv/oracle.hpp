#pragma once

// Independent verification engines. Nothing here calls the closed forms of
// the extrinsic/intrinsic modules: the second fundamental form is taken from
// the ambient product -1/2 Q (XY + YX), curvatures from the Gauss equation and
// basis sums, and derivatives from central differences along geodesics.

#include <cstdint>
#include <functional>
#include <vector>

#include "grasscurv/grassmann.hpp"

namespace grasscurv::oracle {

struct FDConfig {
  double h = 1e-5;
  double tolerance = 1e-6;

  /// Throws DomainError unless 1e-8 <= h <= 1e-2.
  void validate() const;
};

/// -1/2 Q (XY + YX): II read off the ambient matrices, no frame involved.
NormalVector ambient_sff(const TangentVector& x, const TangentVector& y);

/// Normal part of d/dt [ Pi_{gamma(t)} Y ] at t = 0, where Pi projects onto
/// the tangent space at gamma(t) = geodesic(P, X, t) and Y is held constant
/// in the ambient space. Inputs are normalized before differencing.
NormalVector sff_fd(const TangentVector& x, const TangentVector& y, const FDConfig& cfg = {});

/// A real-valued multilinear form on tangent vectors, defined at every point
/// (all arguments share one anchor).
struct TensorField {
  int arity = 0;
  std::function<double(const std::vector<TangentVector>&)> eval;

  double operator()(const std::vector<TangentVector>& args) const;
};

/// (nabla_U T)(V_1..V_r) = d/dt T_{gamma(t)}(tau_t V_1, ..., tau_t V_r) at t = 0,
/// gamma the geodesic with velocity U and tau its transvection.
TensorField covariant_derivative_fd(const TangentVector& u, const TensorField& t,
                                    const FDConfig& cfg = {});

/// sum_i (nabla_{e_i} T)(V_1..V_{r-1}, e_i) over the tangent basis at `at`.
TensorField divergence_fd(const GrassmannPoint& at, const TensorField& t,
                          const FDConfig& cfg = {});

/// <II(Y,Z), II(X,W)> - <II(X,Z), II(Y,W)> with the ambient II.
double gauss_riemann(const TangentVector& x, const TangentVector& y, const TangentVector& z,
                     const TangentVector& w);

/// sum_j Rie(X, e_j, e_j, Y), Rie from the Gauss equation.
double ricci_bruteforce(const TangentVector& x, const TangentVector& y);

/// tr Ric = sum_{j != l} kappa(e_j, e_l) = 2 sum_{j<l} kappa(e_j, e_l).
double scalar_bruteforce(const GrassmannPoint& at);

/// (Ric - Sc / (2(m-1)) g) / (m-2) from the basis sums. Needs m > 2.
double schouten_definition(const TangentVector& x, const TangentVector& y);

/// Ricci form in tangent-basis coordinates, m x m.
Matrix ricci_matrix(const GrassmannPoint& at);

/// Rie - Z ^ g / (m-2) - Sc / (2m(m-1)) g ^ g, with Z the traceless Ricci
/// and ^ the Kulkarni-Nomizu product, all from basis sums. Needs m > 2.
double weyl_decomposition(const TangentVector& x, const TangentVector& y, const TangentVector& z,
                          const TangentVector& w);

/// 1/(m-2) sum_ij Ric(e_i, e_j) W(X, e_i, e_j, Y) with W the decomposition
/// oracle (the Cotton term vanishes). Needs m > 3.
double bach_sum(const TangentVector& x, const TangentVector& y);

/// Matrix of <II(e_a, e_b), H> in the tangent basis: the shape operator S(H).
Matrix shape_operator_dense(const GrassmannPoint& at, const NormalVector& h);

/// Eigenvalues of shape_operator_dense, ascending.
std::vector<double> principal_dense(const GrassmannPoint& at, const NormalVector& h);

struct DeltaSearch {
  double max_found = 0.0;
  double min_found = 0.0;
  /// Frames (tangent vectors at I_{k,n-k}) realizing max_found / min_found.
  std::vector<std::pair<TangentVector, TangentVector>> max_frame;
  std::vector<std::pair<TangentVector, TangentVector>> min_frame;
  /// max_found <= r/4 + 1e-9.
  bool bound_respected = false;
  /// Whether the witness values r/4 and 0 were reached within 1e-3.
  bool reached_max = false;
  bool reached_min = false;
  int restarts = 0;
};

/// Proposals spent per restart of the hill climb.
inline constexpr int kSearchStepsPerRestart = 250;

/// Random orthonormal frames of r mutually orthogonal planes, refined by
/// pairwise Givens rotations, maximizing and minimizing sum_j kappa. Restart i
/// draws from stream (seed, i), so the result does not depend on the number of
/// worker threads (capped by GRASSCURV_THREADS).
DeltaSearch delta_search(int k, int n, int r, std::uint64_t seed, int iterations);

/// Worker count: hardware concurrency, capped by GRASSCURV_THREADS when set.
int worker_threads();

}  // namespace grasscurv::oracle
