#pragma once

// Dense real matrix kernel: symmetric / skew-symmetric value types and the
// handful of factorizations the rest of the library is built on.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "grasscurv/errors.hpp"

namespace grasscurv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Rng = std::mt19937_64;

/// Symmetric n x n matrix. Symmetry is enforced on construction by (A + A^T)/2,
/// so entries(i,j) == entries(j,i) holds bit for bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(const Matrix& a);

  static SymMatrix zero(Eigen::Index n);
  static SymMatrix identity(Eigen::Index n);
  static SymMatrix diagonal(const Vector& d);

  Eigen::Index order() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  double norm() const { return m_.norm(); }
  double trace() const { return m_.trace(); }

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(double s, const SymMatrix& a);
  friend SymMatrix operator-(const SymMatrix& a);

 private:
  Matrix m_;
};

/// Skew-symmetric n x n matrix with exactly zero diagonal.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(const Matrix& a);

  Eigen::Index order() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  double norm() const { return m_.norm(); }

  friend SkewMatrix operator*(double s, const SkewMatrix& a);
  friend SkewMatrix operator-(const SkewMatrix& a);

 private:
  Matrix m_;
};

/// tr(AB), the trace inner product on symmetric matrices.
double trace_inner(const SymMatrix& a, const SymMatrix& b);

/// AB - BA. Skew because both operands are symmetric.
SkewMatrix commutator(const SymMatrix& a, const SymMatrix& b);

struct SymEig {
  Vector values;   // descending
  Matrix vectors;  // orthogonal, column j pairs with values(j)
};

/// Eigendecomposition A = V diag(values) V^T with eigenvalues in descending order.
SymEig sym_eig(const SymMatrix& a);

/// Matrix exponential of a skew matrix (an orthogonal matrix).
Matrix skew_exp(const SkewMatrix& omega);

/// Haar-distributed element of O(n): QR of a standard normal matrix with the
/// signs of diag(R) folded into Q.
Matrix haar_orthogonal(Eigen::Index n, Rng& rng);

/// Deterministic generator for a (seed, stream) pair.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// n x n matrix of i.i.d. standard normals.
Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Frobenius distance of U^T U from the identity.
double orthogonality_defect(const Matrix& u);

}  // namespace grasscurv
