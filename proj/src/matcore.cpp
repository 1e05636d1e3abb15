#include "grasscurv/matcore.hpp"

#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace grasscurv {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
}

void require_same_order(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": order mismatch " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& a) {
  require_square(a, "SymMatrix");
  m_ = 0.5 * (a + a.transpose());
}

SymMatrix SymMatrix::zero(Eigen::Index n) { return SymMatrix(Matrix::Zero(n, n)); }

SymMatrix SymMatrix::identity(Eigen::Index n) { return SymMatrix(Matrix::Identity(n, n)); }

SymMatrix SymMatrix::diagonal(const Vector& d) { return SymMatrix(Matrix(d.asDiagonal())); }

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  require_same_order(a.order(), b.order(), "SymMatrix +");
  SymMatrix r;
  r.m_ = a.m_ + b.m_;
  return r;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  require_same_order(a.order(), b.order(), "SymMatrix -");
  SymMatrix r;
  r.m_ = a.m_ - b.m_;
  return r;
}

SymMatrix operator*(double s, const SymMatrix& a) {
  SymMatrix r;
  r.m_ = s * a.m_;
  return r;
}

SymMatrix operator-(const SymMatrix& a) {
  SymMatrix r;
  r.m_ = -a.m_;
  return r;
}

SkewMatrix::SkewMatrix(const Matrix& a) {
  require_square(a, "SkewMatrix");
  m_ = 0.5 * (a - a.transpose());
  m_.diagonal().setZero();
}

SkewMatrix operator*(double s, const SkewMatrix& a) {
  SkewMatrix r;
  r.m_ = s * a.m_;
  return r;
}

SkewMatrix operator-(const SkewMatrix& a) {
  SkewMatrix r;
  r.m_ = -a.m_;
  return r;
}

double trace_inner(const SymMatrix& a, const SymMatrix& b) {
  require_same_order(a.order(), b.order(), "trace_inner");
  // tr(AB) = sum_ij a_ij b_ji = sum_ij a_ij b_ij for symmetric B.
  return a.matrix().cwiseProduct(b.matrix()).sum();
}

SkewMatrix commutator(const SymMatrix& a, const SymMatrix& b) {
  require_same_order(a.order(), b.order(), "commutator");
  const Matrix ab = a.matrix() * b.matrix();
  // For symmetric A, B: BA = (AB)^T.
  return SkewMatrix(ab - ab.transpose());
}

SymEig sym_eig(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    // Eigen caps the tridiagonal QR at 30 iterations per eigenvalue.
    throw NumericError("sym_eig: no convergence after " + std::to_string(30 * a.order()) +
                       " QR iterations (order " + std::to_string(a.order()) + ")");
  }
  SymEig out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Matrix skew_exp(const SkewMatrix& omega) {
  Matrix u = omega.matrix().exp();
  if (!u.allFinite()) {
    throw NumericError("skew_exp: non-finite result");
  }
  return u;
}

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  // Row-major fill so the draw order is independent of Eigen's storage order.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      g(i, j) = normal(rng);
    }
  }
  return g;
}

Matrix haar_orthogonal(Eigen::Index n, Rng& rng) {
  if (n < 1) {
    throw DimensionError("haar_orthogonal: n must be >= 1");
  }
  const Matrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) {
      q.col(j) = -q.col(j);
    }
  }
  return q;
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

double orthogonality_defect(const Matrix& u) {
  return (u.transpose() * u - Matrix::Identity(u.cols(), u.cols())).norm();
}

}  // namespace grasscurv
