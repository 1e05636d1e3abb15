#include "grasscurv/extrinsic.hpp"

#include <algorithm>
#include <cmath>

namespace grasscurv::extrinsic {

namespace {

// II is evaluated with its arguments in a canonical order so that
// II(X,Y) == II(Y,X) bit for bit.
bool block_less(const Matrix& a, const Matrix& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

NormalVector sff_blocks(const TangentVector& x, const TangentVector& y, double sign) {
  require_common_anchor(x.anchor(), y.anchor(), "second_fundamental_form");
  const bool swap = block_less(y.block(), x.block());
  const Matrix& a = swap ? y.block() : x.block();
  const Matrix& b = swap ? x.block() : y.block();
  const Matrix left = a * b.transpose();
  const Matrix right = a.transpose() * b;
  const Matrix h1 = -0.5 * sign * (left + left.transpose());
  const Matrix h2 = 0.5 * sign * (right + right.transpose());
  return NormalVector::from_blocks(x.anchor(), h1, h2);
}

TangentVector shape_operator(const NormalVector& h, const TangentVector& x, double sign) {
  require_common_anchor(h.anchor(), x.anchor(), "weingarten");
  const Matrix b = 0.5 * sign * (x.block() * h.block2() - h.block1() * x.block());
  return TangentVector::from_block(x.anchor(), b);
}

}  // namespace

double first_fundamental_form(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "first_fundamental_form");
  return trace_inner(x.matrix(), y.matrix());
}

NormalVector second_fundamental_form(const TangentVector& x, const TangentVector& y) {
  return sff_blocks(x, y, 1.0);
}

NormalVector GaussMap::project(const SymMatrix& w) const { return project_normal(anchor, w); }

GaussMap gauss_map(const GrassmannPoint& at) {
  const int k = at.k();
  const int nk = at.n() - k;
  GaussMap g{at, {}};
  const double s = 1.0 / std::sqrt(2.0);

  auto symmetric_units = [s](int d) {
    std::vector<Matrix> units;
    for (int a = 0; a < d; ++a) {
      Matrix e = Matrix::Zero(d, d);
      e(a, a) = 1.0;
      units.push_back(e);
    }
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        Matrix e = Matrix::Zero(d, d);
        e(a, b) = s;
        e(b, a) = s;
        units.push_back(e);
      }
    }
    return units;
  };

  for (const Matrix& e : symmetric_units(k)) {
    g.basis.push_back(NormalVector::from_blocks(at, e, Matrix::Zero(nk, nk)));
  }
  for (const Matrix& e : symmetric_units(nk)) {
    g.basis.push_back(NormalVector::from_blocks(at, Matrix::Zero(k, k), e));
  }
  return g;
}

TangentVector weingarten(const NormalVector& h, const TangentVector& x) {
  return shape_operator(h, x, 1.0);
}

PrincipalSpectrum principal_curvatures(const GrassmannPoint& at, const NormalVector& h) {
  require_common_anchor(at, h.anchor(), "principal_curvatures");
  const int k = at.k();
  const int nk = at.n() - k;
  const SymEig e1 = sym_eig(SymMatrix(h.block1()));
  const SymEig e2 = sym_eig(SymMatrix(h.block2()));
  const double s = std::sqrt(2.0) / 2.0;

  PrincipalSpectrum out;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < nk; ++j) {
      out.values.push_back(0.5 * (e2.values(j) - e1.values(i)));
      // Q1 E_ij Q2^T is the rank-one outer product of the eigenvectors.
      const Matrix b = s * e1.vectors.col(i) * e2.vectors.col(j).transpose();
      out.directions.push_back(TangentVector::from_block(at, b));
    }
  }
  return out;
}

double gaussian_curvature(const GrassmannPoint& at, const NormalVector& h) {
  require_common_anchor(at, h.anchor(), "gaussian_curvature");
  const Vector l1 = sym_eig(SymMatrix(h.block1())).values;
  const Vector l2 = sym_eig(SymMatrix(h.block2())).values;
  double prod = 1.0;
  for (Eigen::Index i = 0; i < l1.size(); ++i) {
    for (Eigen::Index j = 0; j < l2.size(); ++j) {
      prod *= 0.5 * (l2(j) - l1(i));
    }
  }
  return prod;
}

NormalVector mean_curvature_vector(const GrassmannPoint& at) {
  const int k = at.k();
  const int nk = at.n() - k;
  const double m = at.dim();
  return NormalVector::from_blocks(at, Matrix::Identity(k, k) * (-nk / (2.0 * m)),
                                   Matrix::Identity(nk, nk) * (k / (2.0 * m)));
}

double mean_curvature_scalar(const GrassmannPoint& at, const NormalVector& h) {
  require_common_anchor(at, h.anchor(), "mean_curvature_scalar");
  const double k = at.k();
  const double n = at.n();
  return ((k - n) * h.block1().trace() + k * h.block2().trace()) / (2.0 * at.dim());
}

double third_fundamental_form_closed(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "third_fundamental_form_closed");
  const double n = x.anchor().n();
  const double m = x.anchor().dim();
  return -0.5 * (n / (2.0 * m) + (n - 2.0) / 4.0) * trace_inner(x.matrix(), y.matrix());
}

TangentVector gauss_obata(const TangentVector& x) {
  const GaussMap g = gauss_map(x.anchor());
  Matrix acc = Matrix::Zero(x.block().rows(), x.block().cols());
  for (const NormalVector& eta : g.basis) {
    acc += weingarten(eta, weingarten(eta, x)).block();
  }
  return TangentVector::from_block(x.anchor(), acc);
}

double third_fundamental_form_definition(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "third_fundamental_form_definition");
  return trace_inner(gauss_obata(x).matrix(), y.matrix());
}

int relative_nullity_index(const GrassmannPoint& at) {
  const TangentBasis basis = tangent_basis(at);
  const GaussMap g = gauss_map(at);
  const auto m = static_cast<Eigen::Index>(basis.size());
  const auto d = static_cast<Eigen::Index>(g.basis.size());

  Matrix flat(m, m * d);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      const NormalVector h = second_fundamental_form(basis[a], basis[b]);
      for (Eigen::Index c = 0; c < d; ++c) {
        flat(a, b * d + c) = trace_inner(h.matrix(), g.basis[c].matrix());
      }
    }
  }
  const Vector sigma = Eigen::JacobiSVD<Matrix>(flat).singularValues();
  const double smax = sigma.size() > 0 ? sigma.maxCoeff() : 0.0;
  int small = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma(i) > kNullityThreshold * smax)) ++small;
  }
  return small;
}

namespace printed {

NormalVector second_fundamental_form(const TangentVector& x, const TangentVector& y) {
  return sff_blocks(x, y, -1.0);
}

TangentVector weingarten(const NormalVector& h, const TangentVector& x) {
  return shape_operator(h, x, -1.0);
}

}  // namespace printed

}  // namespace grasscurv::extrinsic
