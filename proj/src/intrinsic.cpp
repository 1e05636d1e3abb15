#include "grasscurv/intrinsic.hpp"

#include <cmath>
#include <string>

namespace grasscurv::intrinsic {

namespace {

const Matrix& mat(const TangentVector& v) { return v.matrix().matrix(); }

double tr_product(const TangentVector& a, const TangentVector& b) {
  return trace_inner(a.matrix(), b.matrix());
}

void require_anchor4(const TangentVector& x, const TangentVector& y, const TangentVector& z,
                     const TangentVector& w, const char* what) {
  require_common_anchor(x.anchor(), y.anchor(), what);
  require_common_anchor(x.anchor(), z.anchor(), what);
  require_common_anchor(x.anchor(), w.anchor(), what);
}

void require_dim_above(const GrassmannPoint& p, int bound, const char* what) {
  if (p.dim() <= bound) {
    throw DomainError(std::string(what) + ": undefined for m = k(n-k) = " +
                      std::to_string(p.dim()) + " <= " + std::to_string(bound));
  }
}

void require_valid_kn(int k, int n, const char* what) {
  if (n < 2 || k < 1 || k >= n) {
    throw DomainError(std::string(what) + ": need 1 <= k < n, got k = " + std::to_string(k) +
                      ", n = " + std::to_string(n));
  }
}

}  // namespace

double riemann(const TangentVector& x, const TangentVector& y, const TangentVector& z,
               const TangentVector& w) {
  require_anchor4(x, y, z, w, "riemann");
  const Matrix c = mat(x) * mat(y) - mat(y) * mat(x);
  return 0.5 * (c * mat(z) * mat(w)).trace();
}

double jacobi(const TangentVector& x, const TangentVector& y, const TangentVector& z,
              const TangentVector& w) {
  require_anchor4(x, y, z, w, "jacobi");
  const Matrix xz = mat(x) * mat(z);
  const Matrix sym_xz = 0.5 * (xz + xz.transpose());
  return 0.5 * ((mat(x) * mat(y) * mat(z) * mat(w)).trace() - (mat(y) * sym_xz * mat(w)).trace());
}

double sectional(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "sectional");
  const double xx = tr_product(x, x);
  const double yy = tr_product(y, y);
  const double xy = tr_product(x, y);
  const double gram = xx * yy - xy * xy;
  if (!(gram > kDegeneratePlane * xx * yy) || xx == 0.0 || yy == 0.0) {
    throw DomainError("sectional: X and Y do not span a plane");
  }
  const double bracket = commutator(x.matrix(), y.matrix()).matrix().squaredNorm();
  return bracket / (4.0 * gram);
}

double ricci(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "ricci");
  const double n = x.anchor().n();
  return (n - 2.0) / 8.0 * tr_product(x, y);
}

double scalar_curvature(int k, int n) {
  require_valid_kn(k, n, "scalar_curvature");
  return static_cast<double>(k) * (n - k) * (n - 2) / 8.0;
}

double traceless_ricci(const TangentVector& x, const TangentVector& y) {
  const GrassmannPoint& p = x.anchor();
  return ricci(x, y) - scalar_curvature(p.k(), p.n()) / p.dim() * tr_product(x, y);
}

KulkarniNomizu::KulkarniNomizu(Matrix alpha, Matrix beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.rows() != alpha_.cols() || beta_.rows() != beta_.cols() ||
      alpha_.rows() != beta_.rows()) {
    throw DimensionError("kulkarni_nomizu: forms must be square and of equal size");
  }
}

double KulkarniNomizu::operator()(const Vector& u, const Vector& v, const Vector& w,
                                  const Vector& z) const {
  auto a = [this](const Vector& p, const Vector& q) { return p.dot(alpha_ * q); };
  auto b = [this](const Vector& p, const Vector& q) { return p.dot(beta_ * q); };
  return a(u, w) * b(v, z) - a(u, z) * b(v, w) - a(v, w) * b(u, z) + a(v, z) * b(u, w);
}

KulkarniNomizu kulkarni_nomizu(const Matrix& alpha, const Matrix& beta) {
  return KulkarniNomizu(alpha, beta);
}

QuadrilinearForm kulkarni_nomizu(BilinearForm alpha, BilinearForm beta) {
  return [alpha = std::move(alpha), beta = std::move(beta)](
             const TangentVector& u, const TangentVector& v, const TangentVector& w,
             const TangentVector& z) {
    return alpha(u, w) * beta(v, z) - alpha(u, z) * beta(v, w) - alpha(v, w) * beta(u, z) +
           alpha(v, z) * beta(u, w);
  };
}

double schouten(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "schouten");
  const GrassmannPoint& p = x.anchor();
  require_dim_above(p, 2, "schouten");
  const double n = p.n();
  const double m = p.dim();
  return (n - 2.0) / (16.0 * (m - 1.0)) * tr_product(x, y);
}

double cotton(const TangentVector& u, const TangentVector& x, const TangentVector& y) {
  require_common_anchor(u.anchor(), x.anchor(), "cotton");
  require_common_anchor(u.anchor(), y.anchor(), "cotton");
  require_dim_above(u.anchor(), 2, "cotton");
  return 0.0;
}

namespace printed {

double jacobi(const TangentVector& x, const TangentVector& y, const TangentVector& z,
              const TangentVector& w) {
  return 2.0 * intrinsic::jacobi(x, y, z, w);
}

}  // namespace printed

double weyl(const TangentVector& x, const TangentVector& y, const TangentVector& z,
            const TangentVector& w) {
  require_anchor4(x, y, z, w, "weyl");
  const GrassmannPoint& p = x.anchor();
  require_dim_above(p, 2, "weyl");
  // Three-dimensional manifolds have no Weyl tensor.
  if (p.dim() == 3) return 0.0;
  const double n = p.n();
  const double m = p.dim();
  const double coeff = (n - 2.0) / (8.0 * (m - 1.0));
  return riemann(x, y, z, w) -
         coeff * (tr_product(x, z) * tr_product(y, w) - tr_product(x, w) * tr_product(y, z));
}

double bach(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "bach");
  const GrassmannPoint& p = x.anchor();
  require_dim_above(p, 3, "bach");
  const double n = p.n();
  const double m = p.dim();
  return (n - 2.0) * (n - 2.0) / (32.0 * (m - 2.0)) * tr_product(x, y);
}

int delta_max_planes(int k, int n) {
  require_valid_kn(k, n, "delta_max_planes");
  return 2 * (k / 2) * ((n - k) / 2);
}

namespace {

void require_delta_range(int k, int n, int r, const char* what) {
  const int rmax = delta_max_planes(k, n);
  if (r < 1 || r > rmax) {
    throw DomainError(std::string(what) + ": r = " + std::to_string(r) +
                      " outside 1 <= r <= 2 floor(k/2) floor((n-k)/2) = " + std::to_string(rmax));
  }
}

Matrix block2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Each entry is one 2x2 block of X0 and its plane partner, two planes per block.
struct BlockFrame {
  Matrix x1, y1, x2, y2;
};

BlockFrame isoclinic_frame() {
  // Pairs {I, J} and {diag(1,-1), sigma_x} (scaled to unit norm) each span a
  // plane of curvature 1/4.
  return {block2(0.5, 0, 0, 0.5), block2(0, 0.5, -0.5, 0), block2(0.5, 0, 0, -0.5),
          block2(0, 0.5, 0.5, 0)};
}

BlockFrame flat_frame() {
  return {block2(0.5, 0, 0, 0.5), block2(0.5, 0, 0, -0.5), block2(0, 0.5, 0.5, 0),
          block2(0, 0.5, -0.5, 0)};
}

std::vector<Plane> embed_frames(int k, int n, int r, const BlockFrame& f) {
  const GrassmannPoint p = GrassmannPoint::standard(k, n);
  const int k2 = (n - k) / 2;
  const int k1 = k / 2;
  std::vector<Plane> planes;
  auto place = [&](const Matrix& b, int bp, int bq) {
    Matrix x0 = Matrix::Zero(k, n - k);
    x0.block(2 * bp, 2 * bq, 2, 2) = b;
    return TangentVector::from_block(p, x0);
  };
  for (int bp = 0; bp < k1 && static_cast<int>(planes.size()) < r; ++bp) {
    for (int bq = 0; bq < k2 && static_cast<int>(planes.size()) < r; ++bq) {
      planes.emplace_back(place(f.x1, bp, bq), place(f.y1, bp, bq));
      if (static_cast<int>(planes.size()) < r) {
        planes.emplace_back(place(f.x2, bp, bq), place(f.y2, bp, bq));
      }
    }
  }
  return planes;
}

}  // namespace

DeltaInvariants delta_invariants(int k, int n, int r) {
  require_delta_range(k, n, r, "delta_invariants");
  const double sc = scalar_curvature(k, n);
  return {sc, sc - r / 4.0};
}

DeltaWitnesses delta_witnesses(int k, int n, int r) {
  require_delta_range(k, n, r, "delta_witnesses");
  return {embed_frames(k, n, r, isoclinic_frame()), embed_frames(k, n, r, flat_frame())};
}

DeltaWitnesses printed_gr24_witnesses() {
  const double s = std::sqrt(2.0) / 2.0;
  const BlockFrame upper{block2(s, 0, 0, 0), block2(0, 0.5, 0.5, 0), block2(0, 0, 0, s),
                         block2(0, 0.5, -0.5, 0)};
  return {embed_frames(2, 4, 2, upper), embed_frames(2, 4, 2, flat_frame())};
}

double sectional_sum(const std::vector<Plane>& planes) {
  double sum = 0.0;
  for (const auto& [x, y] : planes) sum += sectional(x, y);
  return sum;
}

}  // namespace grasscurv::intrinsic
