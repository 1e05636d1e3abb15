#include "grasscurv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace grasscurv::oracle {

void FDConfig::validate() const {
  if (!(h >= 1e-8 && h <= 1e-2)) {
    throw DomainError("FDConfig: step h = " + std::to_string(h) + " outside [1e-8, 1e-2]");
  }
  if (!(tolerance > 0.0)) {
    throw DomainError("FDConfig: tolerance must be positive");
  }
}

namespace {

Matrix ambient_sff_matrix(const Matrix& q, const Matrix& x, const Matrix& y) {
  return -0.5 * q * (x * y + y * x);
}

double inner(const Matrix& a, const Matrix& b) { return a.cwiseProduct(b).sum(); }

}  // namespace

NormalVector ambient_sff(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "ambient_sff");
  const Matrix& q = x.anchor().matrix().matrix();
  return NormalVector::from_matrix(
      x.anchor(), SymMatrix(ambient_sff_matrix(q, x.matrix().matrix(), y.matrix().matrix())));
}

NormalVector sff_fd(const TangentVector& x, const TangentVector& y, const FDConfig& cfg) {
  cfg.validate();
  require_common_anchor(x.anchor(), y.anchor(), "sff_fd");
  const GrassmannPoint& p = x.anchor();
  const double sx = x.norm();
  const double sy = y.norm();
  const int n = p.n();
  if (sx == 0.0 || sy == 0.0) {
    return NormalVector::from_matrix(p, SymMatrix::zero(n));
  }
  const TangentVector xn = (1.0 / sx) * x;
  const Matrix yn = y.matrix().matrix() / sy;

  auto projected = [&](double t) {
    const Transvection tv(xn, t);
    const Matrix& qt = tv.end().matrix().matrix();
    return Matrix(0.5 * (yn - qt * yn * qt));
  };
  const Matrix diff = (projected(cfg.h) - projected(-cfg.h)) / (2.0 * cfg.h);
  const NormalVector dn = project_normal(p, SymMatrix(diff));
  return (sx * sy) * dn;
}

double TensorField::operator()(const std::vector<TangentVector>& args) const {
  if (static_cast<int>(args.size()) != arity) {
    throw DimensionError("TensorField: expected " + std::to_string(arity) + " arguments, got " +
                         std::to_string(args.size()));
  }
  return eval(args);
}

TensorField covariant_derivative_fd(const TangentVector& u, const TensorField& t,
                                    const FDConfig& cfg) {
  cfg.validate();
  const double su = u.norm();
  TensorField out;
  out.arity = t.arity;
  out.eval = [u, su, t, cfg](const std::vector<TangentVector>& args) {
    for (const auto& a : args) require_common_anchor(u.anchor(), a.anchor(), "covariant_derivative_fd");
    if (su == 0.0) return 0.0;
    const TangentVector un = (1.0 / su) * u;
    auto moved = [&](double s) {
      const Transvection tv(un, s);
      std::vector<TangentVector> carried;
      carried.reserve(args.size());
      for (const auto& a : args) carried.push_back(tv.carry(a));
      return t(carried);
    };
    return su * (moved(cfg.h) - moved(-cfg.h)) / (2.0 * cfg.h);
  };
  return out;
}

TensorField divergence_fd(const GrassmannPoint& at, const TensorField& t, const FDConfig& cfg) {
  if (t.arity < 1) throw DimensionError("divergence_fd: tensor needs at least one slot");
  const TangentBasis basis = tangent_basis(at);
  std::vector<TensorField> derivs;
  derivs.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    derivs.push_back(covariant_derivative_fd(basis[i], t, cfg));
  }
  TensorField out;
  out.arity = t.arity - 1;
  out.eval = [basis, derivs](const std::vector<TangentVector>& args) {
    double sum = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<TangentVector> full = args;
      full.push_back(basis[i]);
      sum += derivs[i](full);
    }
    return sum;
  };
  return out;
}

double gauss_riemann(const TangentVector& x, const TangentVector& y, const TangentVector& z,
                     const TangentVector& w) {
  require_common_anchor(x.anchor(), y.anchor(), "gauss_riemann");
  require_common_anchor(x.anchor(), z.anchor(), "gauss_riemann");
  require_common_anchor(x.anchor(), w.anchor(), "gauss_riemann");
  const Matrix& q = x.anchor().matrix().matrix();
  const Matrix& mx = x.matrix().matrix();
  const Matrix& my = y.matrix().matrix();
  const Matrix& mz = z.matrix().matrix();
  const Matrix& mw = w.matrix().matrix();
  return inner(ambient_sff_matrix(q, my, mz), ambient_sff_matrix(q, mx, mw)) -
         inner(ambient_sff_matrix(q, mx, mz), ambient_sff_matrix(q, my, mw));
}

double ricci_bruteforce(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "ricci_bruteforce");
  const TangentBasis basis = tangent_basis(x.anchor());
  double sum = 0.0;
  for (const auto& e : basis.vectors) sum += gauss_riemann(x, e, e, y);
  return sum;
}

double scalar_bruteforce(const GrassmannPoint& at) {
  const TangentBasis basis = tangent_basis(at);
  double sum = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t l = j + 1; l < basis.size(); ++l) {
      sum += gauss_riemann(basis[j], basis[l], basis[l], basis[j]);
    }
  }
  // Each unordered pair appears twice in tr Ric = sum_j Ric(e_j, e_j).
  return 2.0 * sum;
}

double schouten_definition(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "schouten_definition");
  const double m = x.anchor().dim();
  if (m <= 2) {
    throw DomainError("schouten_definition: undefined for m = " + std::to_string(x.anchor().dim()) +
                      " <= 2");
  }
  const double g = trace_inner(x.matrix(), y.matrix());
  const double sc = scalar_bruteforce(x.anchor());
  return (ricci_bruteforce(x, y) - sc / (2.0 * (m - 1.0)) * g) / (m - 2.0);
}

Matrix ricci_matrix(const GrassmannPoint& at) {
  const TangentBasis basis = tangent_basis(at);
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix ric(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      double sum = 0.0;
      for (Eigen::Index j = 0; j < m; ++j) {
        sum += gauss_riemann(basis[a], basis[j], basis[j], basis[b]);
      }
      ric(a, b) = sum;
    }
  }
  return ric;
}

namespace {

// Kulkarni-Nomizu product of coordinate forms, written out here rather than
// borrowed from the intrinsic module.
double kn(const Matrix& a, const Matrix& b, const Vector& u, const Vector& v, const Vector& w,
          const Vector& z) {
  auto f = [](const Matrix& m, const Vector& p, const Vector& q) { return p.dot(m * q); };
  return f(a, u, w) * f(b, v, z) - f(a, u, z) * f(b, v, w) - f(a, v, w) * f(b, u, z) +
         f(a, v, z) * f(b, u, w);
}

struct Decomposition {
  TangentBasis basis;
  Matrix ric;
  Matrix z;
  Matrix g;
  double sc;
  double m;
};

Decomposition decompose(const GrassmannPoint& at) {
  if (at.dim() <= 2) {
    throw DomainError("weyl_decomposition: undefined for m = " + std::to_string(at.dim()) +
                      " <= 2");
  }
  Decomposition d{tangent_basis(at), ricci_matrix(at), {}, {}, 0.0, static_cast<double>(at.dim())};
  const auto m = d.ric.rows();
  d.g = Matrix::Identity(m, m);
  d.sc = d.ric.trace();
  d.z = d.ric - (d.sc / d.m) * d.g;
  return d;
}

double weyl_with(const Decomposition& d, const TangentVector& x, const TangentVector& y,
                 const TangentVector& z, const TangentVector& w) {
  const Vector cx = d.basis.coordinates(x);
  const Vector cy = d.basis.coordinates(y);
  const Vector cz = d.basis.coordinates(z);
  const Vector cw = d.basis.coordinates(w);
  return gauss_riemann(x, y, z, w) - kn(d.z, d.g, cx, cy, cz, cw) / (d.m - 2.0) -
         d.sc / (2.0 * d.m * (d.m - 1.0)) * kn(d.g, d.g, cx, cy, cz, cw);
}

}  // namespace

double weyl_decomposition(const TangentVector& x, const TangentVector& y, const TangentVector& z,
                          const TangentVector& w) {
  require_common_anchor(x.anchor(), y.anchor(), "weyl_decomposition");
  require_common_anchor(x.anchor(), z.anchor(), "weyl_decomposition");
  require_common_anchor(x.anchor(), w.anchor(), "weyl_decomposition");
  return weyl_with(decompose(x.anchor()), x, y, z, w);
}

double bach_sum(const TangentVector& x, const TangentVector& y) {
  require_common_anchor(x.anchor(), y.anchor(), "bach_sum");
  if (x.anchor().dim() <= 3) {
    throw DomainError("bach_sum: undefined for m = " + std::to_string(x.anchor().dim()) +
                      " <= 3");
  }
  const Decomposition d = decompose(x.anchor());
  const std::size_t m = d.basis.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double r = d.ric(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (r == 0.0) continue;
      sum += r * weyl_with(d, x, d.basis[i], d.basis[j], y);
    }
  }
  return sum / (d.m - 2.0);
}

Matrix shape_operator_dense(const GrassmannPoint& at, const NormalVector& h) {
  require_common_anchor(at, h.anchor(), "shape_operator_dense");
  const TangentBasis basis = tangent_basis(at);
  const auto m = static_cast<Eigen::Index>(basis.size());
  Matrix s(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      s(a, b) = trace_inner(ambient_sff(basis[a], basis[b]).matrix(), h.matrix());
    }
  }
  return s;
}

std::vector<double> principal_dense(const GrassmannPoint& at, const NormalVector& h) {
  const Matrix s = shape_operator_dense(at, h);
  const Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (s + s.transpose()),
                                                 Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("principal_dense: eigensolver failed");
  const Vector ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

int worker_threads() {
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  if (const char* env = std::getenv("GRASSCURV_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) count = std::min<long>(count, cap);
  }
  return count;
}

namespace {

// Tangent matrices at I_{k,n-k} from the columns of an m x m orthogonal frame.
class FrameEvaluator {
 public:
  FrameEvaluator(int k, int n, int r) : k_(k), n_(n), r_(r) {
    q_ = Matrix::Identity(n, n);
    q_.bottomRightCorner(n - k, n - k) *= -1.0;
  }

  Matrix tangent(const Vector& coords) const {
    const int nk = n_ - k_;
    const double s = std::sqrt(2.0) / 2.0;
    Matrix x = Matrix::Zero(n_, n_);
    for (int i = 0; i < k_; ++i) {
      for (int j = 0; j < nk; ++j) {
        x(i, k_ + j) = s * coords(i * nk + j);
        x(k_ + j, i) = x(i, k_ + j);
      }
    }
    return x;
  }

  double plane(const Matrix& frame, int j) const {
    const Matrix x = tangent(frame.col(2 * j));
    const Matrix y = tangent(frame.col(2 * j + 1));
    return inner(ambient_sff_matrix(q_, y, y), ambient_sff_matrix(q_, x, x)) -
           inner(ambient_sff_matrix(q_, x, y), ambient_sff_matrix(q_, x, y));
  }

  double total(const Matrix& frame) const {
    double sum = 0.0;
    for (int j = 0; j < r_; ++j) sum += plane(frame, j);
    return sum;
  }

  int r() const { return r_; }

 private:
  int k_;
  int n_;
  int r_;
  Matrix q_;
};

struct ClimbResult {
  double value;
  Matrix frame;
};

ClimbResult climb(const FrameEvaluator& ev, Matrix frame, double sign, Rng& rng, int steps) {
  const auto m = frame.rows();
  const int used = 2 * ev.r();
  std::uniform_int_distribution<int> pick_a(0, used - 1);
  std::uniform_int_distribution<Eigen::Index> pick_b(0, m - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = sign * ev.total(frame);
  double step = 0.5;
  for (int s = 0; s < steps; ++s) {
    const int a = pick_a(rng);
    const Eigen::Index b = pick_b(rng);
    if (b == a || (b < used && b / 2 == a / 2)) continue;
    const double theta = step * gauss(rng);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    Matrix trial = frame;
    trial.col(a) = c * frame.col(a) + sn * frame.col(b);
    trial.col(b) = -sn * frame.col(a) + c * frame.col(b);
    const double value = sign * ev.total(trial);
    if (value > best) {
      best = value;
      frame = std::move(trial);
      step = std::min(step * 1.2, 1.5);
    } else {
      step = std::max(step * 0.9, 1e-6);
    }
  }
  return {sign * best, std::move(frame)};
}

}  // namespace

DeltaSearch delta_search(int k, int n, int r, std::uint64_t seed, int iterations) {
  if (n < 2 || k < 1 || k >= n) {
    throw DomainError("delta_search: need 1 <= k < n");
  }
  const int rmax = 2 * (k / 2) * ((n - k) / 2);
  if (r < 1 || r > rmax) {
    throw DomainError("delta_search: r = " + std::to_string(r) +
                      " outside 1 <= r <= 2 floor(k/2) floor((n-k)/2) = " + std::to_string(rmax));
  }
  if (iterations < 1) throw DomainError("delta_search: iterations must be positive");

  const FrameEvaluator ev(k, n, r);
  const int m = k * (n - k);
  const int restarts = std::max(1, (iterations + kSearchStepsPerRestart - 1) / kSearchStepsPerRestart);
  std::vector<ClimbResult> maxima(static_cast<std::size_t>(restarts));
  std::vector<ClimbResult> minima(static_cast<std::size_t>(restarts));

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < restarts; i = next++) {
      Rng rng = make_rng(seed, static_cast<std::uint64_t>(i));
      const Matrix start = haar_orthogonal(m, rng);
      const int steps = std::min(kSearchStepsPerRestart, iterations - i * kSearchStepsPerRestart);
      // Half the proposals for each direction.
      maxima[static_cast<std::size_t>(i)] = climb(ev, start, 1.0, rng, std::max(1, steps / 2));
      minima[static_cast<std::size_t>(i)] = climb(ev, start, -1.0, rng, std::max(1, steps - steps / 2));
    }
  };
  const int threads = std::min(worker_threads(), restarts);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t imax = 0;
  std::size_t imin = 0;
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    if (maxima[i].value > maxima[imax].value) imax = i;
    if (minima[i].value < minima[imin].value) imin = i;
  }

  const GrassmannPoint p = GrassmannPoint::standard(k, n);
  const TangentBasis basis = tangent_basis(p);
  auto frames = [&](const Matrix& f) {
    std::vector<std::pair<TangentVector, TangentVector>> out;
    for (int j = 0; j < r; ++j) {
      out.emplace_back(basis.combine(f.col(2 * j)), basis.combine(f.col(2 * j + 1)));
    }
    return out;
  };

  DeltaSearch res;
  res.max_found = maxima[imax].value;
  res.min_found = minima[imin].value;
  res.max_frame = frames(maxima[imax].frame);
  res.min_frame = frames(minima[imin].frame);
  res.bound_respected = res.max_found <= r / 4.0 + 1e-9;
  res.reached_max = std::abs(res.max_found - r / 4.0) <= 1e-3;
  res.reached_min = std::abs(res.min_found) <= 1e-3;
  res.restarts = restarts;
  return res;
}

}  // namespace grasscurv::oracle
