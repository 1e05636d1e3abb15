// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "grasscurv/extrinsic.hpp"
#include "grasscurv/intrinsic.hpp"
#include "grasscurv/oracle.hpp"
#include "grasscurv/suite.hpp"

using namespace grasscurv;
namespace ex = grasscurv::extrinsic;
namespace in = grasscurv::intrinsic;
namespace orc = grasscurv::oracle;

namespace {

constexpr double kTolRiemannGauss = 1e-10;
constexpr double kTolBasisSum = 1e-9;
constexpr double kTolWeylDecomposition = 1e-10;
constexpr double kTolBachSum = 1e-9;
constexpr double kTolSchoutenDefinition = 1e-11;
constexpr double kTolSffFd = 1e-6;
constexpr double kFdStep = 1e-5;
constexpr double kTolSymmetries = 1e-11;
constexpr double kTolSectionalBound = 1e-12;
constexpr double kTolWitness = 1e-12;
constexpr double kTolDelta = 1e-10;
constexpr double kTolTracelessRicci = 1e-10;
constexpr double kTolCottonFd = 1e-6;
constexpr double kTolWeylTrace = 1e-9;
constexpr double kTolCodazziFd = 1e-6;
constexpr double kTolDivergenceFd = 1e-5;
constexpr double kTolSpectra = 1e-9;
constexpr double kTolEquivariance = 1e-9;
constexpr double kTolThirdFf = 1e-12;

const std::vector<std::pair<int, int>> kTableConfigs{{1, 3}, {2, 4}, {2, 5}, {3, 6}};

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s AC%d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Tracks the worst residual against a fixed tolerance.
struct Worst {
  double tol;
  double value = 0.0;
  std::string where;

  void see(double r, const std::string& at) {
    if (!(r <= value)) {
      value = r;
      where = at;
    }
  }
  bool ok() const { return value <= tol; }
  std::string text(const std::string& label) const {
    return label + " " + sci(value) + (ok() ? " <= " : " > ") + sci(tol) +
           (where.empty() ? "" : " at " + where);
  }
};

std::string gr(int k, int n) { return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

TangentVector unit(const TangentVector& x) { return (1.0 / x.norm()) * x; }

std::vector<TangentVector> unit_tangents(const GrassmannPoint& p, Rng& rng, int count) {
  std::vector<TangentVector> v;
  for (int i = 0; i < count; ++i) v.push_back(unit(tangent_random(p, rng)));
  return v;
}

orc::TensorField field2(std::function<double(const TangentVector&, const TangentVector&)> f) {
  return {2, [f](const std::vector<TangentVector>& a) { return f(a[0], a[1]); }};
}

orc::TensorField field4(std::function<double(const TangentVector&, const TangentVector&,
                                             const TangentVector&, const TangentVector&)>
                            f) {
  return {4, [f](const std::vector<TangentVector>& a) { return f(a[0], a[1], a[2], a[3]); }};
}

/// (nabla_X T)(Y,Z) - (nabla_Y T)(X,Z) by finite differences.
double codazzi(const orc::TensorField& t, const TangentVector& x, const TangentVector& y,
               const TangentVector& z) {
  orc::FDConfig c;
  c.h = kFdStep;
  return orc::covariant_derivative_fd(x, t, c)({y, z}) - orc::covariant_derivative_fd(y, t, c)({x, z});
}

// ---------------------------------------------------------------------------

void ac1() {
  Worst rie{kTolRiemannGauss}, ric{kTolBasisSum}, sc{kTolBasisSum}, weyl{kTolWeylDecomposition},
      bach{kTolBachSum}, sch{kTolSchoutenDefinition};
  for (const auto& [k, n] : kTableConfigs) {
    const int m = k * (n - k);
    for (std::uint64_t s = 0; s < 20; ++s) {
      Rng rng = make_rng(s, 1);
      const GrassmannPoint p = point_random(n, k, rng);
      const auto v = unit_tangents(p, rng, 4);
      const std::string at = gr(k, n) + " sample " + std::to_string(s);
      rie.see(std::abs(in::riemann(v[0], v[1], v[2], v[3]) - orc::gauss_riemann(v[0], v[1], v[2], v[3])),
              at);
      ric.see(std::abs(in::ricci(v[0], v[1]) - orc::ricci_bruteforce(v[0], v[1])), at);
      if (s < 3) sc.see(std::abs(in::scalar_curvature(k, n) - orc::scalar_bruteforce(p)), at);
      if (m > 2) {
        weyl.see(std::abs(in::weyl(v[0], v[1], v[2], v[3]) -
                          orc::weyl_decomposition(v[0], v[1], v[2], v[3])),
                 at);
        sch.see(std::abs(in::schouten(v[0], v[1]) - orc::schouten_definition(v[0], v[1])), at);
      }
      if (m > 3 && s < 5) bach.see(std::abs(in::bach(v[0], v[1]) - orc::bach_sum(v[0], v[1])), at);
    }
  }
  const TangentBasis b4 = tangent_basis(GrassmannPoint::standard(2, 4));
  sc.see(std::abs(orc::scalar_bruteforce(GrassmannPoint::standard(2, 4)) - 1.0), "Gr(2,4) value 1");
  sc.see(std::abs(orc::scalar_bruteforce(GrassmannPoint::standard(2, 5)) - 2.25), "Gr(2,5) value 2.25");
  bach.see(std::abs(orc::bach_sum(b4[0], b4[0]) - 1.0 / 16), "Gr(2,4) coefficient 1/16");
  sch.see(std::abs(orc::schouten_definition(b4[0], b4[0]) - 1.0 / 24), "Gr(2,4) coefficient 1/24");

  const bool ok = rie.ok() && ric.ok() && sc.ok() && weyl.ok() && bach.ok() && sch.ok();
  report(1, ok, "closed forms match independent oracles",
         rie.text("Riemann") + "; " + ric.text("Ricci") + "; " + sc.text("scalar") + "; " +
             weyl.text("Weyl") + "; " + bach.text("Bach") + "; " + sch.text("Schouten"));
}

void ac2() {
  Worst fd{kTolSffFd};
  orc::FDConfig c;
  c.h = kFdStep;
  const GrassmannPoint circle = GrassmannPoint::standard(1, 2);
  const TangentVector x = TangentVector::from_block(circle, Matrix::Ones(1, 1));
  Matrix centre(2, 2);
  centre << -1, 0, 0, 1;
  fd.see((ex::second_fundamental_form(x, x).matrix().matrix() - centre).norm(), "Gr(1,2) closed");
  fd.see((orc::sff_fd(x, x, c).matrix().matrix() - centre).norm(), "Gr(1,2) finite difference");

  std::vector<std::pair<int, int>> configs{{1, 2}};
  configs.insert(configs.end(), kTableConfigs.begin(), kTableConfigs.end());
  for (const auto& [k, n] : configs) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      Rng rng = make_rng(s, 2);
      const GrassmannPoint p = point_random(n, k, rng);
      const auto v = unit_tangents(p, rng, 2);
      fd.see((ex::second_fundamental_form(v[0], v[1]) - orc::sff_fd(v[0], v[1], c)).norm(),
             gr(k, n) + " sample " + std::to_string(s));
    }
  }
  // The opposite sign must be rejected by the same oracle.
  const double flipped = (ex::printed::second_fundamental_form(x, x) - orc::sff_fd(x, x, c)).norm();
  const bool rejects = flipped > kTolSffFd;
  report(2, fd.ok() && rejects, "second fundamental form vs finite differences",
         fd.text("max |II - II_fd|") + "; opposite sign residual " + sci(flipped) +
             (rejects ? " (rejected)" : " (NOT rejected)"));
}

void ac3() {
  Worst w{kTolSymmetries};
  for (const auto& [k, n] : kTableConfigs) {
    Rng rng = make_rng(3, static_cast<std::uint64_t>(10 * k + n));
    const GrassmannPoint p = point_random(n, k, rng);
    for (int i = 0; i < 100; ++i) {
      const auto v = unit_tangents(p, rng, 4);
      const TangentVector &x = v[0], &y = v[1], &z = v[2], &u = v[3];
      const double r = in::riemann(x, y, z, u);
      const std::string at = gr(k, n);
      w.see(std::abs(r + in::riemann(y, x, z, u)), at + " antisymmetry (1,2)");
      w.see(std::abs(r + in::riemann(x, y, u, z)), at + " antisymmetry (3,4)");
      w.see(std::abs(r - in::riemann(z, u, x, y)), at + " pair symmetry");
      w.see(std::abs(r + in::riemann(y, z, x, u) + in::riemann(z, x, y, u)), at + " first Bianchi");
    }
  }
  report(3, w.ok(), "Riemann symmetries on 100 quadruples per configuration", w.text("max residual"));
}

void ac4() {
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& [k, n] : kTableConfigs) {
    if (k * (n - k) < 2) continue;
    Rng rng = make_rng(4, static_cast<std::uint64_t>(10 * k + n));
    const GrassmannPoint p = point_random(n, k, rng);
    for (int i = 0; i < 10000; ++i) {
      const double kap = in::sectional(tangent_random(p, rng), tangent_random(p, rng));
      lo = std::min(lo, kap);
      hi = std::max(hi, kap);
    }
  }
  const bool bounds = lo >= 0.0 && hi <= 0.25 + kTolSectionalBound;

  const in::DeltaWitnesses printed = in::printed_gr24_witnesses();
  Worst wit{kTolWitness};
  std::string values;
  for (const auto& [x, y] : printed.curvature_max) {
    const double kap = in::sectional(x, y);
    wit.see(std::abs(kap - 0.25), "upper set");
    values += sci(kap) + " ";
  }
  for (const auto& [x, y] : printed.curvature_min) {
    const double kap = in::sectional(x, y);
    wit.see(std::abs(kap), "lower set");
    values += sci(kap) + " ";
  }

  const in::DeltaInvariants d = in::delta_invariants(2, 4, 2);
  const double dres = std::max(std::abs(d.upper - 1.0), std::abs(d.lower - 0.5));
  const bool delta = dres <= kTolDelta;

  report(4, bounds && wit.ok() && delta, "sectional bounds, printed witness frames, delta invariants",
         "kappa range [" + sci(lo) + ", " + sci(hi) + "] on 10^4 planes per configuration" +
             (bounds ? "" : " OUT OF BOUNDS") + "; printed frames give kappa = " + values +
             "expected 0.25 0.25 0 0, " + wit.text("max deviation") + "; delta (1, 0.5) residual " +
             sci(dres));
}

void ac5() {
  Worst traceless{kTolTracelessRicci}, cotton{kTolCottonFd}, trace{kTolWeylTrace},
      codazzi_fd{kTolCodazziFd}, div{kTolDivergenceFd};
  const std::vector<std::pair<int, int>> configs{{2, 4}, {2, 5}, {3, 6}};
  for (const auto& [k, n] : configs) {
    const std::string at = gr(k, n);
    Rng rng = make_rng(5, static_cast<std::uint64_t>(10 * k + n));
    const GrassmannPoint p = point_random(n, k, rng);
    const TangentBasis basis = tangent_basis(p);
    for (int s = 0; s < 3; ++s) {
      const auto v = unit_tangents(p, rng, 4);
      traceless.see(std::abs(in::traceless_ricci(v[0], v[1])), at);

      const orc::TensorField schouten_oracle = field2(orc::schouten_definition);
      cotton.see(std::abs(in::cotton(v[0], v[1], v[2]) - codazzi(schouten_oracle, v[0], v[1], v[2])), at);

      double tr = 0.0;
      for (const auto& e : basis.vectors) tr += in::weyl(v[0], e, e, v[1]);
      trace.see(std::abs(tr), at);

      codazzi_fd.see(std::abs(codazzi(field2(in::ricci), v[0], v[1], v[2])), at + " Ricci");
      codazzi_fd.see(std::abs(codazzi(field2(in::schouten), v[0], v[1], v[2])), at + " Schouten");
      codazzi_fd.see(std::abs(codazzi(field2(in::bach), v[0], v[1], v[2])), at + " Bach");

      orc::FDConfig c;
      c.h = kFdStep;
      div.see(std::abs(orc::divergence_fd(p, field4(in::riemann), c)({v[0], v[1], v[2]})),
              at + " Riemann");
      div.see(std::abs(orc::divergence_fd(p, field4(in::weyl), c)({v[0], v[1], v[2]})), at + " Weyl");
    }
  }
  const bool ok = traceless.ok() && cotton.ok() && trace.ok() && codazzi_fd.ok() && div.ok();
  report(5, ok, "Einstein and conformal properties",
         traceless.text("traceless Ricci") + "; " + cotton.text("Cotton FD") + "; " +
             trace.text("Weyl trace") + "; " + codazzi_fd.text("Codazzi FD") + "; " +
             div.text("divergence FD"));
}

void ac6() {
  std::string detail;
  bool ok = true;
  for (const auto& [k, n] : {std::pair{1, 2}, {2, 4}, {2, 5}}) {
    const int nu = ex::relative_nullity_index(GrassmannPoint::standard(k, n));
    Rng rng = make_rng(6);
    const int nu_random = ex::relative_nullity_index(point_random(n, k, rng));
    ok = ok && nu == 0 && nu_random == 0;
    detail += gr(k, n) + " " + std::to_string(nu) + "/" + std::to_string(nu_random) + " ";
  }
  report(6, ok, "relative nullity vanishes", detail + "at I_{k,n-k}/random point");
}

void ac7() {
  Worst w{kTolSpectra};
  for (const auto& [k, n] : kTableConfigs) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng = make_rng(s, 7);
      const GrassmannPoint p = point_random(n, k, rng);
      const NormalVector h = normal_random(p, rng);
      std::vector<double> closed = ex::principal_curvatures(p, h).values;
      std::sort(closed.begin(), closed.end());
      const std::vector<double> dense = orc::principal_dense(p, h);
      double r = closed.size() == dense.size() ? 0.0 : INFINITY;
      for (std::size_t i = 0; i < std::min(closed.size(), dense.size()); ++i)
        r = std::max(r, std::abs(closed[i] - dense[i]));
      w.see(r, gr(k, n) + " principal");
      const double det = orc::shape_operator_dense(p, h).determinant();
      w.see(std::abs(ex::gaussian_curvature(p, h) - det) / std::max(1.0, std::abs(det)),
               gr(k, n) + " Gaussian");
    }
  }
  const GrassmannPoint p = GrassmannPoint::standard(2, 4);
  Matrix h1 = Matrix::Zero(2, 2), h2 = Matrix::Zero(2, 2);
  h1.diagonal() << 1, 2;
  h2.diagonal() << 3, 4;
  const double gauss = ex::gaussian_curvature(p, NormalVector::from_blocks(p, h1, h2));
  w.see(std::abs(gauss - 0.75), "Gr(2,4) example");
  report(7, w.ok(), "principal and Gaussian curvature vs dense Weingarten",
         w.text("max residual") + "; example Gaussian " + sci(gauss));
}

void ac8() {
  Worst w{kTolEquivariance};
  for (const auto& [k, n] : kTableConfigs) {
    const int m = k * (n - k);
    Rng rng = make_rng(8, static_cast<std::uint64_t>(10 * k + n));
    const GrassmannPoint p = point_random(n, k, rng);
    const auto v = unit_tangents(p, rng, 4);
    const NormalVector h = normal_random(p, rng);

    auto scalars = [m](const GrassmannPoint& at, const std::vector<TangentVector>& t,
                       const NormalVector& nv) {
      std::vector<double> out{
          ex::first_fundamental_form(t[0], t[1]),
          trace_inner(ex::second_fundamental_form(t[0], t[1]).matrix(), nv.matrix()),
          trace_inner(ex::weingarten(nv, t[0]).matrix(), t[1].matrix()),
          ex::mean_curvature_scalar(at, nv),
          ex::gaussian_curvature(at, nv),
          ex::third_fundamental_form_closed(t[0], t[1]),
          ex::third_fundamental_form_definition(t[0], t[1]),
          in::riemann(t[0], t[1], t[2], t[3]),
          in::jacobi(t[0], t[1], t[2], t[3]),
          in::ricci(t[0], t[1]),
          in::traceless_ricci(t[0], t[1]),
      };
      if (m >= 2) out.push_back(in::sectional(t[0], t[1]));
      if (m > 2) {
        out.push_back(in::schouten(t[0], t[1]));
        out.push_back(in::weyl(t[0], t[1], t[2], t[3]));
      }
      if (m > 3) out.push_back(in::bach(t[0], t[1]));
      std::vector<double> pc = ex::principal_curvatures(at, nv).values;
      std::sort(pc.begin(), pc.end());
      out.insert(out.end(), pc.begin(), pc.end());
      return out;
    };
    const std::vector<double> base = scalars(p, v, h);

    for (int i = 0; i < 20; ++i) {
      const Matrix u = haar_orthogonal(n, rng);
      auto conj = [&u](const SymMatrix& a) { return SymMatrix(u * a.matrix() * u.transpose()); };
      const GrassmannPoint q = GrassmannPoint::from_matrix(conj(p.matrix()), k);
      std::vector<TangentVector> t;
      for (const auto& x : v) t.push_back(TangentVector::from_matrix(q, conj(x.matrix())));
      const NormalVector nv = NormalVector::from_matrix(q, conj(h.matrix()));
      const std::vector<double> moved = scalars(q, t, nv);
      for (std::size_t j = 0; j < base.size(); ++j)
        w.see(std::abs(moved[j] - base[j]) / std::max(1.0, std::abs(base[j])),
              gr(k, n) + " quantity " + std::to_string(j));
    }
  }
  report(8, w.ok(), "scalar outputs invariant under Haar O(n) conjugation", w.text("max change"));
}

void ac9() {
  const TangentVector e = tangent_basis(GrassmannPoint::standard(2, 4))[0];
  const double closed = ex::third_fundamental_form_closed(e, e);
  const double def = ex::third_fundamental_form_definition(e, e);
  const CurvatureReport table = suite::table_report(2, 4, 5, 0);
  std::string status = "missing";
  for (const auto& row : table.entries())
    if (row.name == "third fundamental form") status = row.status;
  const bool ok = std::abs(closed + 0.5) <= kTolThirdFf && std::abs(def - 0.75) <= kTolThirdFf &&
                  status == "flagged";
  report(9, ok, "third fundamental form discrepancy reported side by side",
         "closed " + sci(closed) + ", definition " + sci(def) + " per unit tr(XY); table row " + status);
}

void ac10() {
  report(10, true, "no results beyond desk scale", "every criterion above runs here in full");
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
