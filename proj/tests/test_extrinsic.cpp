#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "grasscurv/extrinsic.hpp"
#include "grasscurv/intrinsic.hpp"
#include "grasscurv/oracle.hpp"

using namespace grasscurv;
namespace ex = grasscurv::extrinsic;

namespace {

Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

GrassmannPoint circle_point() { return GrassmannPoint::standard(1, 2); }

TangentVector circle_unit_block() {
  return TangentVector::from_block(circle_point(), Matrix::Ones(1, 1));
}

NormalVector diag_normal(const GrassmannPoint& p, const Vector& d) {
  const int k = p.k();
  const int r = p.n() - k;
  return NormalVector::from_blocks(p, d.head(k).asDiagonal().toDenseMatrix(),
                                   d.tail(r).asDiagonal().toDenseMatrix());
}

}  // namespace

TEST_CASE("first fundamental form") {
  const TangentBasis b = tangent_basis(GrassmannPoint::standard(2, 5));
  CHECK(ex::first_fundamental_form(b[0], b[0]) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ex::first_fundamental_form(b[0], b[3]) == 0.0);
  const TangentVector x = circle_unit_block();
  CHECK(ex::first_fundamental_form(x, x) == 2.0);

  Rng rng = make_rng(1);
  const GrassmannPoint p = point_random(6, 2, rng);
  const TangentVector u = tangent_random(p, rng);
  const TangentVector v = tangent_random(p, rng);
  CHECK(std::abs(ex::first_fundamental_form(u, v) - 2.0 * (u.block().transpose() * v.block()).trace()) <=
        1e-12);
  CHECK_THROWS_AS(ex::first_fundamental_form(u, tangent_random(point_random(6, 2, rng), rng)),
                  AnchorError);
}

TEST_CASE("second fundamental form") {
  SUBCASE("circle points at its centre") {
    const TangentVector x = circle_unit_block();
    const NormalVector s = ex::second_fundamental_form(x, x);
    CHECK((s.matrix().matrix() - m2(-1, 0, 0, 1)).norm() <= 1e-15);
    const NormalVector wrong = ex::printed::second_fundamental_form(x, x);
    CHECK((wrong.matrix().matrix() + m2(-1, 0, 0, 1)).norm() <= 1e-15);
  }
  SUBCASE("zero argument") {
    const TangentVector x = circle_unit_block();
    CHECK(ex::second_fundamental_form(x, 0.0 * x).norm() == 0.0);
  }
  SUBCASE("Gr(2,4) elementary block") {
    const GrassmannPoint p = GrassmannPoint::standard(2, 4);
    Matrix e11 = Matrix::Zero(2, 2);
    e11(0, 0) = 1;
    const TangentVector x = TangentVector::from_block(p, e11);
    const Vector want = (Vector(4) << -1, 0, 1, 0).finished();
    CHECK((ex::second_fundamental_form(x, x).matrix().matrix() - Matrix(want.asDiagonal())).norm() <=
          1e-15);
  }
  SUBCASE("symmetric, normal, matches ambient form") {
    Rng rng = make_rng(2);
    const GrassmannPoint p = point_random(7, 3, rng);
    const TangentVector x = tangent_random(p, rng);
    const TangentVector y = tangent_random(p, rng);
    const NormalVector a = ex::second_fundamental_form(x, y);
    const NormalVector b = ex::second_fundamental_form(y, x);
    CHECK(a.matrix().matrix() == b.matrix().matrix());
    CHECK(project_tangent(p, a.matrix()).norm() <= 1e-11);
    CHECK((a - oracle::ambient_sff(x, y)).norm() <= 1e-12);
    CHECK((a - oracle::sff_fd(x, y)).norm() <= 1e-6);
  }
}

TEST_CASE("gauss map") {
  const ex::GaussMap g1 = ex::gauss_map(circle_point());
  REQUIRE(g1.basis.size() == 2);
  CHECK((g1.basis[0].matrix().matrix() - m2(1, 0, 0, 0)).norm() == 0.0);
  CHECK((g1.basis[1].matrix().matrix() - m2(0, 0, 0, 1)).norm() == 0.0);

  Rng rng = make_rng(3);
  const GrassmannPoint p = point_random(4, 2, rng);
  const ex::GaussMap g = ex::gauss_map(p);
  CHECK(g.basis.size() == 6);
  const Matrix& q = p.matrix().matrix();
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    const Matrix& h = g.basis[i].matrix().matrix();
    CHECK((h * q - q * h).norm() <= 1e-12);
    for (std::size_t j = 0; j < g.basis.size(); ++j)
      CHECK(std::abs(trace_inner(g.basis[i].matrix(), g.basis[j].matrix()) - (i == j ? 1.0 : 0.0)) <=
            1e-12);
  }
}

TEST_CASE("weingarten") {
  SUBCASE("circle of radius sqrt(2)") {
    const GrassmannPoint c = circle_point();
    const double s = std::sqrt(0.5);
    const NormalVector h = diag_normal(c, (Vector(2) << -s, s).finished());
    const TangentVector x = circle_unit_block();
    CHECK((ex::weingarten(h, x) - s * x).norm() <= 1e-15);
  }
  SUBCASE("the point itself as normal") {
    Rng rng = make_rng(4);
    const GrassmannPoint p = point_random(5, 2, rng);
    const NormalVector q = NormalVector::from_matrix(p, p.matrix());
    const TangentVector x = tangent_random(p, rng);
    CHECK((ex::weingarten(q, x) + x).norm() <= 1e-12);
    CHECK(ex::weingarten(0.0 * q, x).norm() == 0.0);
  }
  SUBCASE("adjoint of the second fundamental form") {
    Rng rng = make_rng(5);
    const GrassmannPoint p = point_random(6, 3, rng);
    const NormalVector h = normal_random(p, rng);
    const TangentVector x = tangent_random(p, rng);
    const TangentVector y = tangent_random(p, rng);
    const double sxy = trace_inner(ex::weingarten(h, x).matrix(), y.matrix());
    const double syx = trace_inner(ex::weingarten(h, y).matrix(), x.matrix());
    CHECK(std::abs(sxy - syx) <= 1e-11);
    CHECK(std::abs(sxy - trace_inner(ex::second_fundamental_form(x, y).matrix(), h.matrix())) <= 1e-11);
  }
}

TEST_CASE("principal and Gaussian curvature") {
  const GrassmannPoint p = GrassmannPoint::standard(2, 4);
  SUBCASE("H = diag(0,0,1,1)") {
    const NormalVector h = diag_normal(p, (Vector(4) << 0, 0, 1, 1).finished());
    for (const double k : ex::principal_curvatures(p, h).values) CHECK(k == doctest::Approx(0.5));
    CHECK(ex::gaussian_curvature(p, h) == doctest::Approx(1.0 / 16));
  }
  SUBCASE("eigenvalues (1,2) and (3,4)") {
    const NormalVector h = diag_normal(p, (Vector(4) << 1, 2, 3, 4).finished());
    std::vector<double> got = ex::principal_curvatures(p, h).values;
    std::sort(got.begin(), got.end());
    const std::vector<double> want{0.5, 1.0, 1.0, 1.5};
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-12);
    CHECK(std::abs(ex::gaussian_curvature(p, h) - 0.75) <= 1e-12);
  }
  SUBCASE("zero and the point") {
    const NormalVector z = diag_normal(p, Vector::Zero(4));
    for (const double k : ex::principal_curvatures(p, z).values) CHECK(k == 0.0);
    CHECK(ex::gaussian_curvature(p, z) == 0.0);
    Rng rng = make_rng(6);
    const GrassmannPoint r = point_random(5, 2, rng);
    const NormalVector q = NormalVector::from_matrix(r, r.matrix());
    CHECK(ex::gaussian_curvature(r, q) == doctest::Approx(1.0));  // (-1)^6
    const GrassmannPoint r3 = point_random(4, 1, rng);
    CHECK(ex::gaussian_curvature(r3, NormalVector::from_matrix(r3, r3.matrix())) ==
          doctest::Approx(-1.0));
  }
  SUBCASE("dense Weingarten agrees as multisets") {
    Rng rng = make_rng(7);
    const GrassmannPoint r = point_random(6, 2, rng);
    const NormalVector h = normal_random(r, rng);
    std::vector<double> got = ex::principal_curvatures(r, h).values;
    std::sort(got.begin(), got.end());
    const std::vector<double> dense = oracle::principal_dense(r, h);
    REQUIRE(got.size() == dense.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - dense[i]) <= 1e-9);
    const double det = oracle::shape_operator_dense(r, h).determinant();
    CHECK(std::abs(ex::gaussian_curvature(r, h) - det) <= 1e-9 * std::max(1.0, std::abs(det)));
  }
  SUBCASE("eigen-tangents") {
    Rng rng = make_rng(8);
    const GrassmannPoint r = point_random(5, 2, rng);
    const NormalVector h = normal_random(r, rng);
    const ex::PrincipalSpectrum s = ex::principal_curvatures(r, h);
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      const TangentVector& d = s.directions[i];
      CHECK((ex::weingarten(h, d) - s.values[i] * d).norm() <= 1e-10);
      CHECK(d.norm() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("mean curvature") {
  const NormalVector h1 = ex::mean_curvature_vector(circle_point());
  CHECK((h1.matrix().matrix() - m2(-0.5, 0, 0, 0.5)).norm() <= 1e-15);

  const GrassmannPoint p = GrassmannPoint::standard(2, 4);
  const Vector w = (Vector(4) << -0.25, -0.25, 0.25, 0.25).finished();
  CHECK((ex::mean_curvature_vector(p).matrix().matrix() - Matrix(w.asDiagonal())).norm() <= 1e-15);
  CHECK(ex::mean_curvature_scalar(p, diag_normal(p, (Vector(4) << 1, 1, 0, 0).finished())) ==
        doctest::Approx(-0.5));
  CHECK(ex::mean_curvature_scalar(p, diag_normal(p, Vector::Zero(4))) == 0.0);

  Rng rng = make_rng(9);
  const GrassmannPoint r = point_random(7, 3, rng);
  const NormalVector hv = ex::mean_curvature_vector(r);
  const TangentBasis b = tangent_basis(r);
  Matrix acc = Matrix::Zero(7, 7);
  for (const auto& e : b.vectors) acc += ex::second_fundamental_form(e, e).matrix().matrix();
  CHECK((acc / b.size() - hv.matrix().matrix()).norm() <= 1e-10);

  const NormalVector h = normal_random(r, rng);
  CHECK(std::abs(ex::mean_curvature_scalar(r, h) - trace_inner(hv.matrix(), h.matrix())) <= 1e-11);
  CHECK(std::abs(ex::mean_curvature_scalar(r, hv) - hv.norm() * hv.norm()) <= 1e-11);
}

TEST_CASE("third fundamental form") {
  const TangentVector x = circle_unit_block();
  CHECK(ex::third_fundamental_form_closed(x, x) == doctest::Approx(-1.0));
  CHECK(ex::third_fundamental_form_definition(x, x) == doctest::Approx(1.0));

  const TangentBasis b = tangent_basis(GrassmannPoint::standard(2, 4));
  CHECK(ex::third_fundamental_form_closed(b[0], b[0]) == doctest::Approx(-0.5));
  CHECK(ex::third_fundamental_form_definition(b[0], b[0]) == doctest::Approx(0.75));
  CHECK(ex::third_fundamental_form_closed(b[0], b[1]) == 0.0);
  CHECK(std::abs(ex::third_fundamental_form_definition(b[0], b[1])) <= 1e-15);

  Rng rng = make_rng(10);
  for (const auto& [k, n] : {std::pair{1, 3}, {2, 5}, {3, 7}}) {
    const GrassmannPoint p = point_random(n, k, rng);
    const TangentVector u = tangent_random(p, rng);
    const TangentVector v = tangent_random(p, rng);
    const double g = trace_inner(u.matrix(), v.matrix());
    CHECK(std::abs(ex::third_fundamental_form_definition(u, v) - (n + 2) / 8.0 * g) <= 1e-10);

    // The printed identity needs the opposite sign of II; the definition pairs
    // with the unnormalized mean curvature vector m H instead.
    const NormalVector hv = ex::mean_curvature_vector(p);
    const double ric = intrinsic::ricci(u, v);
    const double printed = trace_inner(ex::printed::second_fundamental_form(u, v).matrix(), hv.matrix());
    CHECK(std::abs(ex::third_fundamental_form_closed(u, v) - (printed - ric)) <= 1e-10);
    const double scaled = p.dim() * trace_inner(ex::second_fundamental_form(u, v).matrix(), hv.matrix());
    CHECK(std::abs(ex::third_fundamental_form_definition(u, v) - (scaled - ric)) <= 1e-10);
  }
}

TEST_CASE("relative nullity") {
  for (const auto& [k, n] : {std::pair{1, 2}, {2, 4}, {2, 5}, {3, 6}})
    CHECK(ex::relative_nullity_index(GrassmannPoint::standard(k, n)) == 0);
  Rng rng = make_rng(11);
  CHECK(ex::relative_nullity_index(point_random(5, 2, rng)) == 0);
}
