#include <doctest.h>

#include <cmath>

#include "grasscurv/grassmann.hpp"

using namespace grasscurv;

namespace {

Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

GrassmannPoint circle_point() { return GrassmannPoint::from_matrix(SymMatrix(m2(1, 0, 0, -1)), 1); }

}  // namespace

TEST_CASE("point_from_matrix") {
  const GrassmannPoint p =
      point_from_matrix(SymMatrix::diagonal((Vector(4) << 1, 1, -1, -1).finished()), 2);
  CHECK(p.n() == 4);
  CHECK(p.k() == 2);
  CHECK(p.dim() == 4);
  CHECK((p.frame() - Matrix::Identity(4, 4)).norm() < 1e-15);

  CHECK_NOTHROW(circle_point());
  CHECK_THROWS_AS(point_from_matrix(SymMatrix(m2(1, 0, 0, 1)), 1), ModelError);
  CHECK_THROWS_AS(point_from_matrix(SymMatrix(m2(2, 0, 0, -1)), 1), ModelError);
}

TEST_CASE("point_random") {
  Rng a = make_rng(0);
  const GrassmannPoint p = point_random(2, 1, a);
  CHECK(p.dim() == 1);

  Rng b1 = make_rng(9);
  Rng b2 = make_rng(9);
  CHECK(point_random(5, 2, b1).matrix().matrix() == point_random(5, 2, b2).matrix().matrix());

  Rng c = make_rng(1);
  const GrassmannPoint q = point_random(4, 2, c);
  const Matrix& m = q.matrix().matrix();
  CHECK((m * m - Matrix::Identity(4, 4)).norm() <= 1e-12);
  CHECK(std::abs(m.trace()) <= 1e-12);
  Matrix ik = Matrix::Identity(4, 4);
  ik(2, 2) = ik(3, 3) = -1;
  CHECK((q.frame() * ik * q.frame().transpose() - m).norm() <= 1e-10);
}

TEST_CASE("tangent and normal shape") {
  Rng rng = make_rng(2);
  const GrassmannPoint p = point_random(5, 2, rng);
  const Matrix& q = p.matrix().matrix();
  const TangentVector x = tangent_random(p, rng);
  const NormalVector h = normal_random(p, rng);
  CHECK((x.matrix().matrix() * q + q * x.matrix().matrix()).norm() <= 1e-10);
  CHECK((h.matrix().matrix() * q - q * h.matrix().matrix()).norm() <= 1e-10);
  CHECK(x.block().rows() == 2);
  CHECK(x.block().cols() == 3);

  const TangentVector back = TangentVector::from_matrix(p, x.matrix());
  CHECK((back.block() - x.block()).norm() <= 1e-10);
  CHECK_THROWS_AS(TangentVector::from_matrix(p, h.matrix()), ModelError);
  CHECK_THROWS_AS(NormalVector::from_matrix(p, x.matrix()), ModelError);
}

TEST_CASE("project_tangent") {
  const GrassmannPoint p = circle_point();
  CHECK(project_tangent(p, SymMatrix(m2(1, 0, 0, 0))).norm() == 0.0);
  CHECK((project_tangent(p, SymMatrix(m2(0, 1, 1, 0))).matrix().matrix() - m2(0, 1, 1, 0)).norm() ==
        0.0);

  Rng rng = make_rng(3);
  const GrassmannPoint r = point_random(6, 3, rng);
  const TangentVector x = tangent_random(r, rng);
  CHECK((project_tangent(r, x.matrix()).matrix().matrix() - x.matrix().matrix()).norm() <= 1e-12);
}

TEST_CASE("project_normal") {
  Rng rng = make_rng(4);
  const GrassmannPoint p = point_random(5, 2, rng);
  const NormalVector h = normal_random(p, rng);
  const TangentVector x = tangent_random(p, rng);
  CHECK((project_normal(p, h.matrix()).matrix().matrix() - h.matrix().matrix()).norm() <= 1e-12);
  CHECK(project_normal(p, x.matrix()).norm() <= 1e-12);

  const SymMatrix w(gaussian_matrix(5, 5, rng));
  const double dot = trace_inner(project_tangent(p, w).matrix(), project_normal(p, w).matrix());
  CHECK(std::abs(dot) <= 1e-12);
  const Matrix sum = project_tangent(p, w).matrix().matrix() + project_normal(p, w).matrix().matrix();
  CHECK((sum - w.matrix()).norm() <= 1e-15 * w.norm() * 5);
}

TEST_CASE("tangent_basis") {
  const TangentBasis b = tangent_basis(circle_point());
  REQUIRE(b.size() == 1);
  CHECK((b[0].matrix().matrix() - std::sqrt(0.5) * m2(0, 1, 1, 0)).norm() <= 1e-15);

  const TangentBasis b4 = tangent_basis(GrassmannPoint::standard(2, 4));
  REQUIRE(b4.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(std::abs(trace_inner(b4[i].matrix(), b4[j].matrix()) - (i == j ? 1.0 : 0.0)) <= 1e-12);

  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) CHECK(tangent_basis(GrassmannPoint::standard(k, n)).size() ==
                                      static_cast<std::size_t>(k * (n - k)));

  Rng rng = make_rng(5);
  const GrassmannPoint p = point_random(6, 2, rng);
  const TangentBasis bp = tangent_basis(p);
  const TangentVector x = tangent_random(p, rng);
  CHECK((bp.combine(bp.coordinates(x)).matrix().matrix() - x.matrix().matrix()).norm() <= 1e-12);
}

TEST_CASE("geodesic") {
  Rng rng = make_rng(6);
  const GrassmannPoint p = point_random(5, 2, rng);
  const TangentVector x = tangent_random(p, rng);
  CHECK((geodesic(p, x, 0.0).matrix().matrix() - p.matrix().matrix()).norm() <= 1e-15);

  SUBCASE("circle velocity") {
    const GrassmannPoint c = circle_point();
    const TangentVector v = TangentVector::from_block(c, Matrix::Ones(1, 1));
    const double h = 1e-5;
    const Matrix d = (geodesic(c, v, h).matrix().matrix() - geodesic(c, v, -h).matrix().matrix()) /
                     (2 * h);
    CHECK((d - v.matrix().matrix()).norm() <= 1e-8);
    // A circle of radius sqrt(2) traversed at unit-block speed.
    const double t = 0.3;
    const Matrix g = geodesic(c, v, t).matrix().matrix();
    CHECK((g - m2(std::cos(t), std::sin(t), std::sin(t), -std::cos(t))).norm() <= 1e-12);
  }

  for (const double t : {0.1, 1.0, 10.0}) {
    const Matrix g = geodesic(p, x, t).matrix().matrix();
    CHECK((g * g - Matrix::Identity(5, 5)).norm() <= 1e-10);
  }
}

TEST_CASE("transport") {
  Rng rng = make_rng(7);
  const GrassmannPoint p = point_random(6, 3, rng);
  const TangentVector x = tangent_random(p, rng);
  const TangentVector y = tangent_random(p, rng);
  CHECK((transport(p, x, y, 0.0).matrix().matrix() - y.matrix().matrix()).norm() <= 1e-15);
  for (const double t : {0.2, 1.5}) {
    const TangentVector ty = transport(p, x, y, t);
    CHECK(std::abs(ty.norm() - y.norm()) <= 1e-12);
    const Matrix& q = ty.anchor().matrix().matrix();
    CHECK((ty.matrix().matrix() * q + q * ty.matrix().matrix()).norm() <= 1e-10);
  }
  // The velocity is carried to the velocity.
  const Transvection tv(x, 0.8);
  const double h = 1e-5;
  const Matrix d = (geodesic(p, x, 0.8 + h).matrix().matrix() -
                    geodesic(p, x, 0.8 - h).matrix().matrix()) /
                   (2 * h);
  CHECK((tv.carry(x).matrix().matrix() - d).norm() <= 1e-8);
}

TEST_CASE("anchors") {
  Rng rng = make_rng(8);
  const GrassmannPoint p = point_random(4, 2, rng);
  const GrassmannPoint q = point_random(4, 2, rng);
  CHECK_NOTHROW(require_common_anchor(p, p, "test"));
  CHECK_THROWS_AS(require_common_anchor(p, q, "test"), AnchorError);
  CHECK_THROWS_AS(tangent_random(p, rng) + tangent_random(q, rng), AnchorError);
}
