#include "doctest.h"
#include "ggs/curve.hpp"
#include "ggs/error.hpp"

using namespace ggs;

TEST_CASE("curve parameters for the three reference pairs") {
  CurveParams a = curve_params(2, 5);
  CHECK(a.p == 2);
  CHECK(a.h == 1);
  CHECK(a.m == 11);
  CHECK(a.genus == 46);
  CHECK(a.n_affine == 3968);
  CHECK(a.n_rational == 3969);
  CHECK(a.pole_x == 33);
  CHECK(a.pole_y == 22);
  CHECK(a.pole_z == 8);

  CurveParams b = curve_params(2, 7);
  CHECK(b.m == 43);
  CHECK(b.genus == 190);
  CHECK(b.n_rational == 65025);

  CurveParams c = curve_params(3, 3);
  CHECK(c.m == 7);
  CHECK(c.genus == 99);
  CHECK(c.n_affine == 6075);
  CHECK(c.n_rational == 6076);

  CurveParams d = curve_params(4, 3);
  CHECK(d.p == 2);
  CHECK(d.h == 2);
  CHECK(d.m == 13);

  CHECK_THROWS_WITH_AS(curve_params(2, 4), doctest::Contains("EvenN"), error);
  CHECK_THROWS_WITH_AS(curve_params(2, 1), doctest::Contains("EvenN"), error);
  CHECK_THROWS_WITH_AS(curve_params(6, 3), doctest::Contains("QNotPrimePower"), error);
}

TEST_CASE("pole orders and valuations at the two marked points") {
  CurveParams par = curve_params(2, 5);
  CHECK(pole_order_infinity({1, 0, 0}, par) == 33);
  CHECK(pole_order_infinity({0, 1, 0}, par) == 22);
  CHECK(pole_order_infinity({0, 0, 1}, par) == 8);
  CHECK(pole_order_infinity({3, 0, 0}, par) == 99);
  CHECK(pole_order_infinity({1, 2, 3}, par) == 33 + 44 + 24);
  // div(y^r z^t / x^s) has coefficient mr+t-m(q+1)s at P_0 and
  // m(q+1)s-mqr-tq^3 at P_inf.
  auto v = valuation_p0(1, 2, 3, par);
  CHECK(v.first == 11 * 1 + 2 - 11 * 3 * 3);
  CHECK(v.second == 11 * 3 * 3 - 22 * 1 - 8 * 2);
}

TEST_CASE("point enumeration satisfies both defining equations") {
  Curve curve(2, 5);
  const auto& pts = curve.points();
  REQUIRE(pts.size() == 3968);
  const Field& F = curve.field();
  const CurveParams& par = curve.params();
  size_t z_zero = 0;
  for (const AffinePoint& pt : pts) {
    CHECK(curve.on_curve(pt));
    if (pt.z == 0) ++z_zero;
    // Spot-check the equations directly on a sample.
    if ((pt.x ^ pt.y ^ pt.z) % 157 == 0) {
      CHECK(F.add(F.pow(pt.x, par.q), pt.x) == F.pow(pt.y, par.q + 1));
      CHECK(F.sub(F.pow(pt.y, par.q * par.q), pt.y) == F.pow(pt.z, par.m));
    }
  }
  // The z = 0 points biject with the q^3 solutions of the first equation.
  CHECK(z_zero == 8);
  CHECK(pts[0].x == 0);
  CHECK(pts[0].y == 0);
  CHECK(pts[0].z == 0);
}

TEST_CASE("point order is canonical and deterministic") {
  Curve a(2, 5), b(2, 5);
  REQUIRE(a.points().size() == b.points().size());
  for (size_t i = 0; i < a.points().size(); i += 173) {
    CHECK(a.points()[i] == b.points()[i]);
  }
}

TEST_CASE("monomial evaluation matches manual powers") {
  Curve curve(2, 5);
  const Field& F = curve.field();
  AffinePoint pt = curve.points()[2025];
  Monomial mono{2, 1, 3};
  uint32_t manual = F.mul(F.mul(F.pow(pt.x, 2), F.pow(pt.y, 1)), F.pow(pt.z, 3));
  CHECK(curve.eval(mono, pt) == manual);
  CHECK(curve.eval(mono, Point::affine(pt)) == manual);
  CHECK_THROWS_WITH_AS(curve.eval(mono, Point::infinity()),
                       doctest::Contains("InfinitePoint"), error);
}

TEST_CASE("characteristic-3 curve enumerates correctly") {
  Curve curve(3, 3);
  CHECK(curve.points().size() == 6075);
  for (size_t i = 0; i < curve.points().size(); i += 997) {
    CHECK(curve.on_curve(curve.points()[i]));
  }
}
