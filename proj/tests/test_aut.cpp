#include <set>

#include "doctest.h"
#include "ggs/automorphisms.hpp"
#include "ggs/curve.hpp"
#include "ggs/error.hpp"
#include "ggs/semigroup.hpp"

using namespace ggs;

namespace {

const Curve& curve25() {
  static Curve curve(2, 5);
  return curve;
}

const AutContext& ctx25() {
  static AutContext ctx(curve25());
  return ctx;
}

}  // namespace

TEST_CASE("translation group has q^3 elements and is closed") {
  auto qg = ctx25().q_group();
  REQUIRE(qg.size() == 8);
  CHECK(qg[0].a == 0);
  CHECK(qg[0].b == 0);
  // Closure: composing two translations lands on a third (checked through
  // the induced point permutations).
  const auto& pts = curve25().points();
  auto p1 = ctx25().permutation(qg[3]);
  auto p2 = ctx25().permutation(qg[5]);
  std::vector<uint32_t> composed(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) composed[i] = p2[p1[i]];
  bool found = false;
  for (const CurveAut& cand : qg) {
    if (ctx25().permutation(cand) == composed) found = true;
  }
  CHECK(found);
}

TEST_CASE("the diagonal generator has exact order 33") {
  const Field& F = curve25().field();
  uint32_t zeta = ctx25().zeta();
  CHECK(ctx25().sigma_order() == 33);
  CHECK(F.pow(zeta, 33) == 1);
  CHECK(F.pow(zeta, 3) != 1);
  CHECK(F.pow(zeta, 11) != 1);
}

TEST_CASE("automorphisms map the point set onto itself") {
  for (const CurveAut& gen : ctx25().q_group()) {
    AffinePoint img = ctx25().apply(gen, curve25().points()[1234]);
    CHECK(curve25().on_curve(img));
  }
  CurveAut sigma = ctx25().sigma_generator();
  auto perm = ctx25().permutation(sigma);
  std::set<uint32_t> image(perm.begin(), perm.end());
  CHECK(image.size() == perm.size());
  // sigma^33 is the identity permutation.
  CurveAut sigma33{CurveAut::Kind::diagonal, 0, 0, 33};
  auto id = ctx25().permutation(sigma33);
  for (size_t i = 0; i < id.size(); ++i) CHECK(id[i] == i);
}

TEST_CASE("matrix form reproduces the structured action") {
  // On column vectors (x, y, z, 1):
  //   translation: [[1, b^q, 0, a], [0,1,0,b], [0,0,1,0], [0,0,0,1]]
  //   diagonal:    diag(zeta^{(q^n+1)e}, zeta^{me}, zeta^e, 1)
  const Field& F = curve25().field();
  const CurveParams& par = curve25().params();
  const Embedding& emb = curve25().embedding();
  auto qg = ctx25().q_group();
  for (const CurveAut& t : qg) {
    uint32_t A = emb(t.a), B = emb(t.b);
    uint32_t Bq = F.pow(B, par.q);
    uint32_t mat[4][4] = {{1, Bq, 0, A}, {0, 1, 0, B}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    AffinePoint pt = curve25().points()[777];
    uint32_t vec[4] = {pt.x, pt.y, pt.z, 1};
    uint32_t out[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) out[r] = F.add(out[r], F.mul(mat[r][c], vec[c]));
    }
    AffinePoint img = ctx25().apply(t, pt);
    CHECK(out[0] == img.x);
    CHECK(out[1] == img.y);
    CHECK(out[2] == img.z);
    CHECK(out[3] == 1);
  }
  CurveAut d{CurveAut::Kind::diagonal, 0, 0, 5};
  uint32_t zeta = ctx25().zeta();
  AffinePoint pt = curve25().points()[2500];
  AffinePoint img = ctx25().apply(d, pt);
  CHECK(img.x == F.mul(F.pow(zeta, 33 * 5), pt.x));
  CHECK(img.y == F.mul(F.pow(zeta, 11 * 5), pt.y));
  CHECK(img.z == F.mul(F.pow(zeta, 5), pt.z));
}

TEST_CASE("orbit decomposition has exactly two short orbits") {
  std::vector<CurveAut> gens = ctx25().q_group();
  gens.push_back(ctx25().sigma_generator());
  auto sizes = ctx25().orbit_sizes(gens);
  REQUIRE(sizes.size() == 17);
  CHECK(sizes[0] == 1);
  CHECK(sizes[1] == 8);
  for (size_t i = 2; i < sizes.size(); ++i) CHECK(sizes[i] == 264);
  CHECK(ctx25().group_order() == 264);
}

TEST_CASE("code automorphism order formula and hypotheses") {
  CurveParams par = curve_params(2, 5);
  Semigroup h = Semigroup::from_generators({8, 22, 33});
  CHECK(code_aut_order(41, par, h) == 2700720);
  // l = 32 < q^n+1.
  CHECK_THROWS_WITH_AS(code_aut_order(32, par, h), doctest::Contains("l >= q^n+1"),
                       error);
  // l = 42 is a gap.
  CHECK_THROWS_WITH_AS(code_aut_order(42, par, h),
                       doctest::Contains("element of H"), error);
  // l - 1 = 39 is a gap.
  CHECK_THROWS_WITH_AS(code_aut_order(40, par, h),
                       doctest::Contains("l-1 is an element"), error);
  // Upper end of the window: q^{n+2} - q^3 = 120.
  CHECK(code_aut_order(120, par, h) > 0);
  CHECK_THROWS_WITH_AS(code_aut_order(121, par, h),
                       doctest::Contains("q^{n+2}-q^3"), error);
}
