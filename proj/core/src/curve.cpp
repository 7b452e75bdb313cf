#include "ggs/curve.hpp"

#include <algorithm>

namespace ggs {
namespace {

uint64_t checked_pow(uint64_t base, uint32_t e) {
  using u128 = unsigned __int128;
  u128 limit = u128(1) << 62;
  u128 r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    r *= base;
    require(r < limit, "UnsupportedFieldSize", "curve parameter overflow");
  }
  return uint64_t(r);
}

}  // namespace

CurveParams curve_params(uint32_t q, uint32_t n) {
  require(n >= 3 && n % 2 == 1, "EvenN", "n must be odd and >= 3");
  uint32_t p = 0;
  for (uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  require(p >= 2, "QNotPrimePower", "q must be a prime power >= 2");
  uint32_t h = 0;
  {
    uint32_t t = q;
    while (t % p == 0) {
      t /= p;
      ++h;
    }
    require(t == 1, "QNotPrimePower", "q must be a power of a single prime");
  }

  CurveParams par;
  par.q = q;
  par.n = n;
  par.p = p;
  par.h = h;
  uint64_t qn = checked_pow(q, n);
  require((qn + 1) % (q + 1) == 0, "EvenN", "q+1 must divide q^n+1");
  par.m = (qn + 1) / (q + 1);
  par.genus = (uint64_t(q) - 1) * (checked_pow(q, n + 1) + qn - uint64_t(q) * q) / 2;
  par.n_affine = checked_pow(q, 2 * n + 2) - checked_pow(q, n + 3) + checked_pow(q, n + 2);
  par.n_rational = checked_pow(q, 2 * n) + 1 + 2 * par.genus * qn;
  par.pole_x = qn + 1;
  par.pole_y = par.m * q;
  par.pole_z = uint64_t(q) * q * q;
  return par;
}

uint64_t pole_order_infinity(const Monomial& mono, const CurveParams& par) {
  return mono.a * par.pole_x + mono.b * par.pole_y + mono.c * par.pole_z;
}

std::pair<int64_t, int64_t> valuation_p0(uint64_t r, uint64_t t, uint64_t s,
                                         const CurveParams& par) {
  int64_t m = int64_t(par.m);
  int64_t at_p0 = m * int64_t(r) + int64_t(t) - m * int64_t(par.q + 1) * int64_t(s);
  int64_t at_inf = m * int64_t(par.q + 1) * int64_t(s) - m * int64_t(par.q) * int64_t(r) -
                   int64_t(t) * int64_t(par.pole_z);
  return {at_p0, at_inf};
}

Curve::Curve(uint32_t q, uint32_t n) : par_(curve_params(q, n)) {
  F_ = Field::make(par_.p, 2 * n * par_.h);
  Fq2_ = Field::make(par_.p, 2 * par_.h);
  emb_.emplace(Fq2_, F_);

  const Field& F = *F_;
  auto key = [&](uint32_t u) -> uint32_t { return u == 0 ? 0 : 1 + F.dlog(u); };

  // Fibers of the GF(q)-linear map x -> x^q + x, each preimage list sorted in
  // canonical key order.
  std::vector<std::vector<uint32_t>> fiber(F.size());
  for (uint32_t i = 0; i <= F.order(); ++i) {
    uint32_t x = (i == 0) ? 0 : F.exp_of(i - 1);
    uint32_t img = F.add(F.pow(x, q), x);
    fiber[img].push_back(x);  // key order follows iteration order
  }

  pts_.reserve(par_.n_affine);
  for (uint32_t i = 0; i <= F.order(); ++i) {
    uint32_t y = (i == 0) ? 0 : F.exp_of(i - 1);
    uint32_t rhs = F.pow(y, q + 1);
    const auto& xs = fiber[rhs];
    if (xs.empty()) continue;
    uint32_t c = F.sub(F.pow(y, uint64_t(q) * q), y);
    std::vector<uint32_t> zs = F.mth_roots(c, par_.m);
    std::sort(zs.begin(), zs.end(),
              [&](uint32_t a, uint32_t b) { return key(a) < key(b); });
    for (uint32_t x : xs)
      for (uint32_t z : zs) pts_.push_back({x, y, z});
  }
  require(pts_.size() == par_.n_affine, "CountMismatch",
          "enumerated " + std::to_string(pts_.size()) + " affine points, expected " +
              std::to_string(par_.n_affine));
}

bool Curve::on_curve(const AffinePoint& pt) const {
  const Field& F = *F_;
  uint32_t lhs1 = F.add(F.pow(pt.x, par_.q), pt.x);
  uint32_t rhs1 = F.pow(pt.y, par_.q + 1);
  uint32_t lhs2 = F.sub(F.pow(pt.y, uint64_t(par_.q) * par_.q), pt.y);
  uint32_t rhs2 = F.pow(pt.z, par_.m);
  return lhs1 == rhs1 && lhs2 == rhs2;
}

uint32_t Curve::eval(const Monomial& mono, const AffinePoint& pt) const {
  const Field& F = *F_;
  return F.mul(F.mul(F.pow(pt.x, mono.a), F.pow(pt.y, mono.b)), F.pow(pt.z, mono.c));
}

uint32_t Curve::eval(const Monomial& mono, const Point& pt) const {
  require(!pt.at_infinity, "InfinitePoint",
          "monomials are evaluated at affine points only");
  return eval(mono, pt.aff);
}

}  // namespace ggs
