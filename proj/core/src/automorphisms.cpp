#include "ggs/automorphisms.hpp"

#include <algorithm>

#include "ggs/error.hpp"
#include "ggs/gfmat.hpp"

namespace ggs {

namespace {

std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

AutContext::AutContext(const Curve& curve) : curve_(curve) {
  const Field& F = curve.field();
  uint64_t M = F.order();
  uint64_t o = sigma_order();
  require(M % o == 0, "OrderCheckFailed",
          "(q^n+1)(q-1) does not divide the multiplicative group order");
  zeta_ = F.exp_of(M / o);
  require(F.pow(zeta_, o) == 1, "OrderCheckFailed", "zeta^o != 1");
  for (uint64_t r : prime_factors(o)) {
    require(F.pow(zeta_, o / r) != 1, "OrderCheckFailed",
            "zeta has order below (q^n+1)(q-1)");
  }
  const auto& pts = curve.points();
  index_.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    index_.push_back({point_key(pts[i]), static_cast<uint32_t>(i)});
  }
  std::sort(index_.begin(), index_.end());
  for (size_t i = 1; i < index_.size(); ++i) {
    require(index_[i - 1].first != index_[i].first, "ConsistencyFailure",
            "duplicate affine point");
  }
}

uint64_t AutContext::point_key(const AffinePoint& pt) const {
  // Field size is capped at 2^20, so 20 bits per coordinate always fit.
  return (static_cast<uint64_t>(pt.x) << 40) | (static_cast<uint64_t>(pt.y) << 20) |
         static_cast<uint64_t>(pt.z);
}

uint64_t AutContext::sigma_order() const {
  const CurveParams& par = curve_.params();
  uint64_t qn = par.pole_x - 1;  // q^n
  return (qn + 1) * (par.q - 1);
}

uint64_t AutContext::group_order() const {
  const CurveParams& par = curve_.params();
  uint64_t q = par.q;
  uint64_t qn = par.pole_x - 1;
  return q * q * q * (q - 1) * (qn + 1);
}

std::vector<CurveAut> AutContext::q_group() const {
  const Field& S = curve_.base_field();
  const CurveParams& par = curve_.params();
  std::vector<CurveAut> out;
  for (uint32_t a = 0; a < S.size(); ++a) {
    uint32_t lhs = S.add(S.pow(a, par.q), a);
    for (uint32_t b = 0; b < S.size(); ++b) {
      if (lhs == S.pow(b, par.q + 1)) {
        out.push_back({CurveAut::Kind::translation, a, b, 0});
      }
    }
  }
  uint64_t expect = static_cast<uint64_t>(par.q) * par.q * par.q;
  require(out.size() == expect, "CountMismatch",
          "translation group size differs from q^3");
  return out;
}

CurveAut AutContext::sigma_generator() const {
  return {CurveAut::Kind::diagonal, 0, 0, 1};
}

AffinePoint AutContext::apply(const CurveAut& aut, const AffinePoint& pt) const {
  const Field& F = curve_.field();
  const CurveParams& par = curve_.params();
  if (aut.kind == CurveAut::Kind::translation) {
    const Embedding& emb = curve_.embedding();
    uint32_t A = emb(aut.a);
    uint32_t B = emb(aut.b);
    uint32_t Bq = F.pow(B, par.q);
    AffinePoint img;
    img.x = F.add(F.add(pt.x, F.mul(Bq, pt.y)), A);
    img.y = F.add(pt.y, B);
    img.z = pt.z;
    return img;
  }
  uint64_t M = F.order();
  uint64_t qn1 = par.pole_x;  // q^n + 1
  uint64_t e = aut.e % M;
  uint64_t ex = (qn1 % M) * e % M;
  uint64_t ey = (par.m % M) * e % M;
  AffinePoint img;
  img.x = F.mul(F.pow(zeta_, ex), pt.x);
  img.y = F.mul(F.pow(zeta_, ey), pt.y);
  img.z = F.mul(F.pow(zeta_, e), pt.z);
  return img;
}

std::vector<uint32_t> AutContext::permutation(const CurveAut& aut) const {
  const auto& pts = curve_.points();
  std::vector<uint32_t> perm(pts.size());
  std::vector<char> seen(pts.size(), 0);
  for (size_t i = 0; i < pts.size(); ++i) {
    AffinePoint img = apply(aut, pts[i]);
    uint64_t key = point_key(img);
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::make_pair(key, uint32_t{0}));
    require(it != index_.end() && it->first == key, "NotAPermutation",
            "automorphism image left the point set");
    require(!seen[it->second], "NotAPermutation", "automorphism image collides");
    seen[it->second] = 1;
    perm[i] = it->second;
  }
  return perm;
}

std::vector<uint64_t> AutContext::orbit_sizes(
    const std::vector<CurveAut>& generators) const {
  size_t n = curve_.points().size();
  // Index n stands for P_inf, fixed by every generator.
  std::vector<uint32_t> parent(n + 1);
  for (size_t i = 0; i <= n; ++i) parent[i] = static_cast<uint32_t>(i);
  auto find = [&](uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const CurveAut& gen : generators) {
    std::vector<uint32_t> perm = permutation(gen);
    for (size_t i = 0; i < n; ++i) {
      uint32_t a = find(static_cast<uint32_t>(i));
      uint32_t b = find(perm[i]);
      if (a != b) parent[a] = b;
    }
  }
  std::vector<uint64_t> count(n + 1, 0);
  for (size_t i = 0; i <= n; ++i) ++count[find(static_cast<uint32_t>(i))];
  std::vector<uint64_t> sizes;
  for (uint64_t c : count) {
    if (c > 0) sizes.push_back(c);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool AutContext::preserves_code(const CurveAut& aut, const EvalCode& code) const {
  const Field& F = curve_.field();
  require(code.gen.cols == curve_.points().size(), "PreconditionViolated",
          "code length differs from the affine point count");
  GfMatrix R = code.gen;
  std::vector<size_t> pivots;
  size_t rank = rref(R, F, &pivots);
  std::vector<uint32_t> perm = permutation(aut);
  for (size_t r = 0; r < code.gen.rows; ++r) {
    std::vector<uint32_t> v(code.gen.cols);
    const uint32_t* row = code.gen.row(r);
    for (size_t j = 0; j < code.gen.cols; ++j) v[j] = row[perm[j]];
    if (!in_row_space(R, rank, pivots, F, std::move(v))) return false;
  }
  return true;
}

uint64_t code_aut_order(uint64_t l, const CurveParams& par, const Semigroup& h_inf) {
  uint64_t qn = par.pole_x - 1;  // q^n
  uint64_t lo = qn + 1;
  uint64_t hi = qn * par.q * par.q - par.pole_z;  // q^{n+2} - q^3
  require(l >= lo, "HypothesisViolated",
          "l >= q^n+1: " + std::to_string(l) + " >= " + std::to_string(lo));
  require(l <= hi, "HypothesisViolated",
          "l <= q^{n+2}-q^3: " + std::to_string(l) + " <= " + std::to_string(hi));
  require(h_inf.contains(l), "HypothesisViolated", "l is an element of H(P_inf)");
  require(l >= 1 && h_inf.contains(l - 1), "HypothesisViolated",
          "l-1 is an element of H(P_inf)");
  uint64_t q = par.q;
  uint64_t curve_aut = q * q * q * (q - 1) * (qn + 1);
  uint64_t field_aut = 2ull * par.n * par.h;
  uint64_t scalars = qn * qn - 1;  // q^{2n} - 1
  return curve_aut * field_aut * scalars;
}

}  // namespace ggs
