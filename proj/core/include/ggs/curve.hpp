#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ggs/gf.hpp"

namespace ggs {

// Parameters of the curve x^q + x = y^{q+1}, y^{q^2} - y = z^m over
// GF(q^{2n}), with q a prime power and n >= 3 odd, m = (q^n + 1)/(q + 1).
struct CurveParams {
  uint32_t q = 0, n = 0;
  uint32_t p = 0, h = 0;  // q = p^h
  uint64_t m = 0;
  uint64_t genus = 0;
  uint64_t n_affine = 0;    // q^{2n+2} - q^{n+3} + q^{n+2}
  uint64_t n_rational = 0;  // q^{2n} + 1 + 2 g q^n (affine points plus P_inf)
  uint64_t pole_x = 0;      // q^n + 1 = m (q + 1)
  uint64_t pole_y = 0;      // m q
  uint64_t pole_z = 0;      // q^3
};

CurveParams curve_params(uint32_t q, uint32_t n);

struct AffinePoint {
  uint32_t x, y, z;
  bool operator==(const AffinePoint&) const = default;
};

// A rational point: either affine or the single point at infinity.
struct Point {
  static Point infinity() { return Point{true, {0, 0, 0}}; }
  static Point affine(AffinePoint a) { return Point{false, a}; }
  bool at_infinity;
  AffinePoint aff;
};

struct Monomial {
  uint64_t a = 0, b = 0, c = 0;  // x^a y^b z^c
  bool operator==(const Monomial&) const = default;
};

// -v_{P_inf}(x^a y^b z^c) = a(q^n+1) + b m q + c q^3.
uint64_t pole_order_infinity(const Monomial& mono, const CurveParams& par);

// Coefficients of div(y^r z^t / x^s) at (P_0, P_inf); the rest of the divisor
// is effective when t <= (s m (q+1) - r q m)/q^3.
std::pair<int64_t, int64_t> valuation_p0(uint64_t r, uint64_t t, uint64_t s,
                                         const CurveParams& par);

class Curve {
public:
  Curve(uint32_t q, uint32_t n);

  const CurveParams& params() const { return par_; }
  const Field& field() const { return *F_; }          // GF(q^{2n})
  FieldPtr field_ptr() const { return F_; }
  const Field& base_field() const { return *Fq2_; }   // GF(q^2)
  const Embedding& embedding() const { return *emb_; }

  // All affine rational points in canonical order: lexicographic by
  // (key(y), key(x), key(z)) with key(0) = 0 and key(u) = 1 + dlog(u).
  const std::vector<AffinePoint>& points() const { return pts_; }

  bool on_curve(const AffinePoint& pt) const;
  uint32_t eval(const Monomial& mono, const AffinePoint& pt) const;
  uint32_t eval(const Monomial& mono, const Point& pt) const;

private:
  CurveParams par_;
  FieldPtr F_, Fq2_;
  std::optional<Embedding> emb_;
  std::vector<AffinePoint> pts_;
};

}  // namespace ggs
