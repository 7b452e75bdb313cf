#pragma once

#include <cstdint>
#include <vector>

#include "ggs/agcode.hpp"
#include "ggs/curve.hpp"
#include "ggs/semigroup.hpp"

namespace ggs {

// A curve automorphism in structured form; both kinds fix P_inf.
//   translation(a,b): (x,y,z) -> (x + b^q y + a, y + b, z), a,b in GF(q^2)
//                     with a^q + a = b^{q+1};
//   diagonal(e):      (x,y,z) -> (zeta^{(q^n+1)e} x, zeta^{me} y, zeta^e z)
//                     for zeta a fixed primitive (q^n+1)(q-1)-th root of unity.
struct CurveAut {
  enum class Kind { translation, diagonal };
  Kind kind = Kind::translation;
  uint32_t a = 0, b = 0;  // small-field codes (translation)
  uint64_t e = 0;         // power of the diagonal generator
};

// Bundles the data every action needs: the fixed zeta and the point index.
class AutContext {
 public:
  explicit AutContext(const Curve& curve);

  const Curve& curve() const { return curve_; }
  uint32_t zeta() const { return zeta_; }
  uint64_t sigma_order() const;  // (q^n+1)(q-1)
  uint64_t group_order() const;  // q^3 (q-1)(q^n+1)

  // All q^3 translations, identity first (pairs enumerated in code order).
  std::vector<CurveAut> q_group() const;
  // The diagonal generator of the cyclic factor of order (q^n+1)(q-1).
  CurveAut sigma_generator() const;

  AffinePoint apply(const CurveAut& aut, const AffinePoint& pt) const;
  // Index permutation over the affine points in curve().points() order.
  std::vector<uint32_t> permutation(const CurveAut& aut) const;

  // Orbit sizes (ascending) of the group generated, over all rational points
  // including the fixed P_inf singleton.
  std::vector<uint64_t> orbit_sizes(const std::vector<CurveAut>& generators) const;

  // True iff coordinate permutation by the automorphism maps the code's row
  // space into itself.
  bool preserves_code(const CurveAut& aut, const EvalCode& code) const;

 private:
  uint64_t point_key(const AffinePoint& pt) const;

  const Curve& curve_;
  uint32_t zeta_ = 0;
  // Packed coordinates -> position in curve().points(), sorted by key.
  std::vector<std::pair<uint64_t, uint32_t>> index_;
};

// Order of the full automorphism group of the degree-l one-point code:
// q^3 (q-1)(q^n+1) * (2nh) * (q^{2n}-1), valid for q^n+1 <= l <= q^{n+2}-q^3
// with both l and l-1 elements of H(P_inf).
uint64_t code_aut_order(uint64_t l, const CurveParams& par, const Semigroup& h_inf);

}  // namespace ggs
