#pragma once

#include <cstdint>
#include <vector>

#include "ggs/curve.hpp"
#include "ggs/gfmat.hpp"
#include "ggs/semigroup.hpp"

namespace ggs {

// Monomial basis of L(l P_inf): x^a y^b z^c with b <= q, c <= m-1, a free,
// pole order a(q^n+1) + b m q + c q^3 <= l. The digit bounds make pole orders
// pairwise distinct; the list is sorted by pole order.
std::vector<Monomial> rr_basis_infinity(uint64_t l, const CurveParams& par);

struct EvalCode {
  uint64_t l_requested = 0;
  uint64_t l_effective = 0;  // largest element <= l_requested
  std::vector<Monomial> basis;
  GfMatrix gen;              // |basis| x N evaluation matrix
  size_t rank = 0;
};

// C(D, l P_inf) with D the sum of all affine points. A gap l is canonicalized
// down to the previous element (recorded in l_requested / l_effective).
// RankDeficient when the evaluation matrix loses rank (never happens when
// l < N, guarded anyway).
EvalCode build_code(const Curve& curve, uint64_t l);

// Ranks of the nested evaluation matrices for every element l <= lmax,
// computed in one incremental elimination pass. Returns (rho, rank) pairs.
std::vector<std::pair<uint64_t, size_t>> rank_profile(const Curve& curve, uint64_t lmax);

// True iff every row of inner's generator matrix lies in outer's row space.
bool contains_code(const EvalCode& outer, const EvalCode& inner, const Field& F);

// Parameters of the dual code C_l = C^perp(D, rho_l P_inf).
struct DualParams {
  uint64_t l_index = 0;  // 1-based index of rho_l in H(P_inf), rho_1 = 0
  uint64_t rho = 0;
  uint64_t k_dual = 0;   // N - l_index
  uint64_t d_ord = 0;
  bool closed_form = false;  // q=2 closed dispatch resolved it
  int64_t delta = 0;         // l_index + 1 - d_ord
  uint64_t length = 0;       // N, denominator of the defect rate
};

DualParams dual_params(uint64_t l_index, const CurveParams& par, const Semigroup& h_inf);

// Same parameters via the generic nu scan only; valid for any Weierstrass
// semigroup of a rational point (e.g. the P_0 side), where the closed q=2
// dispatch does not apply.
DualParams dual_params_oracle(uint64_t l_index, const CurveParams& par,
                              const Semigroup& sg);

// One row of the two-point comparison: the P_0 code C_{l0}(P_0) dominates
// C_{linf}(P_inf) in dimension and designed distance and strictly wins on
// designed Singleton defect.
struct CompareRow {
  uint64_t l0 = 0, l_inf = 0;
  uint64_t d0 = 0, d_inf = 0;
  int64_t delta0 = 0, delta_inf = 0;
};

// All such pairs with l0 in [lmin, lmax] and linf in {l0, l0+1}; the P_0 side
// order bound always comes from the generic semigroup scan.
std::vector<CompareRow> improvement_table(const CurveParams& par, const Semigroup& h_inf,
                                          const Semigroup& h_p0, uint64_t lmin,
                                          uint64_t lmax);

// Minimum weight among `samples` seeded pseudo-random nonzero words of the
// dual code (nullspace of gen, sampled through the RREF pivot relations).
uint64_t min_dual_weight_sampled(const EvalCode& code, const Field& F, size_t samples,
                                 uint64_t seed);

}  // namespace ggs
