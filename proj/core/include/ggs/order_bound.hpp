#pragma once

#include <cstdint>
#include <optional>

#include "ggs/semigroup.hpp"

namespace ggs {

// Closed combinatorics of H(P_inf) = <q^3, mq, q^n+1> for q = 2, n odd >= 5:
// every element has a unique representation rho = 3mi + 2mj + 8k with
// i in {0,1}, j in {0,...,3}, k >= 0, where m = (2^n + 1)/3.
struct Triple {
  int32_t i = 0, j = 0;
  int64_t k = 0;
  bool operator==(const Triple&) const = default;
};

int64_t two_pow_m(uint32_t n);   // m = (2^n + 1)/3
int64_t two_pow_2g(uint32_t n);  // 2g = 9m - 7

std::optional<Triple> try_triple_of(int64_t rho, uint32_t n);
Triple triple_of(int64_t rho, uint32_t n);  // throws NotANongap on gaps
int64_t triple_value(const Triple& t, uint32_t n);

// nu_l as a closed form in the triple of rho_{l+1}; exact for all elements.
int64_t nu_closed(const Triple& t, uint32_t n);

struct OrderBoundResult {
  std::optional<int64_t> value;  // empty: no closed branch applies
  const char* method;  // "pastconductor" | "window" | "symmetricshift" |
                       // "caselemma" | "unresolved"
};

// Closed-form d_ORD(l) driven by rho_{l+1} (which must be an element).
// Dispatch order: rho >= 4g exact value; the (0,1,k) window formula;
// the symmetric-shift reduction to nu_l; the per-shape case branches capped
// at nu_l. Anything else reports unresolved so callers can fall back to the
// generic semigroup scan.
OrderBoundResult dord_closed(int64_t rho_next, uint32_t n);

// The as-printed constant of the disputed (0,3,k) middle branch, exposed for
// inspection only; dord_closed never uses it.
int64_t dord_flagged_printed(uint32_t n);

// Head range, any q: if rho_{l+1} <= (q-1)(q^n+1) then d_ORD(l) = j+1 where
// (j-1)(q^n+1) < rho_{l+1} <= j(q^n+1). Pure formula in rho_next.
int64_t dord_telescopic_head(int64_t rho_next, uint32_t q, uint32_t n);

// Tail range: for (q-1)(3q^{n+1}+q^n-3q^2-2)/2 - 2 < l <= 3g-2,
// d_ORD(l) is the smallest element of H(P_inf) that is >= l+1-g.
int64_t dord_tail(uint64_t l, uint32_t q, uint32_t n, const Semigroup& h_inf);

// True iff e = rho_next - 2g + 1 is a gap of h_inf; rho_next >= 2g required.
bool gap_character(int64_t rho_next, const Semigroup& h_inf);

// True iff rho_next has shape (0,1,k) with m <= k < 2m (q = 2 improvement
// window).
bool improvement_shape(int64_t rho_next, uint32_t n);

// Distance bonus over l+1-g inside the improvement window: 5, 3 or 1 by the
// thresholds 8k < 9m-11 and 8k < 11m-9.
int64_t improvement_bonus(int64_t rho_next, uint32_t n);

}  // namespace ggs
