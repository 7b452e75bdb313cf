#pragma once

#include <cstdint>
#include <vector>

#include "ggs/semigroup.hpp"

namespace ggs {

// The Weierstrass semigroup at the origin P_0 is assembled from seven
// explicit families of pole orders of monomial fractions y^r z^t / x^s.
// Sets may be empty for small q (their index ranges collapse); that is not
// an error. Elements can exceed 2g-1 for q > 2; h_p0 keeps the in-range part.
struct LSets {
  std::vector<std::vector<int64_t>> sets;  // 7 sorted lists
  std::vector<int64_t> formula_sizes;      // printed cardinalities (L5 clamped at 0)
};

LSets build_lsets(uint32_t q, uint32_t n);

std::vector<int64_t> lset_cardinalities(uint32_t q, uint32_t n);

// The semigroup H(P_0): union of the seven sets restricted to [0, 2g-1],
// validated (disjointness, 0 present, exactly g in-range elements, additive
// closure in range) and completed past the conductor. ConsistencyFailure on
// any violation.
Semigroup h_p0(uint32_t q, uint32_t n, uint64_t min_bound = 0);

// Independent oracle: in-range pole orders m(q+1)s - mr - t of the monomial
// family with effective divisors away from P_0, closed under addition within
// [0, 2g-1]. Returns the sorted element list.
std::vector<uint64_t> p0_oracle(uint32_t q, uint32_t n);

}  // namespace ggs
