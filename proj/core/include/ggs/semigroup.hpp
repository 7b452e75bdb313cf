#pragma once

#include <cstdint>
#include <vector>

#include "ggs/error.hpp"

namespace ggs {

// A numerical semigroup held as a membership bitmap plus the sorted element
// list up to a bound B >= 2 * conductor, so every query below 2c is exact and
// membership above B falls through to v >= conductor.
class Semigroup {
public:
  static Semigroup from_generators(std::vector<uint64_t> gens, uint64_t min_bound = 0);
  // elements: every member in [0, 2g) of a semigroup whose conductor is
  // certified <= conductor_hint; the complement in [0, conductor) is the gap set.
  static Semigroup from_elements(const std::vector<uint64_t>& low_elements,
                                 uint64_t conductor_hint, uint64_t min_bound = 0);

  uint64_t genus() const { return genus_; }
  uint64_t conductor() const { return conductor_; }
  uint64_t bound() const { return bound_; }
  const std::vector<uint64_t>& elements() const { return elements_; }

  bool contains(uint64_t v) const {
    if (v <= bound_) return member_[v];
    return v >= conductor_;
  }

  // rho_l, 1-based: rho_1 = 0. Works for any l (closed form past the bound).
  uint64_t value_at(uint64_t l) const;
  // Inverse of value_at. Throws NotAnElement when rho is a gap.
  uint64_t index_of(uint64_t rho) const;
  // Number of elements <= x.
  uint64_t count_upto(uint64_t x) const;

  // nu_l = #{(a, b) in S x S : a + b = rho_{l+1}}, 1-based l >= 1.
  uint64_t nu(uint64_t l) const;
  // Order bound d_ORD(l) = min_{s >= l} nu_s. The scan stops once the floor
  // nu_t >= t + 1 - g rules out any further improvement.
  uint64_t dord(uint64_t l) const;

  // True iff 2g - 1 is a gap; cross-checked against the pairing
  // x in S <=> 2g - 1 - x not in S on [0, 2g).
  bool is_symmetric() const;

  // Telescopic test for the given ordered generator list (a_1, ..., a_t):
  // with d_i = gcd(a_1..a_i), each a_i / d_i must lie in the semigroup
  // generated by a_1 / d_{i-1}, ..., a_{i-1} / d_{i-1}.
  static bool is_telescopic(const std::vector<uint64_t>& ordered_gens);

private:
  Semigroup() = default;
  void finalize();

  std::vector<bool> member_;
  std::vector<uint64_t> elements_;
  uint64_t genus_ = 0;
  uint64_t conductor_ = 0;
  uint64_t bound_ = 0;
  std::vector<uint64_t> gens_;
};

}  // namespace ggs
