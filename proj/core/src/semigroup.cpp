#include "ggs/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace ggs {

Semigroup Semigroup::from_generators(std::vector<uint64_t> gens, uint64_t min_bound) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!gens.empty() && gens[0] == 0) gens.erase(gens.begin());
  require(!gens.empty(), "GcdNotOne", "no nonzero generators given");
  uint64_t d = 0;
  for (uint64_t a : gens) d = std::gcd(d, a);
  require(d == 1, "GcdNotOne", "generators have gcd " + std::to_string(d));

  Semigroup s;
  s.gens_ = gens;
  uint64_t B = std::max<uint64_t>(min_bound, 4 * gens.back() + 64);
  for (int pass = 0; pass < 4; ++pass) {
    s.member_.assign(B + 1, false);
    s.member_[0] = true;
    for (uint64_t v = 1; v <= B; ++v) {
      for (uint64_t a : gens) {
        if (a > v) break;
        if (s.member_[v - a]) {
          s.member_[v] = true;
          break;
        }
      }
    }
    uint64_t last_gap_plus1 = 0;
    for (uint64_t v = 0; v <= B; ++v)
      if (!s.member_[v]) last_gap_plus1 = v + 1;
    uint64_t c = last_gap_plus1;
    // c is the true conductor once the window [c, c + min_gen) is inside S,
    // which B >= c + min_gen guarantees; we also keep B >= 2c for queries.
    uint64_t need = std::max({min_bound, 2 * c, c + gens[0]});
    if (B >= need) {
      s.conductor_ = c;
      break;
    }
    B = need + 64;
  }
  s.finalize();
  return s;
}

Semigroup Semigroup::from_elements(const std::vector<uint64_t>& low_elements,
                                   uint64_t conductor_hint, uint64_t min_bound) {
  Semigroup s;
  uint64_t B = std::max({min_bound, 2 * conductor_hint, uint64_t(64)});
  s.member_.assign(B + 1, false);
  for (uint64_t v : low_elements) {
    require(v < conductor_hint, "ConsistencyFailure",
            "low element at or above the conductor hint");
    s.member_[v] = true;
  }
  for (uint64_t v = conductor_hint; v <= B; ++v) s.member_[v] = true;
  require(s.member_[0], "ConsistencyFailure", "0 must belong to the semigroup");
  uint64_t last_gap_plus1 = 0;
  for (uint64_t v = 0; v < conductor_hint; ++v)
    if (!s.member_[v]) last_gap_plus1 = v + 1;
  s.conductor_ = last_gap_plus1;
  s.finalize();
  return s;
}

void Semigroup::finalize() {
  bound_ = member_.size() - 1;
  genus_ = 0;
  elements_.clear();
  for (uint64_t v = 0; v <= bound_; ++v) {
    if (member_[v]) {
      elements_.push_back(v);
    } else if (v < conductor_) {
      ++genus_;
    }
  }
}

uint64_t Semigroup::value_at(uint64_t l) const {
  require(l >= 1, "IndexBeyondBound", "element indices are 1-based");
  if (l - 1 < elements_.size()) return elements_[l - 1];
  // Past the bound every integer is a member: rho_l = l + g - 1 there.
  return l + genus_ - 1;
}

uint64_t Semigroup::index_of(uint64_t rho) const {
  require(contains(rho), "NotAnElement", std::to_string(rho) + " is a gap");
  if (rho >= conductor_) return rho - genus_ + 1;
  auto it = std::lower_bound(elements_.begin(), elements_.end(), rho);
  return uint64_t(it - elements_.begin()) + 1;
}

uint64_t Semigroup::count_upto(uint64_t x) const {
  if (x >= conductor_) return x - genus_ + 1;
  auto it = std::upper_bound(elements_.begin(), elements_.end(), x);
  return uint64_t(it - elements_.begin());
}

uint64_t Semigroup::nu(uint64_t l) const {
  require(l >= 1, "IndexBeyondBound", "nu indices are 1-based");
  uint64_t rho = value_at(l + 1);
  uint64_t count = 0;
  for (uint64_t a = 0; a <= rho; ++a)
    if (contains(a) && contains(rho - a)) ++count;
  return count;
}

uint64_t Semigroup::dord(uint64_t l) const {
  require(l >= 1, "IndexBeyondBound", "order bound indices are 1-based");
  uint64_t best = UINT64_MAX;
  for (uint64_t s = l;; ++s) {
    best = std::min(best, nu(s));
    // nu_t >= t + 1 - g for every t, so no later index can beat best.
    if (s + 1 >= genus_ && s + 1 - genus_ >= best) return best;
  }
}

bool Semigroup::is_symmetric() const {
  bool primary = !contains(2 * genus_ - 1);
  if (genus_ == 0) primary = true;  // the full semigroup is vacuously symmetric
  bool pairing = true;
  for (uint64_t x = 0; x < 2 * genus_; ++x)
    if (contains(x) == contains(2 * genus_ - 1 - x)) {
      pairing = false;
      break;
    }
  if (genus_ == 0) pairing = true;
  if (primary) {
    require(pairing, "ConsistencyFailure",
            "2g-1 is a gap but the symmetry pairing fails");
  } else {
    require(!pairing, "ConsistencyFailure",
            "2g-1 is an element but the symmetry pairing holds");
  }
  return primary;
}

bool Semigroup::is_telescopic(const std::vector<uint64_t>& ordered_gens) {
  require(!ordered_gens.empty(), "GcdNotOne", "no generators given");
  uint64_t d_all = 0;
  for (uint64_t a : ordered_gens) d_all = std::gcd(d_all, a);
  require(d_all == 1, "GcdNotOne", "generators have gcd " + std::to_string(d_all));
  for (uint64_t a : ordered_gens)
    require(a >= 1, "GcdNotOne", "generators must be positive");

  if (ordered_gens.size() == 1) return true;  // forces a_1 = 1
  uint64_t d_prev = ordered_gens[0];
  for (size_t i = 1; i < ordered_gens.size(); ++i) {
    uint64_t a_i = ordered_gens[i];
    uint64_t d_i = std::gcd(d_prev, a_i);
    std::vector<uint64_t> scaled;
    for (size_t j = 0; j < i; ++j) scaled.push_back(ordered_gens[j] / d_prev);
    uint64_t target = a_i / d_i;
    Semigroup prefix = Semigroup::from_generators(scaled, target + 2);
    if (!prefix.contains(target)) return false;
    d_prev = d_i;
  }
  return true;
}

}  // namespace ggs
