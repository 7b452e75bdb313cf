#include "ggs/p0_semigroup.hpp"

#include <algorithm>

#include "ggs/curve.hpp"

namespace ggs {
namespace {

struct P0Params {
  int64_t q, m, g, K;  // K = (m - q^2 + q - 1)/q^3
};

P0Params p0_params(uint32_t q, uint32_t n) {
  CurveParams par = curve_params(q, n);
  int64_t qq = q;
  int64_t num = int64_t(par.m) - qq * qq + qq - 1;
  require(num % (qq * qq * qq) == 0, "ConsistencyFailure",
          "q^3 must divide m - q^2 + q - 1");
  return {qq, int64_t(par.m), int64_t(par.genus), num / (qq * qq * qq)};
}

}  // namespace

LSets build_lsets(uint32_t q, uint32_t n) {
  auto [qq, m, g, K] = p0_params(q, n);
  int64_t q2 = qq * qq, q3 = qq * qq * qq;
  auto elt = [&](int64_t r, int64_t t, int64_t s) { return -t - r * m + m * (qq + 1) * s; };
  auto tmax = [&](int64_t s, int64_t r) { return ((s - r) * qq + s) * K + (s - r); };

  LSets L;
  L.sets.assign(7, {});

  for (int64_t s = 0; s <= qq; ++s)
    for (int64_t r = 0; r <= s; ++r)
      for (int64_t t = 0; t <= tmax(s, r); ++t) L.sets[0].push_back(elt(r, t, s));

  for (int64_t s = qq + 1; s <= q2 - qq; ++s)
    for (int64_t r = 0; r <= qq; ++r)
      for (int64_t t = 0; t <= tmax(s, r); ++t) L.sets[1].push_back(elt(r, t, s));

  for (int64_t s = q2 - qq + 1; s <= q2 - 2; ++s)
    for (int64_t r = 0; r <= qq + s - q2 - 1; ++r)
      for (int64_t t = 0; t <= m - 1; ++t) L.sets[2].push_back(elt(r, t, s));

  for (int64_t s = q2 - qq + 1; s <= q2 - 2; ++s)
    for (int64_t r = std::max<int64_t>(0, qq + s - q2); r <= qq; ++r)
      for (int64_t t = 0; t <= tmax(s, r); ++t) L.sets[3].push_back(elt(r, t, s));

  for (int64_t t = q3; t <= m - 1; ++t) L.sets[4].push_back(elt(0, t, q2 - 1));

  for (int64_t r = 1; r <= qq - 2; ++r)
    for (int64_t t = 0; t <= m - 1; ++t) L.sets[5].push_back(elt(r, t, q2 - 1));

  for (int64_t r = qq - 1; r <= qq; ++r)
    for (int64_t t = 0; t <= tmax(q2 - 1, r); ++t) L.sets[6].push_back(elt(r, t, q2 - 1));

  for (auto& s : L.sets) std::sort(s.begin(), s.end());

  L.formula_sizes = lset_cardinalities(q, n);
  return L;
}

std::vector<int64_t> lset_cardinalities(uint32_t q, uint32_t n) {
  auto [qq, m, g, K] = p0_params(q, n);
  int64_t q2 = qq * qq, q3 = q2 * qq, q4 = q3 * qq, q5 = q4 * qq, q6 = q5 * qq;
  std::vector<int64_t> c(7, 0);
  c[0] = (q4 + 5 * q3 + 8 * q2 + 4 * qq) / 6 * K + (qq + 1) * (qq + 2) * (qq + 3) / 6;
  c[1] = (q6 - q5 - q4 - 3 * q2 - 2 * qq) / 2 * K + (q5 - 2 * q4 + 2 * q3 - q2 - 6 * qq) / 2;
  c[2] = m * (qq - 2) * (qq - 1) / 2;
  c[3] = (3 * q5 + 2 * q4 - 20 * q3 + q2 + 8 * qq + 12) / 6 * K +
         (3 * q4 - q3 - 18 * q2 + 22 * qq - 12) / 6;
  // Interval [q^3, m-1] is empty when m <= q^3; the length formula is clamped.
  c[4] = std::max<int64_t>(0, m - q3);
  c[5] = (qq - 2) * m;
  c[6] = K * (2 * q3 - qq - 2) + 2 * q2 - 2 * qq + 1;
  return c;
}

Semigroup h_p0(uint32_t q, uint32_t n, uint64_t min_bound) {
  auto [qq, m, g, K] = p0_params(q, n);
  LSets L = build_lsets(q, n);

  // Disjointness across the seven sets.
  std::vector<int64_t> all;
  for (const auto& s : L.sets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 1; i < all.size(); ++i)
    require(all[i] != all[i - 1], "ConsistencyFailure",
            "duplicate pole order " + std::to_string(all[i]) + " across sets");

  std::vector<uint64_t> low;
  for (int64_t v : all) {
    require(v >= 0, "ConsistencyFailure", "negative pole order");
    if (v <= 2 * g - 1) low.push_back(uint64_t(v));
  }
  require(!low.empty() && low[0] == 0, "ConsistencyFailure", "0 must be a pole order");
  require(int64_t(low.size()) == g, "ConsistencyFailure",
          "expected g in-range elements, got " + std::to_string(low.size()));
  // Additive closure inside [0, 2g-1].
  std::vector<bool> in(size_t(2 * g), false);
  for (uint64_t v : low) in[v] = true;
  for (uint64_t a : low)
    for (uint64_t b : low) {
      if (a + b > uint64_t(2 * g - 1)) break;
      require(in[a + b], "ConsistencyFailure",
              "sum " + std::to_string(a + b) + " escapes the set");
    }

  Semigroup s = Semigroup::from_elements(low, uint64_t(2 * g), min_bound);
  require(s.genus() == uint64_t(g), "ConsistencyFailure",
          "genus mismatch: " + std::to_string(s.genus()));
  return s;
}

std::vector<uint64_t> p0_oracle(uint32_t q, uint32_t n) {
  auto [qq, m, g, K] = p0_params(q, n);
  int64_t q2 = qq * qq, q3 = q2 * qq;
  std::vector<bool> in(size_t(2 * g), false);
  for (int64_t s = 0; s <= q2 - 1; ++s) {
    for (int64_t r = 0; r <= s; ++r) {
      int64_t tcap = (s * m * (qq + 1) - r * qq * m) / q3;
      for (int64_t t = 0; t <= tcap; ++t) {
        int64_t v = m * (qq + 1) * s - m * r - t;
        if (v >= 0 && v <= 2 * g - 1) in[size_t(v)] = true;
      }
    }
  }
  // Additive closure within [0, 2g-1].
  bool changed = true;
  while (changed) {
    changed = false;
    for (int64_t a = 0; a <= 2 * g - 1; ++a) {
      if (!in[size_t(a)]) continue;
      for (int64_t b = a; a + b <= 2 * g - 1; ++b) {
        if (in[size_t(b)] && !in[size_t(a + b)]) {
          in[size_t(a + b)] = true;
          changed = true;
        }
      }
    }
  }
  std::vector<uint64_t> out;
  for (int64_t v = 0; v <= 2 * g - 1; ++v)
    if (in[size_t(v)]) out.push_back(uint64_t(v));
  return out;
}

}  // namespace ggs
