#include "ggs/order_bound.hpp"

#include <algorithm>

namespace ggs {
namespace {

void check_qtwo_n(uint32_t n) {
  require(n >= 5 && n % 2 == 1 && n < 62, "PreconditionViolated",
          "closed forms require odd n >= 5");
}

int64_t ceil_div(int64_t a, int64_t b) {
  // b > 0 throughout this file.
  return a / b + ((a % b != 0 && a > 0) ? 1 : 0);
}

}  // namespace

int64_t two_pow_m(uint32_t n) {
  check_qtwo_n(n);
  return ((int64_t(1) << n) + 1) / 3;
}

int64_t two_pow_2g(uint32_t n) { return 9 * two_pow_m(n) - 7; }

std::optional<Triple> try_triple_of(int64_t rho, uint32_t n) {
  int64_t m = two_pow_m(n);
  if (rho < 0) return std::nullopt;
  int32_t i = int32_t(rho % 2);
  int64_t u = rho - 3 * m * i;
  if (u < 0) return std::nullopt;
  u /= 2;
  // m = 3 (mod 4), so m^{-1} = 3 (mod 4).
  int32_t j = int32_t((u % 4) * 3 % 4);
  if (u < int64_t(j) * m) return std::nullopt;
  int64_t k = (u - int64_t(j) * m) / 4;
  return Triple{i, j, k};
}

Triple triple_of(int64_t rho, uint32_t n) {
  auto t = try_triple_of(rho, n);
  require(t.has_value(), "NotANongap",
          std::to_string(rho) + " is not an element of the semigroup");
  return *t;
}

int64_t triple_value(const Triple& t, uint32_t n) {
  int64_t m = two_pow_m(n);
  return 3 * m * t.i + 2 * m * t.j + 8 * t.k;
}

int64_t nu_closed(const Triple& t, uint32_t n) {
  int64_t m = two_pow_m(n);
  int64_t j = t.j, k = t.k;
  if (t.i == 1) {
    int64_t v = 2 * (j + 1) * (k + 1);
    if (k >= m) v += 2 * (3 - j) * (k - m + 1);
    return v;
  }
  int64_t v = (j + 1) * (k + 1) + (j == 3 ? (k + 1) : 0);
  if (k >= m) v += (5 - 2 * std::max<int64_t>(0, j - 2)) * (k - m + 1);
  if (k >= 2 * m) v += std::max<int64_t>(0, 2 - j) * (k - 2 * m + 1);
  return v;
}

namespace {

// Per-shape case branches; empty optional marks the two regions the case
// analysis does not settle (the disputed (0,3,k) middle range, and the
// (0,2,k) branch whose reduction leaves the k < m regime).
std::optional<int64_t> lemma_value(const Triple& t, int64_t m) {
  int64_t j = t.j, k = t.k;
  if (t.i == 1 && k < m) {
    if (j == 0) {
      if (k == 0) return 2;
      if (k <= m / 8) return 3;
      if (8 * k <= 2 * m) return 4;
      if (8 * k <= 3 * m) return 5;
      if (2 * k <= m) return 6;
      if (4 * k <= 3 * m) return 8;
      if (k <= m - 2) return 8 * (ceil_div(4 * k - 3 * m, 4) + 1);
      return 2 * m;
    }
    if (j == 1) {
      if (k == 0) return 4;
      if (k <= m / 8) return 5;
      if (8 * k <= 2 * m) return 6;
      if (2 * k <= m) return 8;
      if (k <= (3 * m) / 4 - 2) return 8 * (ceil_div(2 * k - m, 2) + 1);
      if (k <= m - 2) {
        int64_t c = ceil_div(m + 4 * k, 4);
        return 2 * (c + 1) + 6 * (c - m + 1);
      }
      return 4 * m;
    }
    if (j == 2) {
      if (k == 0) return 6;
      if (4 * k <= m) return 8;
      if (k <= m / 2 - 2) return 8 * (ceil_div(4 * k - m, 4) + 1);
      if (k <= (3 * m) / 4 - 2) {
        int64_t c = ceil_div(2 * k + m, 2);
        return 2 * (c + 1) + 6 * (c - m + 1);
      }
      if (k <= m - 2) {
        int64_t c = ceil_div(4 * k + m, 4);
        return 4 * (c + 1) + 4 * (c - m + 1);
      }
      return 6 * m;
    }
    return 8 * (k + 1);  // j == 3
  }
  if (t.i == 0 && k < m) {
    if (j == 0) {
      if (8 * k <= 3 * m) return 2;
      if (2 * k <= m) return 3;
      if (8 * k <= 5 * m) return 4;
      if (4 * k <= 3 * m) return 5;
      if (8 * k <= 7 * m) return 6;
      return 8;
    }
    if (j == 1) {
      if (8 * k <= m) return 2;
      if (4 * k <= m) return 3;
      if (8 * k <= 3 * m) return 4;
      if (2 * k <= m) return 5;
      if (8 * k <= 5 * m) return 6;
      return 8 * (std::max<int64_t>(0, ceil_div(8 * k - 7 * m, 8)) + 1);
    }
    if (j == 2) {
      if (8 * k <= m) return 4;
      if (4 * k <= m) return 5;
      if (8 * k <= 3 * m) return 6;
      if (k <= (7 * m) / 8 - 2)
        return 8 * (std::max<int64_t>(0, ceil_div(8 * k - 5 * m, 8)) + 1);
      if (k <= m - 3) {
        int64_t kp = ceil_div(8 * k + m, 8);
        if (kp <= m - 1) return 2 * (kp + 1);
        return std::nullopt;  // reduction leaves the k < m regime
      }
      return 3 * (k + 1);
    }
    // j == 3
    if (k <= m / 8) return 6;
    if (k <= m - 2) return std::nullopt;  // disputed middle range
    return 5 * (k + 1);
  }
  if (t.i == 0 && j == 0 && k >= m && k < 2 * m) {
    if (k < (11 * m) / 8 - 1)
      return 8 * (std::max<int64_t>(0, ceil_div(8 * k - 9 * m, 8)) + 1);
    int64_t c = ceil_div(8 * k - 3 * m, 8);
    return 2 * (c + 1) + std::max<int64_t>(0, 6 * (c - m + 1));
  }
  return std::nullopt;
}

}  // namespace

OrderBoundResult dord_closed(int64_t rho_next, uint32_t n) {
  int64_t m = two_pow_m(n);
  int64_t g2 = 9 * m - 7;  // 2g
  Triple t = triple_of(rho_next, n);

  if (rho_next >= 2 * g2) return {rho_next - g2 + 1, "pastconductor"};

  if (t.i == 0 && t.j == 1 && t.k >= m && t.k < 2 * m) {
    int64_t k = t.k;
    if (8 * k < 9 * m - 11) return {8 * k - 7 * m + 13, "window"};
    if (8 * k < 11 * m - 9) return {8 * k - 7 * m + 11, "window"};
    return {8 * k - 7 * m + 9, "window"};
  }

  int64_t nl = nu_closed(t, n);

  // Symmetric shift: when the previous element rho_l exceeds 2g and
  // e = rho_{l+1} - 2g + 1 is itself an element, d_ORD(l) = nu_l exactly.
  // For rho_next >= 2g + 2 the previous element is rho_next - 1 > 2g.
  if (rho_next >= g2 + 2 && try_triple_of(rho_next - g2 + 1, n).has_value())
    return {nl, "symmetricshift"};

  std::optional<int64_t> lv = lemma_value(t, m);
  if (!lv.has_value()) return {std::nullopt, "unresolved"};
  // d_ORD(l) <= nu_l by definition, so the branch value is capped.
  return {std::min(*lv, nl), "caselemma"};
}

int64_t dord_flagged_printed(uint32_t n) {
  int64_t m = two_pow_m(n);
  return 8 * (std::max<int64_t>(0, ceil_div(3 * m, 8)) + 1);
}

int64_t dord_telescopic_head(int64_t rho_next, uint32_t q, uint32_t n) {
  require(n >= 3 && n % 2 == 1 && q >= 2, "PreconditionViolated",
          "head formula requires a prime power q and odd n >= 3");
  int64_t qn1 = 1;
  for (uint32_t i = 0; i < n; ++i) qn1 *= q;
  qn1 += 1;
  int64_t cap = (int64_t(q) - 1) * qn1;
  require(rho_next >= 1 && rho_next <= cap, "OutOfRange",
          "head formula requires 1 <= rho_{l+1} <= (q-1)(q^n+1)");
  int64_t j = ceil_div(rho_next, qn1);
  return j + 1;
}

int64_t dord_tail(uint64_t l, uint32_t q, uint32_t n, const Semigroup& h_inf) {
  int64_t qq = q;
  int64_t qn = 1;
  for (uint32_t i = 0; i < n; ++i) qn *= qq;
  int64_t g = int64_t(h_inf.genus());
  int64_t low = (qq - 1) * (3 * qn * qq + qn - 3 * qq * qq - 2) / 2 - 2;
  int64_t high = 3 * g - 2;
  require(int64_t(l) > low && int64_t(l) <= high, "OutOfRange",
          "tail formula requires " + std::to_string(low) + " < l <= " +
              std::to_string(high));
  uint64_t target = l + 1 - uint64_t(g);
  uint64_t v = target;
  while (!h_inf.contains(v)) ++v;
  return int64_t(v);
}

bool gap_character(int64_t rho_next, const Semigroup& h_inf) {
  int64_t g2 = 2 * int64_t(h_inf.genus());
  require(rho_next >= g2, "PreconditionViolated",
          "gap character requires rho_{l+1} >= 2g");
  uint64_t e = uint64_t(rho_next - g2 + 1);
  return !h_inf.contains(e);
}

bool improvement_shape(int64_t rho_next, uint32_t n) {
  auto t = try_triple_of(rho_next, n);
  if (!t) return false;
  int64_t m = two_pow_m(n);
  return t->i == 0 && t->j == 1 && t->k >= m && t->k < 2 * m;
}

int64_t improvement_bonus(int64_t rho_next, uint32_t n) {
  require(improvement_shape(rho_next, n), "PreconditionViolated",
          "bonus is defined on the (0,1,k), m <= k < 2m window only");
  int64_t m = two_pow_m(n);
  int64_t k = try_triple_of(rho_next, n)->k;
  if (8 * k < 9 * m - 11) return 5;
  if (8 * k < 11 * m - 9) return 3;
  return 1;
}

}  // namespace ggs
