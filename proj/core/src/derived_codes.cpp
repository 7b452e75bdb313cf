#include "ggs/derived_codes.hpp"

#include <algorithm>

#include "ggs/agcode.hpp"
#include "ggs/error.hpp"
#include "ggs/order_bound.hpp"

namespace ggs {

namespace {

std::string fmt(const char* pattern, std::initializer_list<int64_t> vals) {
  std::string out;
  auto it = vals.begin();
  for (const char* p = pattern; *p; ++p) {
    if (*p == '%' && it != vals.end()) {
      out += std::to_string(*it++);
    } else {
      out += *p;
    }
  }
  return out;
}

// Records the hypothesis; throws HypothesisViolated naming it when it fails.
void check(std::vector<Hypothesis>& hs, bool ok, std::string name) {
  hs.push_back({name, ok});
  require(ok, "HypothesisViolated", name);
}

void finish_quantum(QuantumParams& qp) {
  int64_t N = static_cast<int64_t>(qp.length);
  qp.delta_q = N - static_cast<int64_t>(qp.k) - 2 * static_cast<int64_t>(qp.d_lower) + 2;
  qp.delta_q_num = qp.delta_q;
  qp.delta_q_den = qp.length;
  qp.bound_exceeds_singleton = qp.delta_q < 0;
  if (qp.bound_exceeds_singleton) {
    qp.provenance.push_back(
        "BoundExceedsSingleton: the distance bound pushes the Singleton "
        "defect negative; reported as-is");
  }
}

}  // namespace

QuantumParams css_two_point(uint64_t a, uint64_t b, const CurveParams& par) {
  QuantumParams qp;
  qp.family = "two_point";
  qp.q = par.q;
  qp.n = par.n;
  qp.length = par.n_affine;
  uint64_t two_g = 2 * par.genus;
  check(qp.hypotheses, a > two_g - 2,
        fmt("a > 2g-2: % > %", {(int64_t)a, (int64_t)(two_g - 2)}));
  check(qp.hypotheses, a < b, fmt("a < b: % < %", {(int64_t)a, (int64_t)b}));
  check(qp.hypotheses, b < par.n_affine,
        fmt("b < N: % < %", {(int64_t)b, (int64_t)par.n_affine}));
  qp.k = b - a;
  qp.d_lower = std::min(par.n_affine - b, a - two_g + 2);
  qp.provenance.push_back(fmt(
      "two nested one-point codes of degrees a=%, b=%; D >= min{N-b, a-2g+2} "
      "= min{%, %}",
      {(int64_t)a, (int64_t)b, (int64_t)(par.n_affine - b), (int64_t)(a - two_g + 2)}));
  finish_quantum(qp);
  return qp;
}

QuantumParams css_family_t1(uint64_t l, uint64_t s, const CurveParams& par) {
  QuantumParams qp;
  qp.family = "t1";
  qp.q = par.q;
  qp.n = par.n;
  qp.length = par.n_affine;
  uint64_t g = par.genus;
  uint64_t N = par.n_affine;
  check(qp.hypotheses, l >= 3 * g - 1, fmt("l >= 3g-1: % >= %", {(int64_t)l, (int64_t)(3 * g - 1)}));
  check(qp.hypotheses, l <= N - g, fmt("l <= N-g: % <= %", {(int64_t)l, (int64_t)(N - g)}));
  check(qp.hypotheses, s >= 1, fmt("s >= 1: % >= 1", {(int64_t)s}));
  int64_t s_cap = static_cast<int64_t>(N) - 2 * static_cast<int64_t>(l);
  check(qp.hypotheses, static_cast<int64_t>(s) <= s_cap,
        fmt("s <= N-2l: % <= %", {(int64_t)s, s_cap}));
  qp.k = s;
  qp.d_lower = l + 1 - g;
  int64_t pairing = static_cast<int64_t>(N) - static_cast<int64_t>(l) -
                    static_cast<int64_t>(s) - static_cast<int64_t>(g) + 1;
  qp.provenance.push_back(
      fmt("nested family member at l=%, s=%; stated bound D >= l+1-g = %",
          {(int64_t)l, (int64_t)s, (int64_t)qp.d_lower}));
  if (pairing < static_cast<int64_t>(qp.d_lower)) {
    // The construction's internal pairing distance N-l-s-g+1 is smaller here;
    // both values are logged and the stated bound is reported unchanged.
    qp.provenance.push_back(fmt(
        "internal pairing bound N-l-s-g+1 = % is below the stated bound %; "
        "min of the two would be %",
        {pairing, (int64_t)qp.d_lower, std::min<int64_t>(pairing, (int64_t)qp.d_lower)}));
  }
  finish_quantum(qp);
  return qp;
}

QuantumParams css_improved(uint64_t l, uint64_t s, const CurveParams& par,
                           const Semigroup& h_inf) {
  QuantumParams qp;
  qp.family = "improved";
  qp.q = par.q;
  qp.n = par.n;
  qp.length = par.n_affine;
  uint64_t g = par.genus;
  uint64_t N = par.n_affine;
  check(qp.hypotheses, par.q == 2, "q = 2");
  check(qp.hypotheses, l >= g, fmt("l >= g: % >= %", {(int64_t)l, (int64_t)g}));
  check(qp.hypotheses, l <= 3 * g - 1,
        fmt("l <= 3g-1: % <= %", {(int64_t)l, (int64_t)(3 * g - 1)}));
  uint64_t rho_next = h_inf.value_at(l + 1);
  int64_t m = static_cast<int64_t>(par.m);
  std::optional<Triple> t = try_triple_of(static_cast<int64_t>(rho_next), par.n);
  require(t.has_value(), "TripleMismatch", "rho_{l+1} is not an element");
  bool shape = (t->i == 0 && t->j == 1 && t->k >= m && t->k < 2 * m);
  require(shape, "TripleMismatch",
          fmt("rho_{l+1} = % decomposes as (%,%,%), need (0,1,k) with m <= k < 2m",
              {(int64_t)rho_next, (int64_t)t->i, (int64_t)t->j, t->k}));
  qp.hypotheses.push_back(
      {fmt("rho_{l+1} = % has shape (0,1,k), k = % in [m, 2m)", {(int64_t)rho_next, t->k}),
       true});
  check(qp.hypotheses, s >= 1, fmt("s >= 1: % >= 1", {(int64_t)s}));
  int64_t s_cap = static_cast<int64_t>(N) - 2 * static_cast<int64_t>(l) - 5;
  check(qp.hypotheses, static_cast<int64_t>(s) <= s_cap,
        fmt("s <= N-2l-5: % <= %", {(int64_t)s, s_cap}));
  int64_t bonus = improvement_bonus(static_cast<int64_t>(rho_next), par.n);
  qp.k = s;
  qp.d_lower = l + 1 - g + static_cast<uint64_t>(bonus);
  qp.provenance.push_back(fmt(
      "improved member at l=%, s=%; 8k = % against 9m-11 = % and 11m-9 = % "
      "gives bonus %; D >= l+1-g+bonus = %",
      {(int64_t)l, (int64_t)s, 8 * t->k, 9 * m - 11, 11 * m - 9, bonus,
       (int64_t)qp.d_lower}));
  finish_quantum(qp);
  return qp;
}

bool verify_css_nesting(const Curve& curve, uint64_t rho_small, uint64_t rho_large) {
  require(rho_small <= rho_large, "PreconditionViolated",
          "nesting check expects rho_small <= rho_large");
  EvalCode inner = build_code(curve, rho_small);
  EvalCode outer = build_code(curve, rho_large);
  return contains_code(outer, inner, curve.field());
}

ConvolutionalParams conv_params(uint64_t rho_l, uint64_t s, const CurveParams& par,
                                const Semigroup& h_inf) {
  ConvolutionalParams cp;
  cp.q = par.q;
  cp.n = par.n;
  cp.length = par.n_affine;
  uint64_t g = par.genus;
  std::vector<Hypothesis>& hs = cp.hypotheses;
  check(hs, rho_l > 2 * g - 2,
        fmt("rho_l > 2g-2: % > %", {(int64_t)rho_l, (int64_t)(2 * g - 2)}));
  check(hs, rho_l < par.n_affine,
        fmt("rho_l < N: % < %", {(int64_t)rho_l, (int64_t)par.n_affine}));
  require(h_inf.contains(rho_l), "NotAnElement", "rho_l is a gap");
  uint64_t k = rho_l + 1 - g;
  check(hs, 2 * s <= k, fmt("s <= k/2: 2*% <= %", {(int64_t)s, (int64_t)k}));
  cp.k_conv = k - s;
  cp.degree = s;
  cp.memory = 1;
  uint64_t l = h_inf.index_of(rho_l);
  DualParams dp = dual_params(l, par, h_inf);
  cp.df_lower = dp.d_ord;
  cp.provenance.push_back(fmt("df >= dOrd at index l=% (rho=%): %",
                              {(int64_t)l, (int64_t)rho_l, (int64_t)dp.d_ord}));
  if (l >= 3 * g) {
    uint64_t rr = l + 1 - g;
    if (rr > cp.df_lower) {
      cp.df_lower = rr;
      cp.provenance.push_back(
          fmt("index l = % >= 3g; bound tightened to l+1-g = %",
              {(int64_t)l, (int64_t)rr}));
    }
  }
  return cp;
}

}  // namespace ggs
