#include "ggs/agcode.hpp"

#include <algorithm>
#include <random>

#include "ggs/error.hpp"
#include "ggs/order_bound.hpp"

namespace ggs {

std::vector<Monomial> rr_basis_infinity(uint64_t l, const CurveParams& par) {
  std::vector<std::pair<uint64_t, Monomial>> out;
  for (uint64_t b = 0; b <= par.q; ++b) {
    for (uint64_t c = 0; c < par.m; ++c) {
      uint64_t base = b * par.pole_y + c * par.pole_z;
      if (base > l) continue;
      uint64_t amax = (l - base) / par.pole_x;
      for (uint64_t a = 0; a <= amax; ++a) {
        out.push_back({base + a * par.pole_x, Monomial{a, b, c}});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& u, const auto& v) { return u.first < v.first; });
  for (size_t i = 1; i < out.size(); ++i) {
    require(out[i - 1].first != out[i].first, "ConsistencyFailure",
            "duplicate pole order in Riemann-Roch basis");
  }
  std::vector<Monomial> basis;
  basis.reserve(out.size());
  for (const auto& pr : out) basis.push_back(pr.second);
  return basis;
}

namespace {

// Largest element of H(P_inf) that is <= l. Every multiple of q^3 is an
// element, so the search never walks past q^3 steps.
uint64_t canonicalize_down(uint64_t l, const CurveParams& par) {
  Semigroup h = Semigroup::from_generators({par.pole_z, par.pole_y, par.pole_x}, l + 1);
  uint64_t v = l;
  while (!h.contains(v)) {
    require(v > 0, "ConsistencyFailure", "no element below requested degree");
    --v;
  }
  return v;
}

GfMatrix evaluation_matrix(const Curve& curve, const std::vector<Monomial>& basis) {
  const auto& pts = curve.points();
  GfMatrix gen(basis.size(), pts.size());
  for (size_t r = 0; r < basis.size(); ++r) {
    for (size_t c = 0; c < pts.size(); ++c) {
      gen.at(r, c) = curve.eval(basis[r], pts[c]);
    }
  }
  return gen;
}

}  // namespace

EvalCode build_code(const Curve& curve, uint64_t l) {
  const CurveParams& par = curve.params();
  EvalCode code;
  code.l_requested = l;
  code.l_effective = canonicalize_down(l, par);
  code.basis = rr_basis_infinity(code.l_effective, par);
  code.gen = evaluation_matrix(curve, code.basis);
  GfMatrix work = code.gen;
  code.rank = rref(work, curve.field());
  require(code.rank == code.basis.size(), "RankDeficient",
          "evaluation matrix rank below basis size");
  return code;
}

std::vector<std::pair<uint64_t, size_t>> rank_profile(const Curve& curve, uint64_t lmax) {
  const CurveParams& par = curve.params();
  std::vector<Monomial> basis = rr_basis_infinity(lmax, par);
  const auto& pts = curve.points();
  RankTracker tracker(pts.size(), curve.field());
  std::vector<std::pair<uint64_t, size_t>> profile;
  profile.reserve(basis.size());
  for (const Monomial& mono : basis) {
    std::vector<uint32_t> row(pts.size());
    for (size_t c = 0; c < pts.size(); ++c) row[c] = curve.eval(mono, pts[c]);
    tracker.add_row(std::move(row));
    profile.push_back({pole_order_infinity(mono, par), tracker.rank()});
  }
  return profile;
}

bool contains_code(const EvalCode& outer, const EvalCode& inner, const Field& F) {
  GfMatrix R = outer.gen;
  std::vector<size_t> pivots;
  size_t rank = rref(R, F, &pivots);
  for (size_t r = 0; r < inner.gen.rows; ++r) {
    std::vector<uint32_t> v(inner.gen.row(r), inner.gen.row(r) + inner.gen.cols);
    if (!in_row_space(R, rank, pivots, F, std::move(v))) return false;
  }
  return true;
}

DualParams dual_params(uint64_t l_index, const CurveParams& par, const Semigroup& h_inf) {
  require(l_index >= 1, "IndexBeyondBound", "dual code index is 1-based");
  require(l_index < par.n_affine, "PreconditionViolated",
          "dual code index must be below the code length");
  DualParams dp;
  dp.l_index = l_index;
  dp.rho = h_inf.value_at(l_index);
  dp.length = par.n_affine;
  dp.k_dual = par.n_affine - l_index;
  dp.closed_form = false;
  if (par.q == 2 && par.n >= 5) {
    // d_ord(l) = min(nu(l), d_ord(l+1)). Walk forward taking closed nu values
    // where the dispatch resolves; a resolved dispatch value at s already
    // minimizes over the whole tail, so the walk can stop there. Otherwise
    // stop once nu(t) >= t+1-g pushes the tail above the running minimum.
    uint64_t g = par.genus;
    bool all_closed = true;
    uint64_t best = UINT64_MAX;
    for (uint64_t s = l_index;; ++s) {
      uint64_t rho_next = h_inf.value_at(s + 1);
      OrderBoundResult r = dord_closed(static_cast<int64_t>(rho_next), par.n);
      if (r.value.has_value()) {
        best = std::min(best, static_cast<uint64_t>(*r.value));
        break;
      }
      best = std::min(best, h_inf.nu(s));
      all_closed = false;
      if (s + 1 >= g && s + 1 - g >= best) break;
    }
    dp.d_ord = best;
    dp.closed_form = all_closed;
  } else {
    dp.d_ord = h_inf.dord(l_index);
  }
  dp.delta = static_cast<int64_t>(l_index) + 1 - static_cast<int64_t>(dp.d_ord);
  return dp;
}

DualParams dual_params_oracle(uint64_t l_index, const CurveParams& par,
                              const Semigroup& sg) {
  require(l_index >= 1, "IndexBeyondBound", "dual code index is 1-based");
  require(l_index < par.n_affine, "PreconditionViolated",
          "dual code index must be below the code length");
  DualParams dp;
  dp.l_index = l_index;
  dp.rho = sg.value_at(l_index);
  dp.length = par.n_affine;
  dp.k_dual = par.n_affine - l_index;
  dp.closed_form = false;
  dp.d_ord = sg.dord(l_index);
  dp.delta = static_cast<int64_t>(l_index) + 1 - static_cast<int64_t>(dp.d_ord);
  return dp;
}

std::vector<CompareRow> improvement_table(const CurveParams& par, const Semigroup& h_inf,
                                          const Semigroup& h_p0, uint64_t lmin,
                                          uint64_t lmax) {
  require(lmin >= 1, "IndexBeyondBound", "table indices are 1-based");
  std::vector<CompareRow> rows;
  for (uint64_t l0 = lmin; l0 <= lmax; ++l0) {
    uint64_t d0 = h_p0.dord(l0);
    int64_t delta0 = static_cast<int64_t>(l0) + 1 - static_cast<int64_t>(d0);
    for (uint64_t li = l0; li <= l0 + 1; ++li) {
      DualParams dp = dual_params(li, par, h_inf);
      if (d0 >= dp.d_ord && delta0 < dp.delta) {
        rows.push_back({l0, li, d0, dp.d_ord, delta0, dp.delta});
      }
    }
  }
  return rows;
}

uint64_t min_dual_weight_sampled(const EvalCode& code, const Field& F, size_t samples,
                                 uint64_t seed) {
  GfMatrix R = code.gen;
  std::vector<size_t> pivots;
  size_t rank = rref(R, F, &pivots);
  size_t n = code.gen.cols;
  std::vector<char> is_pivot(n, 0);
  for (size_t p : pivots) is_pivot[p] = 1;
  std::vector<size_t> free_cols;
  free_cols.reserve(n - rank);
  for (size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  require(!free_cols.empty(), "PreconditionViolated", "dual code is trivial");

  std::mt19937_64 rng(seed);
  uint64_t best = UINT64_MAX;
  std::vector<uint32_t> w(n);
  for (size_t s = 0; s < samples; ++s) {
    bool nonzero = false;
    for (size_t attempts = 0; !nonzero && attempts < 64; ++attempts) {
      for (size_t f : free_cols) {
        w[f] = static_cast<uint32_t>(rng() % F.size());
        if (w[f] != 0) nonzero = true;
      }
    }
    require(nonzero, "ConsistencyFailure", "sampler kept drawing the zero word");
    // Row i of the RREF reads w[pivots[i]] + sum_f R[i][f] w[f] = 0.
    for (size_t i = 0; i < rank; ++i) {
      uint32_t acc = 0;
      const uint32_t* row = R.row(i);
      for (size_t f : free_cols) {
        if (w[f] != 0 && row[f] != 0) acc = F.add(acc, F.mul(row[f], w[f]));
      }
      w[pivots[i]] = F.neg(acc);
    }
    uint64_t weight = 0;
    for (size_t c = 0; c < n; ++c) {
      if (w[c] != 0) ++weight;
    }
    best = std::min(best, weight);
  }
  return best;
}

}  // namespace ggs
