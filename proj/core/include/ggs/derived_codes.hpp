#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggs/curve.hpp"
#include "ggs/semigroup.hpp"

namespace ggs {

struct Hypothesis {
  std::string name;  // the checked inequality, with numbers substituted
  bool pass = false;
};

struct QuantumParams {
  std::string family;  // "two_point" | "t1" | "improved"
  uint32_t q = 0, n = 0;
  uint64_t length = 0;   // N
  uint64_t k = 0;        // logical dimension
  uint64_t d_lower = 0;  // lower bound on minimum distance
  int64_t delta_q = 0;   // N - k - 2 d_lower + 2
  // Exact defect rate delta_q / N, kept unreduced so printed values diff
  // cleanly against hand computations.
  int64_t delta_q_num = 0;
  uint64_t delta_q_den = 0;
  bool bound_exceeds_singleton = false;  // delta_q < 0; flagged, never clamped
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> provenance;
};

// CSS code from the two one-point codes of degrees a < b:
// [[N, b-a, >= min{N-b, a-2g+2}]]. Requires 2g-2 < a < b < N.
QuantumParams css_two_point(uint64_t a, uint64_t b, const CurveParams& par);

// CSS family member [[N, s, >= l+1-g]] for l in [3g-1, N-g], s in [1, N-2l].
// When the internal pairing bound N-l-s-g+1 dips below the stated l+1-g the
// discrepancy is logged in provenance; the stated bound is always what is
// reported.
QuantumParams css_family_t1(uint64_t l, uint64_t s, const CurveParams& par);

// Improved binary-tower variant: l is a 1-based semigroup index with
// rho_{l+1} of shape (0,1,k), k in [m,2m); the distance bound gains
// {5,3,1} depending on where 8k falls against 9m-11 and 11m-9.
QuantumParams css_improved(uint64_t l, uint64_t s, const CurveParams& par,
                           const Semigroup& h_inf);

// Checks the CSS prerequisite computationally: the evaluation code of degree
// rho_small sits inside the one of degree rho_large.
bool verify_css_nesting(const Curve& curve, uint64_t rho_small, uint64_t rho_large);

struct ConvolutionalParams {
  uint32_t q = 0, n = 0;
  uint64_t length = 0;    // N
  uint64_t k_conv = 0;    // k - s
  uint64_t degree = 0;    // gamma = s
  uint64_t memory = 1;
  uint64_t df_lower = 0;  // free-distance lower bound
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> provenance;
};

// Unit-memory convolutional code (N, k-s, s; 1, df >= dOrd(l)) from the
// degree-rho_l one-point code, k = rho_l+1-g, s <= k/2. For index l >= 3g the
// bound is tightened to max(dOrd(l), l+1-g).
ConvolutionalParams conv_params(uint64_t rho_l, uint64_t s, const CurveParams& par,
                                const Semigroup& h_inf);

}  // namespace ggs
