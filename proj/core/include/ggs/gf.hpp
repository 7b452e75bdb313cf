#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ggs/error.hpp"

namespace ggs {

// GF(p^k) with p prime, p^k <= 2^20. Elements are codes in [0, p^k):
// code(sum c_i T^i) = sum c_i p^i, so 0 is zero and 1 is one.
// Multiplication runs on discrete log tables over a verified generator.
class Field {
public:
  // modulus: coefficients c_0..c_{k-1} of a monic degree-k polynomial
  // T^k + c_{k-1} T^{k-1} + ... + c_0, each in [0, p). Empty selects the
  // default modulus: the lexicographically smallest irreducible one, ordered
  // by code value (deterministic for a given p, k).
  static std::shared_ptr<const Field> make(uint32_t p, uint32_t k,
                                           std::vector<uint32_t> modulus = {});

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t size() const { return size_; }           // p^k
  uint32_t order() const { return size_ - 1; }      // multiplicative order
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  uint32_t generator() const { return exp_[1]; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t e = uint32_t(log_[a]) + uint32_t(log_[b]);
    if (e >= order()) e -= order();
    return exp_[e];
  }
  uint32_t inv(uint32_t a) const {
    require(a != 0, "InverseOfZero", "0 has no multiplicative inverse");
    return exp_[(order() - log_[a]) % order()];
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  // a^e for e >= 0 (0^0 = 1).
  uint32_t pow(uint32_t a, uint64_t e) const;
  // Discrete log base the canonical generator; a must be nonzero.
  uint32_t dlog(uint32_t a) const {
    require(a != 0, "InverseOfZero", "0 has no discrete log");
    return log_[a];
  }
  uint32_t exp_of(uint64_t e) const { return exp_[e % order()]; }

  // All x with x^m = c, sorted ascending; empty when c has no m-th root.
  std::vector<uint32_t> mth_roots(uint32_t c, uint64_t m) const;

  // Digits of a code (little-endian base p).
  std::vector<uint32_t> digits(uint32_t code) const;

private:
  Field() = default;

  uint32_t p_ = 0, k_ = 0, size_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_;        // exp_[i] = g^i for i in [0, order)
  std::vector<int32_t> log_;         // log_[code]; log_[0] = -1
  std::vector<uint32_t> add_table_;  // size*size when size <= 4096, else empty
};

using FieldPtr = std::shared_ptr<const Field>;

// Checked element wrapper for callers that mix fields; hot paths use raw codes.
struct Fe {
  const Field* field;
  uint32_t code;
};

// op is one of '+', '-', '*', '/'. Throws FieldMismatch when the operands
// belong to different fields.
Fe arith(const Fe& a, const Fe& b, char op);

// Ring homomorphism GF(p^a) -> GF(p^b) with a | b, fixing GF(p), verified
// exhaustively (multiplicativity by construction, additivity by scan).
class Embedding {
public:
  Embedding(FieldPtr from, FieldPtr into);

  uint32_t operator()(uint32_t code) const { return map_[code]; }
  const Field& from() const { return *from_; }
  const Field& into() const { return *into_; }
  // True when big-field code y lies in the image subfield.
  bool in_image(uint32_t y) const;

private:
  FieldPtr from_, into_;
  std::vector<uint32_t> map_;
};

}  // namespace ggs
