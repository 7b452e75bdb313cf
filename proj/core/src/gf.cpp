#include "ggs/gf.hpp"

#include <algorithm>
#include <numeric>

namespace ggs {
namespace {

constexpr uint32_t kMaxFieldSize = 1u << 20;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense little-endian coefficient vectors over GF(p); trailing zeros allowed.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return int(i);
  return -1;
}

// Reduce a modulo the monic polynomial f (full coefficients, f.back() == 1).
void mod_monic(Poly& a, const Poly& f, uint32_t p) {
  int k = int(f.size()) - 1;
  for (int i = degree(a); i >= k; --i) {
    uint64_t c = a[size_t(i)];
    if (c == 0) continue;
    a[size_t(i)] = 0;
    for (int j = 0; j < k; ++j) {
      uint64_t t = a[size_t(i - k + j)] + (p - f[size_t(j)]) * c % p;
      a[size_t(i - k + j)] = uint32_t(t % p);
    }
  }
  a.resize(size_t(k));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  }
  mod_monic(r, f, p);
  return r;
}

Poly powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
  Poly r{1};
  r.resize(f.size() - 1, 0);
  base.resize(f.size() - 1, 0);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b not necessarily monic: scale by inverse of lead coeff.
    uint32_t lead = b.back();
    uint32_t lead_inv = 1;
    {
      // Fermat inverse in GF(p).
      uint64_t base = lead, acc = 1, e = p - 2;
      while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
      }
      lead_inv = uint32_t(acc);
    }
    Poly bm = b;  // monic rescale: same roots, valid divisor for mod_monic
    for (auto& c : bm) c = uint32_t(uint64_t(c) * lead_inv % p);
    Poly r = a;
    mod_monic(r, bm, p);
    trim(r);
    a = std::move(b);
    b = std::move(r);
    trim(a);
    trim(b);
  }
  return a;
}

// Rabin's test: f monic of degree k is irreducible over GF(p) iff
// T^{p^k} == T (mod f) and gcd(T^{p^{k/r}} - T, f) = 1 for each prime r | k.
bool is_irreducible(const Poly& f, uint32_t p) {
  int k = int(f.size()) - 1;
  if (k < 1) return false;
  // x := T^{p^i} mod f, advanced one Frobenius step at a time. frob_steps[0]
  // is T already reduced mod f (a constant when k = 1).
  Poly x;
  if (k == 1) {
    x = {(p - f[0]) % p};
  } else {
    x = Poly{0, 1};
    x.resize(size_t(k), 0);
  }
  std::vector<Poly> frob_steps(size_t(k) + 1);
  frob_steps[0] = x;
  for (int i = 1; i <= k; ++i) {
    x = powmod(x, p, f, p);
    frob_steps[size_t(i)] = x;
  }
  auto minus_t = [&](Poly a) {
    a.resize(size_t(k), 0);
    for (int i = 0; i < k; ++i) {
      uint32_t ti = i < int(frob_steps[0].size()) ? frob_steps[0][size_t(i)] : 0;
      a[size_t(i)] = (a[size_t(i)] + p - ti) % p;
    }
    trim(a);
    return a;
  };
  if (!minus_t(frob_steps[size_t(k)]).empty()) return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0) continue;
    bool r_prime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) r_prime = false;
    if (!r_prime) continue;
    Poly g = minus_t(frob_steps[size_t(k / r)]);
    Poly gc = poly_gcd(g, f, p);
    if (degree(gc) != 0) return false;
  }
  return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Inverse of a modulo m (gcd(a, m) = 1 assumed), via extended Euclid.
uint64_t modinv(uint64_t a, uint64_t m) {
  int64_t t = 0, nt = 1;
  int64_t r = int64_t(m), nr = int64_t(a % m);
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += int64_t(m);
  return uint64_t(t);
}

}  // namespace

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t k,
                                         std::vector<uint32_t> modulus) {
  require(is_prime(p), "NonPrimeP", "characteristic must be prime, got " + std::to_string(p));
  require(k >= 1, "UnsupportedFieldSize", "extension degree must be >= 1");
  uint64_t size = 1;
  for (uint32_t i = 0; i < k; ++i) {
    size *= p;
    require(size <= kMaxFieldSize, "UnsupportedFieldSize",
            "p^k exceeds the 2^20 table budget");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->size_ = uint32_t(size);

  if (modulus.empty()) {
    // Default modulus: smallest code value v whose digit vector c_0..c_{k-1}
    // makes T^k + sum c_i T^i irreducible. Deterministic per (p, k).
    for (uint64_t v = 0; v < size; ++v) {
      Poly cand(k + 1, 0);
      uint64_t rest = v;
      for (uint32_t i = 0; i < k; ++i) {
        cand[i] = uint32_t(rest % p);
        rest /= p;
      }
      cand[k] = 1;
      if (is_irreducible(cand, p)) {
        modulus.assign(cand.begin(), cand.end() - 1);
        break;
      }
    }
    require(!modulus.empty(), "ReducibleModulus", "no irreducible modulus found");
  } else {
    require(modulus.size() == k, "ReducibleModulus",
            "modulus must list exactly k coefficients c_0..c_{k-1}");
    for (uint32_t c : modulus)
      require(c < p, "ReducibleModulus", "modulus coefficient out of range");
    Poly full(modulus.begin(), modulus.end());
    full.push_back(1);
    require(is_irreducible(full, p), "ReducibleModulus",
            "modulus polynomial is reducible over GF(p)");
  }
  f->modulus_ = modulus;

  Poly fm(modulus.begin(), modulus.end());
  fm.push_back(1);

  auto decode = [&](uint32_t code) {
    Poly a(k, 0);
    for (uint32_t i = 0; i < k; ++i) {
      a[i] = code % p;
      code /= p;
    }
    return a;
  };
  auto encode = [&](const Poly& a) {
    uint64_t code = 0, w = 1;
    for (uint32_t i = 0; i < k; ++i) {
      code += uint64_t(i < a.size() ? a[i] : 0) * w;
      w *= p;
    }
    return uint32_t(code);
  };
  auto raw_mul = [&](uint32_t a, uint32_t b) {
    return encode(mulmod(decode(a), decode(b), fm, p));
  };

  // Generator: first element (in code order) of multiplicative order size-1.
  uint32_t order = f->size_ - 1;
  uint32_t gen = 0;
  for (uint32_t cand = (order == 1) ? 1 : 2; cand < f->size_; ++cand) {
    uint32_t x = cand, steps = 1;
    while (x != 1 && steps <= order) {
      x = raw_mul(x, cand);
      ++steps;
    }
    if (x == 1 && steps == order) {
      gen = cand;
      break;
    }
  }
  require(gen != 0, "NoGeneratorFound", "no multiplicative generator found");

  f->exp_.assign(order, 0);
  f->log_.assign(f->size_, -1);
  uint32_t x = 1;
  for (uint32_t i = 0; i < order; ++i) {
    if (i > 0) {
      require(x != 1, "NoGeneratorFound", "generator order check failed");
    }
    f->exp_[i] = x;
    f->log_[x] = int32_t(i);
    x = raw_mul(x, gen);
  }
  require(x == 1, "NoGeneratorFound", "generator does not close the cycle");

  if (p != 2 && size <= 4096) {
    f->add_table_.assign(size * size, 0);
    for (uint32_t a = 0; a < size; ++a) {
      Poly pa = decode(a);
      for (uint32_t b = 0; b < size; ++b) {
        Poly pb = decode(b);
        Poly s(k, 0);
        for (uint32_t i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
        f->add_table_[uint64_t(a) * size + b] = encode(s);
      }
    }
  }
  return f;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[uint64_t(a) * size_ + b];
  uint32_t res = 0, w = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    res += ((a % p_) + (b % p_)) % p_ * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return res;
}

uint32_t Field::neg(uint32_t a) const {
  if (p_ == 2) return a;
  uint32_t res = 0, w = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t d = a % p_;
    res += (d == 0 ? 0 : p_ - d) * w;
    a /= p_;
    w *= p_;
  }
  return res;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t le = (uint64_t(log_[a]) * (e % order())) % order();
  return exp_[le];
}

std::vector<uint32_t> Field::mth_roots(uint32_t c, uint64_t m) const {
  require(m >= 1, "UnsupportedFieldSize", "root degree must be >= 1");
  if (c == 0) return {0};
  uint64_t M = order();
  uint64_t mr = m % M;
  if (mr == 0) {
    // x^m = 1 for every nonzero x.
    if (c != 1) return {};
    std::vector<uint32_t> all(exp_.begin(), exp_.end());
    std::sort(all.begin(), all.end());
    return all;
  }
  uint64_t d = gcd_u64(mr, M);
  uint64_t L = log_[c];
  if (L % d != 0) return {};
  uint64_t x0 = (L / d) % (M / d) * modinv(mr / d, M / d) % (M / d);
  std::vector<uint32_t> roots;
  roots.reserve(d);
  for (uint64_t t = 0; t < d; ++t) roots.push_back(exp_[(x0 + t * (M / d)) % M]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<uint32_t> Field::digits(uint32_t code) const {
  std::vector<uint32_t> d(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

Fe arith(const Fe& a, const Fe& b, char op) {
  require(a.field == b.field, "FieldMismatch",
          "operands belong to different fields");
  const Field& F = *a.field;
  switch (op) {
    case '+': return {a.field, F.add(a.code, b.code)};
    case '-': return {a.field, F.sub(a.code, b.code)};
    case '*': return {a.field, F.mul(a.code, b.code)};
    case '/': return {a.field, F.div(a.code, b.code)};
    default: fail("FieldMismatch", "unknown operation");
  }
}

Embedding::Embedding(FieldPtr from, FieldPtr into)
    : from_(std::move(from)), into_(std::move(into)) {
  const Field& S = *from_;
  const Field& T = *into_;
  require(S.p() == T.p(), "IncompatibleDegrees", "characteristics differ");
  require(T.k() % S.k() == 0, "IncompatibleDegrees",
          "target degree is not a multiple of the source degree");

  uint64_t Ms = S.order(), Mt = T.order();
  uint64_t stride = Mt / Ms;  // exact: p^a - 1 divides p^b - 1 when a | b
  map_.assign(S.size(), 0);

  // Candidate maps send the source generator g to G^(j*stride), each of
  // multiplicative order Ms. Multiplicativity holds by construction; the
  // check f(x+1) = f(x)+1 for all x upgrades it to a field homomorphism:
  // f(x+y) = f(x) f(1 + y/x) = f(x)(1 + f(y)/f(x)) = f(x) + f(y).
  bool found = false;
  for (uint64_t j = 1; j < Ms || (Ms == 1 && j == 1); ++j) {
    if (gcd_u64(j, Ms) != 1) continue;
    map_[0] = 0;
    for (uint64_t i = 0; i < Ms; ++i)
      map_[S.exp_of(i)] = T.exp_of(i * j % Ms * stride);
    bool ok = true;
    for (uint32_t xc = 0; xc < S.size() && ok; ++xc)
      ok = map_[S.add(xc, 1)] == T.add(map_[xc], 1);
    if (ok) {
      found = true;
      break;
    }
    if (Ms == 1) break;
  }
  require(found, "HomomorphismCheckFailed",
          "no additive embedding among multiplicative candidates");
}

bool Embedding::in_image(uint32_t y) const {
  if (y == 0) return true;
  uint64_t stride = uint64_t(into_->order()) / from_->order();
  return uint64_t(into_->dlog(y)) % stride == 0;
}

}  // namespace ggs
