#include <algorithm>
#include <set>

#include "doctest.h"
#include "ggs/error.hpp"
#include "ggs/gf.hpp"

using namespace ggs;

TEST_CASE("prime field GF(7) arithmetic") {
  auto F = Field::make(7, 1);
  CHECK(F->size() == 7);
  CHECK(F->order() == 6);
  for (uint32_t a = 0; a < 7; ++a) {
    for (uint32_t b = 0; b < 7; ++b) {
      CHECK(F->add(a, b) == (a + b) % 7);
      CHECK(F->mul(a, b) == (a * b) % 7);
      CHECK(F->sub(F->add(a, b), b) == a);
    }
    if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
  }
  CHECK_THROWS_WITH_AS(F->inv(0), doctest::Contains("InverseOfZero"), error);
}

TEST_CASE("default moduli are the lexicographically first irreducibles") {
  CHECK(Field::make(2, 2)->modulus() == std::vector<uint32_t>{1, 1});
  CHECK(Field::make(2, 4)->modulus() == std::vector<uint32_t>{1, 1, 0, 0});
  CHECK(Field::make(2, 10)->modulus() ==
        std::vector<uint32_t>{1, 0, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(Field::make(2, 14)->modulus() ==
        std::vector<uint32_t>{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(Field::make(3, 2)->modulus() == std::vector<uint32_t>{1, 0});
  CHECK(Field::make(3, 3)->modulus() == std::vector<uint32_t>{1, 2, 0});
  CHECK(Field::make(3, 6)->modulus() == std::vector<uint32_t>{2, 1, 0, 0, 0, 0});
  CHECK(Field::make(5, 4)->modulus() == std::vector<uint32_t>{2, 0, 0, 0});
  CHECK(Field::make(7, 2)->modulus() == std::vector<uint32_t>{1, 0});
  CHECK(Field::make(13, 3)->modulus() == std::vector<uint32_t>{2, 0, 0});
}

TEST_CASE("field construction rejects bad inputs") {
  CHECK_THROWS_WITH_AS(Field::make(6, 1), doctest::Contains("NonPrimeP"), error);
  CHECK_THROWS_WITH_AS(Field::make(2, 21), doctest::Contains("UnsupportedFieldSize"),
                       error);
  // T^2 + 1 factors over GF(2) as (T+1)^2.
  CHECK_THROWS_WITH_AS(Field::make(2, 2, {1, 0}), doctest::Contains("ReducibleModulus"),
                       error);
}

TEST_CASE("GF(16) field axioms and dlog round trip") {
  auto F = Field::make(2, 4);
  for (uint32_t a = 0; a < 16; ++a) {
    for (uint32_t b = 0; b < 16; ++b) {
      CHECK(F->mul(a, b) == F->mul(b, a));
      for (uint32_t c = 0; c < 16; c += 5) {
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
  for (uint32_t a = 1; a < 16; ++a) {
    CHECK(F->exp_of(F->dlog(a)) == a);
    CHECK(F->pow(a, 15) == 1);
  }
  CHECK(F->pow(F->generator(), F->order()) == 1);
}

TEST_CASE("characteristic-3 add tables") {
  auto F = Field::make(3, 3);
  for (uint32_t a = 0; a < 27; ++a) {
    CHECK(F->add(a, F->neg(a)) == 0);
    for (uint32_t b = 0; b < 27; ++b) {
      // Digit-wise mod-3 addition.
      auto da = F->digits(a), db = F->digits(b);
      uint32_t expect = 0, w = 1;
      for (size_t i = 0; i < da.size(); ++i) {
        expect += ((da[i] + db[i]) % 3) * w;
        w *= 3;
      }
      CHECK(F->add(a, b) == expect);
    }
  }
}

TEST_CASE("mth roots in GF(1024)") {
  auto F = Field::make(2, 10);
  // 11 divides 1023, so 11th powers have full fibers.
  uint32_t c = F->pow(F->generator(), 22);
  auto roots = F->mth_roots(c, 11);
  CHECK(roots.size() == 11);
  CHECK(std::is_sorted(roots.begin(), roots.end()));
  for (uint32_t r : roots) CHECK(F->pow(r, 11) == c);
  // A non-residue has none.
  uint32_t nc = F->pow(F->generator(), 23);
  CHECK(F->mth_roots(nc, 11).empty());
  CHECK(F->mth_roots(0, 11) == std::vector<uint32_t>{0});
  // Brute-force cross-check for m = 3 on every target.
  for (uint32_t t = 0; t < 64; ++t) {
    auto rs = F->mth_roots(t, 3);
    std::set<uint32_t> brute;
    for (uint32_t x = 0; x < F->size(); ++x) {
      if (F->pow(x, 3) == t) brute.insert(x);
    }
    CHECK(std::set<uint32_t>(rs.begin(), rs.end()) == brute);
  }
}

TEST_CASE("embedding GF(4) into GF(1024) is a field homomorphism") {
  auto S = Field::make(2, 2);
  auto T = Field::make(2, 10);
  Embedding emb(S, T);
  CHECK(emb(0) == 0);
  CHECK(emb(1) == 1);
  for (uint32_t a = 0; a < 4; ++a) {
    for (uint32_t b = 0; b < 4; ++b) {
      CHECK(emb(S->add(a, b)) == T->add(emb(a), emb(b)));
      CHECK(emb(S->mul(a, b)) == T->mul(emb(a), emb(b)));
    }
    CHECK(emb.in_image(emb(a)));
  }
  // Image is exactly the subfield of size 4: 3 nonzero elements.
  size_t in_img = 0;
  for (uint32_t y = 1; y < T->size(); ++y) {
    if (emb.in_image(y)) ++in_img;
  }
  CHECK(in_img == 3);
  CHECK_THROWS_WITH_AS(Embedding(Field::make(2, 3), T),
                       doctest::Contains("IncompatibleDegrees"), error);
  CHECK_THROWS_WITH_AS(Embedding(Field::make(3, 1), T),
                       doctest::Contains("IncompatibleDegrees"), error);
}

TEST_CASE("boxed element arithmetic enforces matching fields") {
  auto F = Field::make(2, 4);
  auto G = Field::make(2, 2);
  Fe a{F.get(), 5}, b{F.get(), 9}, c{G.get(), 1};
  CHECK(arith(a, b, '+').code == F->add(5, 9));
  CHECK(arith(a, b, '*').code == F->mul(5, 9));
  CHECK_THROWS_WITH_AS(arith(a, c, '+'), doctest::Contains("FieldMismatch"), error);
}
