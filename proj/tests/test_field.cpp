#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "triality/field.hpp"

using namespace triality;

TEST_CASE("prime field basics") {
  const FieldSpec& f5 = FieldSpec::get(5, 1);
  CHECK(f5.order() == 5);
  CHECK(f5.mul(2, 3) == 1);  // inv(2) = 3
  CHECK(f5.inv(2) == 3);
  const FieldSpec& f2 = FieldSpec::get(2, 1);
  CHECK(f2.order() == 2);
  CHECK(f2.add(1, 1) == 0);
}

TEST_CASE("GF(4) uses x^2+x+1 and a*a = a+1") {
  const FieldSpec& f4 = FieldSpec::get(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
  uint16_t a = f4.encode({0, 1});  // residue of x
  CHECK(a == 2);
  CHECK(f4.mul(a, a) == f4.add(a, 1));  // x^2 mod (x^2+x+1) = x+1
}

TEST_CASE("GF(27) modulus is irreducible (exhaustive root/factor check)") {
  const FieldSpec& f27 = FieldSpec::get(3, 3);
  const auto& m = f27.modulus();
  REQUIRE(m.size() == 4);
  for (int x = 0; x < 3; ++x) {
    int v = ((m[3] * x + m[2]) * x + m[1]) * x + m[0];
    CHECK(v % 3 != 0);  // no root in GF(3) => irreducible for degree 3
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldSpec::get(6, 1), Error);   // non-prime
  CHECK_THROWS_AS(FieldSpec::get(2, 11), Error);  // 2^11 > 1024
  const FieldSpec& f4 = FieldSpec::get(2, 2);
  CHECK_THROWS_AS(f4.inv(0), Error);
  FieldElem x(f4, 1), y(FieldSpec::get(2, 3), 1);
  CHECK_THROWS_AS((void)(x + y), Error);  // field mismatch
}

TEST_CASE("field axioms exhaustive up to order 64") {
  for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                      {2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 6}}) {
    const FieldSpec& f = FieldSpec::get(p, n);
    const int o = f.order();
    CAPTURE(o);
    for (int a = 0; a < o; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, 0) == a);
    }
    for (int a = 0; a < o; ++a)
      for (int b = 0; b < o; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    if (o <= 64) {
      for (int a = 0; a < o; ++a)
        for (int b = 0; b < o; ++b)
          for (int c = 0; c < o; ++c) {
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          }
    }
  }
}

TEST_CASE("distributivity sampled on larger fields") {
  std::mt19937 rng(12345);
  for (auto [p, n] : {std::pair{5, 3}, {7, 3}, {3, 6}}) {
    const FieldSpec& f = FieldSpec::get(p, n);
    std::uniform_int_distribution<int> d(0, f.order() - 1);
    for (int t = 0; t < 10000; ++t) {
      uint16_t a = d(rng), b = d(rng), c = d(rng);
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
}

TEST_CASE("multiplicative order: x^(q-1) = 1 for all supported fields") {
  for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 6},
                      {5, 3}, {7, 3}, {3, 6}}) {
    const FieldSpec& f = FieldSpec::get(p, n);
    for (int a = 1; a < f.order(); ++a)
      CHECK(f.pow(a, f.order() - 1) == 1);
  }
}

TEST_CASE("frobenius on GF(8): order 3, fixes exactly GF(2)") {
  const FieldSpec& f8 = FieldSpec::get(2, 3);
  for (int a = 0; a < 8; ++a) {
    uint16_t x = static_cast<uint16_t>(a);
    uint16_t y = frobenius_code(f8, frobenius_code(f8, frobenius_code(f8, x, 2), 2), 2);
    CHECK(y == x);
  }
  int fixed = 0;
  for (int a = 0; a < 8; ++a)
    if (frobenius_code(f8, a, 2) == a) ++fixed;
  CHECK(fixed == 2);
  CHECK(frobenius_code(f8, 0, 2) == 0);
  CHECK(frobenius_code(f8, 1, 2) == 1);
}

TEST_CASE("frobenius on GF(729) with r=9 fixes exactly 9 elements") {
  const FieldSpec& f = FieldSpec::get(3, 6);
  int fixed = 0;
  for (int a = 0; a < f.order(); ++a)
    if (frobenius_code(f, a, 9) == a) ++fixed;
  CHECK(fixed == 9);
}

TEST_CASE("frobenius rejects non-powers of p") {
  const FieldSpec& f8 = FieldSpec::get(2, 3);
  CHECK_THROWS_AS(frobenius_code(f8, 3, 3), Error);
  CHECK_THROWS_AS(frobenius_code(f8, 3, 6), Error);
}

TEST_CASE("iterated frobenius(.,p) n times is the identity") {
  for (auto [p, n] : {std::pair{2, 3}, {3, 2}, {5, 3}, {3, 6}}) {
    const FieldSpec& f = FieldSpec::get(p, n);
    for (int a = 0; a < f.order(); ++a) {
      uint16_t x = static_cast<uint16_t>(a);
      for (int i = 0; i < n; ++i) x = f.frob(x);
      CHECK(x == a);
    }
  }
}
