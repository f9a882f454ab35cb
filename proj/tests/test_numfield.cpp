#include "doctest.h"
#include "support.hpp"

#include <cmath>

using namespace cruv;

TEST_CASE("radical products reduce in the subset basis") {
  CHECK(sq(2) * sq(2) == RealAlg(2));
  CHECK(sq(6) * sq(10) == RealAlg(2) * sq(15));
  CHECK(sq(210) * sq(210) == RealAlg(210));
  CHECK((sq(2) + sq(3)) * (sq(2) - sq(3)) == RealAlg(-1));
}

TEST_CASE("complex arithmetic examples") {
  CxAlg a(rq(1, 4), rq(1, 4) * sq(7));
  CHECK(a * a.conj() == CxAlg(rq(1, 2)));
  CxAlg b(rq(3, 4), rq(1, 4) * sq(7));
  CHECK(b + b.conj() == CxAlg(rq(3, 2)));
  CHECK(a / a == CxAlg(1));
  CHECK_THROWS_AS(a / CxAlg(), Error);
}

TEST_CASE("division by zero is reported") {
  try {
    (void)(RealAlg(1) / RealAlg());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::DivisionByZero);
  }
}

TEST_CASE("sign examples") {
  CHECK(sign(sq(7) - RealAlg(2)) == 1);
  CHECK(sign(RealAlg()) == 0);
  CHECK(sign(RealAlg(5) - RealAlg(2) * sq(7)) == -1);
  // close cancellation: 99 - 70 sqrt2 ~ 0.00505
  CHECK(sign(RealAlg(99) - RealAlg(70) * sq(2)) == 1);
  CHECK(sign(sq(2) + sq(3) - sq(10)) == -1);
}

TEST_CASE("sign gives up loudly when the precision cap is tiny") {
  // 9801 - 6930 sqrt2 is ~5e-5; 1 bit of precision cannot separate it from zero
  FieldConfig cfg;
  cfg.max_precision_bits = 4;
  CHECK_THROWS_AS(sign(RealAlg(9801) - RealAlg(6930) * sq(2), cfg), Error);
}

TEST_CASE("enclose examples") {
  auto iv = enclose(sq(7), Q(1, 100));
  Q hi(264575132, 100000000), lo(264575131, 100000000);
  hi.canonicalize();
  lo.canonicalize();
  CHECK(iv.lo <= hi);
  CHECK(iv.hi >= lo);
  CHECK(iv.width() <= Q(1, 100));
  auto z = enclose(RealAlg(), Q(1, 10));
  CHECK(z.has_zero());
  auto r = enclose(rq(3, 2), Q(1, 10));
  CHECK(r.lo == Q(3, 2));
  CHECK(r.hi == Q(3, 2));
}

TEST_CASE("try_sqrt examples") {
  CHECK(*try_sqrt(RealAlg(5)) == sq(5));
  CHECK(*try_sqrt(rq(9, 4)) == rq(3, 2));
  CHECK(*try_sqrt(rq(50, 49)) == rq(5, 7) * sq(2));
  FieldConfig no2;
  no2.radicands = parse_radicands("3,5,7");
  CHECK_FALSE(try_sqrt(rq(50, 49), no2).has_value());
  CHECK_FALSE(try_sqrt(RealAlg(11)).has_value());
  CHECK_THROWS_AS(try_sqrt(RealAlg(-1)), Error);
  // nested: sqrt(5 + 2 sqrt6) = sqrt2 + sqrt3
  CHECK(*try_sqrt(RealAlg(5) + RealAlg(2) * sq(6)) == sq(2) + sq(3));
  // sqrt(5/7) = sqrt35 / 7
  CHECK(*try_sqrt(rq(5, 7)) == rq(1, 7) * sq(35));
  // (5 - i sqrt7)/(4 sqrt2) has modulus 1
  CxAlg z(rq(5, 8) * sq(2), -rq(1, 8) * sq(14));
  CHECK(z.norm2() == RealAlg(1));
}

TEST_CASE("decimal previews") {
  CHECK(sq(7).decimal(8) == "2.64575131");
  CHECK(rq(-1, 8).decimal(3) == "-0.125");
  CHECK(decimal(Q(-1, 1000), 2) == "0.00");
}

TEST_CASE("property: field axioms on random triples") {
  std::mt19937 rng(7);
  for (int n = 0; n < 300; ++n) {
    RealAlg a = testing::random_real(rng), b = testing::random_real(rng), c = testing::random_real(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == RealAlg(1));
    CxAlg x = testing::random_cx(rng), y = testing::random_cx(rng), w = testing::random_cx(rng);
    CHECK((x * y) * w == x * (y * w));
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.conj().conj() == x);
    CHECK(sign(x.norm2()) >= 0);
    if (!x.is_zero()) CHECK(x * x.inverse() == CxAlg(1));
  }
}

TEST_CASE("property: signs of negation and squares") {
  std::mt19937 rng(11);
  for (int n = 0; n < 1000; ++n) {
    RealAlg x = testing::random_nonzero(rng);
    CHECK(sign(x) * sign(-x) == -1);
    CHECK(sign(x * x) == 1);
  }
}

TEST_CASE("property: enclosures contain a double-precision oracle") {
  std::mt19937 rng(13);
  for (int n = 0; n < 300; ++n) {
    RealAlg x = testing::random_real(rng);
    double v = 0;
    for (const auto& [m, c] : x.terms()) {
      long p = 1;
      for (int k = 0; k < 4; ++k)
        if (m >> k & 1) p *= kPrimes[k];
      v += c.get_d() * std::sqrt(double(p));
    }
    auto iv = enclose(x, Q(1, 1000));
    CHECK(iv.lo.get_d() <= v + 1e-9);
    CHECK(iv.hi.get_d() >= v - 1e-9);
  }
}

TEST_CASE("property: successful square roots square back") {
  std::mt19937 rng(17);
  for (int n = 0; n < 200; ++n) {
    RealAlg y = testing::random_real(rng, 0xF, 2);
    RealAlg x = y * y;
    auto r = try_sqrt(x);
    REQUIRE(r.has_value());
    CHECK(*r * *r == x);
    CHECK(sign(*r) >= 0);
  }
}
