#include "doctest.h"
#include "support.hpp"

#include "cruv/polysys.hpp"

using namespace cruv;

namespace {

const std::vector<std::string> XY{"x", "y"};

MPoly X() { return MPoly::var(XY, "x"); }
MPoly Y() { return MPoly::var(XY, "y"); }
MPoly K(const RealAlg& c) { return MPoly::constant(XY, c); }

UPoly U(std::vector<RealAlg> c) { return UPoly(std::move(c), "x"); }

Q qd(long n, long d) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("resultant examples") {
  MPoly r = resultant(X() - K(2), X() - K(5), "x");
  CHECK((r == K(3) || r == K(-3)));
  CHECK(resultant(X() * X(), X(), "x").is_zero());
  // res_y(x^2+y^2-1, y) = x^2 - 1 up to sign
  MPoly c = resultant(X() * X() + Y() * Y() - K(1), Y(), "y");
  CHECK((c == X() * X() - K(1) || c == K(1) - X() * X()));
  // constant in var: p^deg q
  CHECK(resultant(X() + K(1), Y() * Y() + K(1), "y") == (X() + K(1)).pow(2));
}

TEST_CASE("exact division and square reduction") {
  MPoly f = (X() - Y()) * (X() * X() + K(sq(7)) * Y());
  CHECK(divexact(f, X() - Y()) == X() * X() + K(sq(7)) * Y());
  CHECK_THROWS_AS(divexact(f, X() + K(3)), Error);
  MPoly g = Y().pow(3) + X() * Y() * Y();
  MPoly red = g.reduce_square(1, K(1) - X() * X());
  CHECK(red == (K(1) - X() * X()) * Y() + X() * (K(1) - X() * X()));
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(U({-2, 0, 1}), {Q(0), Q(2)}) == 1);
  CHECK(sturm_count(U({1, 0, 1}), {Q(-10), Q(10)}) == 0);
  UPoly quartic = U({-35, RealAlg(-20) * sq(35), -49, RealAlg(28) * sq(35), 140});
  CHECK(sturm_count(quartic, {Q(-1), Q(1)}) == 2);
  CHECK_THROWS_AS(sturm_count(UPoly(), {Q(0), Q(1)}), Error);
  // endpoints that are roots are excluded from the open interval
  CHECK(sturm_count(U({0, -1, 0, 1}), {Q(-1), Q(1)}) == 1);
}

TEST_CASE("isolate_roots examples") {
  auto cubic = isolate_roots(U({-2473, 7411, -7103, 2221}), {Q(-1), Q(1)}, Q(1, 1000000000));
  REQUIRE(cubic.size() == 1);
  CHECK(abs(cubic[0].approx() - qd(70552301, 100000000)) < qd(1, 100000000));
  auto dbl = isolate_roots(U({rq(1, 4), -1, 1}), {Q(-1), Q(1)}, Q(1, 1000));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].multiplicity_hint == 2);
  CHECK(*dbl[0].exact == rq(1, 2));
  auto three = isolate_roots(U({0, -1, 0, 1}), {Q(-2), Q(2)}, Q(1, 1000));
  REQUIRE(three.size() == 3);
  CHECK(*three[0].exact == RealAlg(-1));
  CHECK(*three[1].exact == RealAlg(0));
  CHECK(*three[2].exact == RealAlg(1));
  auto quad = isolate_roots(U({-7, 0, 16}), {Q(-1), Q(1)}, Q(1, 1000));
  REQUIRE(quad.size() == 2);
  CHECK(*quad[1].exact == rq(1, 4) * sq(7));
}

TEST_CASE("positivity examples") {
  MPoly f = K(rq(225, 16)) * (K(2) * X() - K(3)).pow(2);
  auto r = positivity_on_domain(f, Domain::UnitCircle);
  CHECK(r.verdict == Verdict::Positive);
  CHECK(positivity_on_domain(K(1), Domain::UnitCircle).verdict == Verdict::Positive);
  CHECK(positivity_on_domain(K(1), Domain::ClosedUnitDisk).verdict == Verdict::Positive);
  MPoly d = K(rq(18193, 64)) - K(rq(2025, 8)) * X() + K(rq(405, 8) * sq(7)) * Y() - K(RealAlg(21) * sq(7)) * X() * Y() +
            K(rq(209, 4)) * X() * X() + K(rq(47, 4)) * Y() * Y();
  CHECK(positivity_on_domain(d, Domain::ClosedUnitDisk).verdict == Verdict::Positive);
  // x touches zero at (0, +-1) on the circle: x^2 is nonnegative with zeros
  auto z = positivity_on_domain(X() * X(), Domain::UnitCircle);
  CHECK(z.verdict == Verdict::NonnegativeWithZeros);
  CHECK(z.zeros.size() == 1);
  CHECK(positivity_on_domain(X(), Domain::UnitCircle).verdict == Verdict::Indefinite);
  // positive on the circle, negative inside
  auto in = positivity_on_domain(X() * X() + Y() * Y() - K(rq(1, 2)), Domain::ClosedUnitDisk);
  CHECK(in.verdict == Verdict::Indefinite);
  REQUIRE(in.witness.has_value());
}

TEST_CASE("solve_system small examples") {
  auto r = solve_system({X() * X() + Y() * Y() - K(1), Y()}, {{Q(-2), Q(2)}, {Q(-2), Q(2)}});
  REQUIRE(r.solutions.size() == 2);
  for (const auto& s : r.solutions) {
    REQUIRE(s.exact.has_value());
    CHECK((*s.exact)[1] == RealAlg(0));
  }
  // circle meets a line in two irrational points; Krawczyk or exact completion must certify both
  auto l = solve_system({X() * X() + Y() * Y() - K(1), X() - K(3) * Y() + K(rq(1, 5))}, {{Q(-2), Q(2)}, {Q(-2), Q(2)}});
  CHECK(l.solutions.size() == 2);
  for (const auto& s : l.solutions) CHECK(s.certified);
  // two ellipses in general position: 4 real intersections, not all in the field
  MPoly e1 = X() * X() + K(4) * Y() * Y() - K(4), e2 = K(4) * X() * X() + Y() * Y() - K(rq(9, 2)) + X() * Y();
  auto e = solve_system({e1, e2}, {{Q(-3), Q(3)}, {Q(-3), Q(3)}});
  CHECK(e.solutions.size() == 4);
  for (const auto& s : e.solutions) CHECK(recertify_shrunk({e1, e2}, s, Q(1, 10)));
  CHECK_THROWS_AS(solve_system({(X() - Y()) * (X() + K(1)), (X() - Y()) * (Y() - K(2))}, {{Q(-3), Q(3)}, {Q(-3), Q(3)}}),
                  Error);
}

TEST_CASE("property: resultant vanishes exactly at shared roots") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> small(-3, 3);
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    // p = (x - a)(x - y - b), q = (x - c)(x + y - d) over integer shifts
    int a = small(rng), b = small(rng), c = small(rng), d = small(rng);
    MPoly p = (X() - K(a)) * (X() - Y() - K(b));
    MPoly q = (X() - K(c)) * (X() + Y() - K(d));
    MPoly r = resultant(p, q, "x");
    for (int yv = -6; yv <= 6; ++yv) {
      UPoly pu = UPoly::from(p.subst_value(1, RealAlg(yv)), 0), qu = UPoly::from(q.subst_value(1, RealAlg(yv)), 0);
      bool shared = false;
      for (int xv = -12; xv <= 12; ++xv)
        if (pu.eval(Q(xv)).is_zero() && qu.eval(Q(xv)).is_zero()) shared = true;
      bool zero = r.subst_value(1, RealAlg(yv)).is_zero();
      CHECK(zero == shared);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: sturm_count agrees with isolate_roots on 200 random polynomials") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> deg(1, 6), coef(-9, 9);
  for (int n = 0; n < 200; ++n) {
    std::vector<RealAlg> c;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.push_back(n % 3 == 0 ? RealAlg(coef(rng)) + RealAlg(coef(rng)) * sq(7) : RealAlg(coef(rng)));
    if (c.back().is_zero()) c.back() = RealAlg(1);
    UPoly p(c);
    if (p.degree() < 1) continue;
    Q lo(-3), hi(qd(5, 2));
    int count = sturm_count(p, {lo, hi});
    auto roots = isolate_roots(p, {lo, hi}, Q(1, 1024));
    int interior = 0;
    for (const auto& r : roots)
      if (!(r.interval.is_point() && (r.interval.lo == lo || r.interval.lo == hi))) ++interior;
    CHECK(count == interior);
    for (size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].interval.hi <= roots[i].interval.lo);
  }
}

TEST_CASE("property: positive verdicts survive a rational sample grid") {
  MPoly d = K(rq(18193, 64)) - K(rq(2025, 8)) * X() + K(rq(405, 8) * sq(7)) * Y() - K(RealAlg(21) * sq(7)) * X() * Y() +
            K(rq(209, 4)) * X() * X() + K(rq(47, 4)) * Y() * Y();
  REQUIRE(positivity_on_domain(d, Domain::ClosedUnitDisk).verdict == Verdict::Positive);
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      if (i * i + j * j > 100) continue;
      CHECK(sign(d.eval({rq(i, 10), rq(j, 10)})) > 0);
    }
}
