#include "doctest.h"
#include "support.hpp"

#include "cruv/bisector.hpp"
#include "cruv/isometry.hpp"

using namespace cruv;

namespace {

CxAlg c7(long n, long d, long in = 0, long id = 1) { return {rq(n, d), rq(in, id) * sq(7)}; }

HVector r(int j) {
  auto rho2 = Representation::rho(2);
  int k = (j - 1) / 2;
  HMatrix g = rho2.G2.pow(k);
  HMatrix base = j % 2 ? rho2.G1 : rho2.G3.inverse();
  return g * base * center_p0();
}

// Re(a + b z1 + c z2 + d z1 conj(z2)) over the torus ring
MPoly table_row(const CxAlg& a, const CxAlg& b, const CxAlg& c, const CxAlg& d) {
  const auto& V = torus_vars();
  CPoly z1 = CPoly::unit(V, "x1", "y1"), z2 = CPoly::unit(V, "x2", "y2");
  return (CPoly::constant(V, a) + b * z1 + c * z2 + d * (z1 * z2.conj())).re;
}

std::vector<RealAlg> torus_point(const CxAlg& z1, const CxAlg& z2) { return {z1.re, z1.im, z2.re, z2.im}; }

}  // namespace

TEST_CASE("B1 cap B5 chart and certificate") {
  HVector p0 = center_p0();
  auto ch = giraud_chart(p0, r(1), r(5));
  CHECK(ch.coequidistant());
  // printed first coordinate (3 - i sqrt7)/8 has the wrong sign
  HVector v12{c7(-3, 8, 1, 8), c7(-1, 4, -1, 4), CxAlg(-1)};
  CHECK(ch.v[1] == v12);
  CHECK(ch.v[2] == v12);
  CHECK(ch.v[0] == HVector{c7(9, 8, -3, 8), c7(3, 4, 3, 4), CxAlg(3)});
  MuNu mn = mu_nu(norm_form(ch));
  const auto& V = torus_vars();
  MPoly x1 = MPoly::var(V, "x1"), y1 = MPoly::var(V, "y1");
  // mu = 5/2 (conj z1 - 3), nu = -55/4 + 15/2 x1
  CHECK(mn.mu.re == rq(5, 2) * x1 - MPoly::constant(V, rq(15, 2)));
  CHECK(mn.mu.im == rq(-5, 2) * y1);
  CHECK(mn.nu == MPoly::constant(V, rq(-55, 4)) + rq(15, 2) * x1);
  MPoly two_x_3 = RealAlg(2) * x1 - MPoly::constant(V, 3);
  CHECK(mn.discriminant(true) == rq(225, 16) * two_x_3 * two_x_3);
  CHECK(certify_empty("b1b5", ch).ok());
  auto nw = certify_nonempty_disk("b1b5.witness", ch);
  CHECK(nw.status == Status::Error);
  CHECK(nw.details.at(0).find("NoWitnessFound") != std::string::npos);
}

TEST_CASE("B1 cap B7 chart, trace rows and mu/nu of B8 and B4") {
  HVector p0 = center_p0();
  auto ch = giraud_chart(p0, r(1), r(7));
  CHECK(ch.v[0] == HVector{c7(9, 8, -3, 8), c7(-9, 8, 3, 8), c7(15, 8, 3, 8)});
  CHECK(ch.v[1] == HVector{CxAlg(-1), c7(5, 4, 1, 4), c7(3, 8, -1, 8)});
  CHECK(ch.v[2] == HVector{c7(-3, 8, 1, 8), c7(-1, 4, -1, 4), CxAlg(-1)});
  std::vector<MPoly> rows{
      MPoly(torus_vars()),
      table_row(CxAlg(-43), c7(-12, 1, 12, 1), c7(33, 1, -3, 1), c7(9, 1, -5, 1)),
      table_row(CxAlg(-81), CxAlg(), CxAlg(54), CxAlg()),
      table_row(CxAlg(-151), c7(60, 1, 12, 1), c7(60, 1, -12, 1), c7(-9, 1, -5, 1)),
      table_row(CxAlg(-81), CxAlg(54), CxAlg(), CxAlg()),
      table_row(CxAlg(-43), c7(33, 1, 3, 1), c7(-12, 1, -12, 1), c7(9, 1, -5, 1)),
      MPoly(torus_vars()),
      table_row(CxAlg(-16), c7(15, 1, 3, 1), c7(15, 1, -3, 1), c7(-9, 1, -5, 1)),
  };
  for (int j = 1; j <= 8; ++j) {
    INFO("row " << j);
    MPoly f = trace_equation(ch, p0, r(j));
    auto s = proportional(f, rows[j - 1]);
    REQUIRE(s.has_value());
    if (!f.is_zero()) CHECK(sign(*s) > 0);
  }
  MuNu b8 = mu_nu(rows[7] * rq(1, 8));
  CHECK(b8.mu.eval(torus_point(CxAlg(1), CxAlg())) == c7(15, 8, -3, 8) + c7(-9, 8, 5, 8));
  CHECK(b8.mu.eval(torus_point(CxAlg::I(), CxAlg())) == c7(15, 8, -3, 8) + c7(-9, 8, 5, 8) * CxAlg(0, -1));
  CHECK(b8.nu.eval(torus_point(CxAlg(1), CxAlg())) == RealAlg(2) - rq(15, 8));
  // endpoints h(x,y) = -1/2 - 45 sqrt7 xy/32 - (31x^2 + 193y^2)/64, up to reduction on the circle
  const auto& V = torus_vars();
  MPoly x = MPoly::var(V, "x1"), y = MPoly::var(V, "y1");
  MPoly h = MPoly::constant(V, rq(-1, 2)) - (rq(45, 32) * sq(7)) * x * y - rq(31, 64) * x * x - rq(193, 64) * y * y;
  CHECK(b8.discriminant(true) == reduce_torus(h));
  // B4 disk expression
  MuNu b4 = mu_nu(rows[3] * rq(1, 8));
  CHECK(b4.mu.eval(torus_point(CxAlg(1), CxAlg())) == c7(15, 2, -3, 2) + c7(-9, 8, 5, 8));
  // the printed xy coefficient 42 sqrt7/2 should read 45 sqrt7/2
  MPoly d4 = MPoly::constant(V, rq(18193, 64)) - rq(2025, 8) * x + (rq(405, 8) * sq(7)) * y -
             (rq(45, 2) * sq(7)) * x * y + rq(209, 4) * x * x + rq(47, 4) * y * y;
  CHECK(b4.discriminant(false) == d4);
  CHECK(certify_trace_empty("b4", ch, p0, r(4), Domain::ClosedUnitDisk).ok());
  CHECK(certify_trace_empty("b3", ch, p0, r(3), Domain::ClosedUnitDisk).ok());
  CHECK(certify_trace_empty("b5", ch, p0, r(5), Domain::ClosedUnitDisk).ok());
  CHECK_FALSE(certify_trace_empty("b8", ch, p0, r(8), Domain::UnitCircle).ok());
}

TEST_CASE("diagonal of the B8 trace lies outside the ball") {
  auto ch = giraud_chart(center_p0(), r(1), r(7));
  CxAlg tau = c7(-9, 16, -5, 16);
  CHECK(tau.norm2() == RealAlg(1));
  MPoly f8 = trace_equation(ch, center_p0(), r(8));
  MPoly n = norm_form(ch);
  for (const CxAlg& z1 : {CxAlg(1), CxAlg::I(), CxAlg(rq(3, 5), rq(4, 5)), CxAlg(rq(-5, 13), rq(12, 13))}) {
    auto pt = torus_point(z1, tau * z1);
    CHECK(f8.eval(pt).is_zero());
    CHECK(n.eval(pt) == rq(189, 32));
  }
}

TEST_CASE("witnesses X12 and X13") {
  HVector p0 = center_p0();
  HVector x12 = box(p0 - r(1), p0 - r(2));
  CHECK(x12 == HVector{c7(1, 4, 1, 4), c7(3, 8, -1, 8), c7(-1, 4, -1, 4)});
  CHECK(hnorm(x12) == rq(-3, 4));
  HVector x13 = box(p0 - r(1), p0 - r(3));
  CHECK(x13 == HVector{c7(5, 8, 1, 8), c7(3, 8, -1, 8), c7(-1, 4, -1, 4)});
  CHECK(hnorm(x13) == rq(-1, 2));
  for (int j : {2, 3, 7, 8}) {
    INFO(j);
    CHECK(certify_nonempty_disk("w", giraud_chart(p0, r(1), r(j))).ok());
  }
}

TEST_CASE("gradients at p2 on the B1 cap B7 torus") {
  HVector p0 = center_p0();
  auto ch = giraud_chart(p0, r(1), r(7));
  CxAlg z1 = c7(3, 4, -1, 4), z2(1);
  auto pt = torus_point(z1, z2);
  MPoly f2 = table_row(CxAlg(-43), c7(-12, 1, 12, 1), c7(33, 1, -3, 1), c7(9, 1, -5, 1)) * rq(1, 8);
  MPoly f8 = table_row(CxAlg(-16), c7(15, 1, 3, 1), c7(15, 1, -3, 1), c7(-9, 1, -5, 1)) * rq(1, 8);
  CHECK(f2.eval(pt).is_zero());
  CHECK(f8.eval(pt).is_zero());
  auto g2 = angle_gradient(f2, pt);
  auto g8 = angle_gradient(f8, pt);
  CHECK(g2.first == rq(-3, 4) * sq(7));
  CHECK(g2.second == rq(-3, 8) * sq(7));
  CHECK(g8.first == rq(3, 8) * sq(7));
  CHECK(g8.second == rq(3, 16) * sq(7));
  CHECK((g2.first * g8.second - g2.second * g8.first).is_zero());
  CHECK(norm_form(ch).eval(pt).is_zero());
}

TEST_CASE("slice test") {
  auto rho2 = Representation::rho(2);
  HVector a = rho2.G1.inverse() * center_p0(), b = rho2.G2.inverse() * rho2.G3 * center_p0();
  auto t = slice_test(a, b, center_p0(), r(2));
  CHECK(projective_equal(t.s, HVector{CxAlg(-3 * sq(7), RealAlg(-5)), CxAlg(4 * sq(7), RealAlg(10)),
                                      CxAlg(4 * sq(7))}));
  REQUIRE(t.z_first.has_value());
  CHECK(*t.z_first == CxAlg(rq(9, 46), rq(15, 46) * sq(7)));
  CHECK_FALSE(t.on_first);
  CHECK_FALSE(t.shared());
  // a Giraud chart of coequidistant bisectors always has a valid slice test
  CHECK_NOTHROW(giraud_chart(center_p0(), r(1), r(2)));
}

TEST_CASE("tangency by unipotency") {
  auto rho2 = Representation::rho(2);
  HVector p0 = center_p0();
  CHECK(tangency_by_unipotency("p1", rho2.G1, p0).ok());
  CHECK(tangency_by_unipotency("q1", rho2.G2.inverse() * rho2.G3, p0).ok());
  auto bad = tangency_by_unipotency("g2", rho2.G2, p0);
  CHECK(bad.status == Status::Error);
  CHECK(bad.details.at(0).find("NotUnipotent") != std::string::npos);
}

TEST_CASE("spinal chart of B1") {
  HVector p0 = center_p0();
  auto ch = spinal_chart(Bisector::make(p0, r(1), "1"));
  CHECK(ch.lorentz());
  RealAlg s5 = sq(5).inverse();
  CHECK(ch.P(0, 0) == CxAlg(rq(7, 4) * s5, rq(1, 4) * sq(7) * s5));
  CHECK(ch.P(0, 1) == c7(1, 4, -1, 4));
  // third column agrees with the displayed basis up to a unit phase
  HVector v2{ch.P(0, 2), ch.P(1, 2), ch.P(2, 2)};
  HVector shown{CxAlg(rq(-3, 4) * s5, rq(1, 4) * sq(7) * s5), CxAlg(rq(-1, 2) * s5, rq(-1, 2) * sq(7) * s5),
                CxAlg(-2 * s5)};
  CHECK(projective_equal(v2, shown));
  auto a8 = ch.affine(r(8));
  CHECK(a8.first.is_zero());
  CHECK(a8.second == CxAlg(rq(2, 3)));
  auto a2 = ch.affine(r(2));
  CHECK(a2.first.is_zero());
  CHECK(a2.second.norm2() == (c7(-9, 24, 5, 24)).norm2());
  auto ap = ch.affine(p0), aq = ch.affine(r(1));
  CHECK(ap.first == CxAlg(s5));
  CHECK(aq.first == CxAlg(-s5));
  CHECK(sphere_trace(ch, p0, r(1)).is_zero());
}

TEST_CASE("h8 and h2 cylinders on the B1 sphere") {
  HVector p0 = center_p0();
  auto ch = spinal_chart(Bisector::make(p0, r(1), "1"));
  const auto& V = sphere_vars();
  MPoly t1 = MPoly::var(V, "t1"), t2 = MPoly::var(V, "t2");
  auto k = [&](const RealAlg& c) { return MPoly::constant(V, c); };
  MPoly g8 = sphere_trace(ch, p0, r(8));
  CHECK_FALSE(g8.depends_on(2));
  // corrected sign: (t1 - 8/7)^2 + t2^2 - 50/49
  MPoly h8 = (t1 - k(rq(8, 7))) * (t1 - k(rq(8, 7))) + t2 * t2 - k(rq(50, 49));
  CHECK(proportional(g8, h8).has_value());
  MPoly printed = (t1 - k(rq(8, 7))) * (t1 - k(rq(8, 7))) - t2 * t2 - k(rq(50, 49));
  CHECK_FALSE(proportional(g8, printed).has_value());
  MPoly g2 = sphere_trace(ch, p0, r(2));
  CHECK_FALSE(g2.depends_on(2));
  MPoly c2 = t2 - k(rq(5, 14) * sq(7));
  MPoly h2 = (t1 + k(rq(9, 14))) * (t1 + k(rq(9, 14))) + c2 * c2 - k(rq(50, 49));
  CHECK(proportional(g2, h2).has_value());
  // tangency point of the two circles
  std::vector<RealAlg> q{rq(1, 4), rq(5, 28) * sq(7), RealAlg()};
  CHECK(h2.eval(q).is_zero());
  CHECK(h8.eval(q).is_zero());
}

TEST_CASE("property: mu/nu form agrees with the norm at random torus points") {
  std::mt19937 rng(11);
  HVector p0 = center_p0();
  auto rho2 = Representation::rho(2);
  std::vector<GiraudChart> charts{giraud_chart(p0, r(1), r(5)), giraud_chart(p0, r(1), r(7)),
                                  giraud_chart(p0, r(1), r(2)),
                                  giraud_chart(r(4), r(5), p0, r(2))};
  std::uniform_int_distribution<int> d(1, 40);
  auto unit = [&] {
    // (1 - s^2, 2s)/(1 + s^2) for rational s
    Q s(d(rng) - 20, d(rng));
    s.canonicalize();
    Q den = 1 + s * s;
    return CxAlg(RealAlg(Q((1 - s * s) / den)), RealAlg(Q(2 * s / den)));
  };
  for (const auto& ch : charts) {
    MPoly n = norm_form(ch);
    MuNu mn = mu_nu(n);
    for (int i = 0; i < 100; ++i) {
      CxAlg z1 = unit(), z2 = unit();
      auto pt = torus_point(z1, z2);
      RealAlg direct = hnorm(ch.at(z1, z2));
      CHECK(direct == n.eval(pt));
      CHECK(direct == (mn.mu.eval(pt) * z2).re - mn.nu.eval(pt));
    }
  }
}
