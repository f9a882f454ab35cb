#include "doctest.h"

#include "cruv/meridian.hpp"

using namespace cruv;

namespace {

const DirichletData& data() {
  static const DirichletData d = build_dirichlet();
  return d;
}

const TriangleData& triangle() {
  static const TriangleData T = build_triangle(data());
  return T;
}

void show(const CheckResult& r) {
  for (const auto& s : r.details) MESSAGE(s);
}

SolutionBox at(const std::vector<RealAlg>& t) {
  SolutionBox s;
  for (const auto& x : t) s.box.push_back(enclose_bits(x, 64));
  s.exact = t;
  s.certified = true;
  return s;
}

}  // namespace

TEST_CASE("triangle vertices and interior") {
  const auto& T = triangle();
  CHECK(T.vertices[0].name == "p2");
  CHECK(T.vertices[1].name == "q1");
  CHECK(T.vertices[2].name == "q2");
  CHECK(T.interior_signs == std::array<int, 3>{-1, -1, -1});
  for (const auto& v : T.vertices) CHECK(triangle_side(T, at(v.t), v.faces) == 0);
  CHECK(triangle_side(T, at(T.interior_point)) == 1);
  CHECK(triangle_side(T, at({RealAlg(1), RealAlg(0), RealAlg(0)})) == -1);
  // second branch of the B2 trace, below tau_2
  CHECK(triangle_side(T, at({RealAlg::rat(885, 1000), RealAlg::rat(32, 1000), RealAlg::rat(-464, 1000)})) == -1);
}

TEST_CASE("tau_2 and tau_0 sample points lie on the sphere") {
  for (double t3 : {-0.7, -0.5, -0.2, -0.01}) {
    auto p = tau2_point(t3);
    CHECK(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p[1] > 0);
  }
  auto q = tau0_point(0.3);
  CHECK(q[0] == doctest::Approx((9 - 7 * 0.09) / 16));
}

TEST_CASE("C setup, B2 disk and tables") {
  const auto& d = data();
  const auto& T = triangle();
  for (const auto& r : {verify_C_setup(d), verify_C_B2_disk(d), verify_sphere_traces(d, T), verify_triangle_vertices(d, T)}) {
    show(r);
    CHECK(r.ok());
  }
}

TEST_CASE("sides of T") {
  auto r = verify_tau(data(), triangle());
  show(r);
  CHECK(r.ok());
}

TEST_CASE("T is a triangle") {
  auto r = verify_triangle_T(data(), triangle());
  show(r);
  CHECK(r.ok());
}

TEST_CASE("G2^2 translate") {
  const auto& d = data();
  const auto& T = triangle();
  auto two = verify_g2sq_two_points(d, T);
  show(two);
  // the intersection locus is a pair of great circles, not two points
  CHECK_FALSE(two.ok());
  auto dis = verify_g2sq_disjoint(d, T);
  show(dis);
  CHECK(dis.ok());
}
