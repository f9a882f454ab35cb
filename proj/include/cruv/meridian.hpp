#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "cruv/domainchk.hpp"
#include "cruv/polysys.hpp"

namespace cruv {

// displayed base change centering C = B(r4, r5) at the origin of the ball
HMatrix base_change_C();

// printed sphere-trace rows f_1..f_8 on the spinal sphere of C (index 0 unused)
const std::array<MPoly, 9>& printed_sphere_rows();

struct TriangleVertex {
  std::string name;
  std::vector<RealAlg> t;  // (t1, t2, t3)
  std::set<int> faces;     // j with f_j = 0
};

struct TriangleData {
  SpinalChart chart;
  std::array<MPoly, 9> f;  // computed sphere traces, f[0] unused
  std::array<TriangleVertex, 3> vertices;  // p2, q1, q2
  std::vector<RealAlg> interior_point;
  std::array<int, 3> interior_signs{};     // signs of f2, f4, f7 inside T
};

TriangleData build_triangle(const DirichletData& d);

// +1 inside T, 0 on its boundary, -1 outside, 2 undecided; `on` lists faces known to vanish at s
int triangle_side(const TriangleData& T, const SolutionBox& s, const std::set<int>& on = {});

// critical points of each f_j on the sphere, indexed by j
std::array<std::vector<SolutionBox>, 9> critical_points(const TriangleData& T);

// side tau_2 of T: t2 = -phi(t3) with the printed a, b, d and the minus branch
struct TauBranch {
  UPoly a, b, d, k;  // phi = (b - k sqrt(d)) / a
};
TauBranch tau2_branch();
// (t1, t2, t3) on tau_2 for t3 in [-sqrt(5/7), 0], in double precision
std::array<double, 3> tau2_point(double t3);
// (t1, t2, t3) on tau_0 for |t3| <= sqrt(5/7)
std::array<double, 3> tau0_point(double t3);

CheckResult verify_C_setup(const DirichletData& d);
CheckResult verify_C_B2_disk(const DirichletData& d);
CheckResult verify_sphere_traces(const DirichletData& d, const TriangleData& T);
CheckResult verify_triangle_vertices(const DirichletData& d, const TriangleData& T);
CheckResult verify_tau(const DirichletData& d, const TriangleData& T);
CheckResult verify_triangle_T(const DirichletData& d, const TriangleData& T);
// the displayed claim that C and its G2^2 translate meet the sphere in two points only
CheckResult verify_g2sq_two_points(const DirichletData& d, const TriangleData& T);
// T and G2^2 T are disjoint, argued from the arcs of the intersection locus
CheckResult verify_g2sq_disjoint(const DirichletData& d, const TriangleData& T);

}  // namespace cruv
