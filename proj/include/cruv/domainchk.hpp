#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "cruv/bisector.hpp"
#include "cruv/isometry.hpp"

namespace cruv {

struct DirichletData {
  Representation rep;
  HVector p0;
  std::array<HVector, 8> r;       // r1..r8
  std::array<Bisector, 8> B;      // B_j = B(p0, r_j)
  std::array<Word, 8> words;      // element of S with gamma p0 = r_j
  HMatrix I;

  const HVector& rj(int j) const { return r[j - 1]; }
  GiraudChart chart(int j, int k) const { return giraud_chart(p0, rj(j), rj(k)); }
};

// the orbit points are computed from the words and compared with the displayed coordinates
DirichletData build_dirichlet();

// index action on faces: G2 B_j = B_{g2_index(j)}, I B_j = B_{i_index(j)}
int g2_index(int j);
int i_index(int j);

struct FaceLattice {
  std::array<std::set<int>, 9> neighbors;             // 1-based, neighbors[0] unused
  std::array<std::set<std::string>, 9> vertices;
};

// the faces vertex table, in the order of the paired vertices
const std::array<std::vector<std::string>, 9>& face_vertex_table();

// sign of the trace of B_m on the closed Giraud disk B_j cap B_k:
// -1 when |<V,p0>| < |<V,r_m>| on the open disk (inside the half-space), +1 when outside, 0 when the trace crosses
struct DiskSide {
  int side = 0;
  std::string method;
  std::vector<std::vector<RationalInterval>> candidates;
};
DiskSide disk_side(const DirichletData& d, int j, int k, int m);

CheckResult verify_face_lattice(const DirichletData& d, FaceLattice* out = nullptr);
// one row of the tangency table; fails when the pair is not {A p0, A^-1 p0}
CheckResult tangency_row(const DirichletData& d, const std::string& vertex, const Word& stab, int i, int j);
CheckResult verify_tangency_table(const DirichletData& d);
CheckResult verify_side_pairings(const DirichletData& d);
CheckResult verify_cycles(const DirichletData& d);
CheckResult verify_torsion(const DirichletData& d);
// B8 on the B1 cap B7 torus: boundary contact points, curve endpoints and diagonal component
CheckResult verify_b8_trace(const DirichletData& d);

}  // namespace cruv
