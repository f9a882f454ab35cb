#pragma once

#include "cruv/domainchk.hpp"

namespace cruv {

// Re(a + b z1 + c z2 + d z1 conj(z2)) over the torus ring
MPoly torus_row(const CxAlg& a, const CxAlg& b, const CxAlg& c, const CxAlg& d);
// printed rows of the B1 cap B7 trace table, each still carrying the factor 8 (index 0 unused)
const std::array<MPoly, 9>& printed_torus_rows();

// norms of the witnesses X12 and X13 of nonempty Giraud disks
CheckResult verify_witnesses(const DirichletData& d);
// gradients of the B2 and B8 traces at p2 on the B1 cap B7 torus, and <p2, G1^-1 p0>
CheckResult verify_p2_gradients(const DirichletData& d);
CheckResult verify_torus_traces(const DirichletData& d);
// boundary equation of the B1 cap B7 disk
CheckResult verify_disk_boundary(const DirichletData& d);
// B1 cap B5: nu^2 - |mu|^2 = 225(2x - 3)^2/16 and the disk is empty
CheckResult verify_b1b5(const DirichletData& d);
// mu, nu of the B8 and B4 traces on the B1 cap B7 torus; B3, B4, B5 miss the disk
CheckResult verify_b1b7_traces(const DirichletData& d);
// h2 and h8 circles of the B2 and B8 traces on the B1 sphere, tangent at (1/4, 5 sqrt7/28)
CheckResult verify_b1_sphere_circles(const DirichletData& d);

}  // namespace cruv
