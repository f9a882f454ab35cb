#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cruv/check.hpp"
#include "cruv/hermlin.hpp"
#include "cruv/polysys.hpp"

namespace cruv {

// complex-valued polynomial re + i*im over a real variable list
struct CPoly {
  MPoly re, im;

  static CPoly constant(const std::vector<std::string>& vars, const CxAlg& c);
  // x + i*y for two named real variables
  static CPoly unit(const std::vector<std::string>& vars, const std::string& x, const std::string& y);

  CPoly conj() const { return {re, -im}; }
  MPoly norm2() const { return re * re + im * im; }
  CxAlg eval(const std::vector<RealAlg>& pt) const { return {re.eval(pt), im.eval(pt)}; }
};

CPoly operator+(const CPoly& a, const CPoly& b);
CPoly operator-(const CPoly& a, const CPoly& b);
CPoly operator*(const CPoly& a, const CPoly& b);
CPoly operator*(const CxAlg& c, const CPoly& a);

using CVector = std::array<CPoly, 3>;
CPoly herm(const CVector& z, const HVector& w);
CPoly herm(const CVector& z, const CVector& w);

// the torus ring for Giraud charts, z_k = x_k + i y_k
const std::vector<std::string>& torus_vars();
// the sphere ring for spinal charts
const std::vector<std::string>& sphere_vars();
MPoly reduce_torus(const MPoly& f);   // y_k^2 -> 1 - x_k^2
MPoly reduce_sphere(const MPoly& f);  // t3^2 -> 1 - t1^2 - t2^2
MPoly torus_circle(int k);            // x_k^2 + y_k^2 - 1
MPoly sphere_equation();              // t1^2 + t2^2 + t3^2 - 1

struct Bisector {
  HVector p, q;
  std::string label;

  // validates equal norms and projective distinctness
  static Bisector make(const HVector& p, const HVector& q, const std::string& label = "");
};

// V(z1, z2) = v[0] + z1 v[1] + z2 v[2] + z1 z2 v[3] = (conj(z1) a - b) box (conj(z2) c - d)
struct GiraudChart {
  std::array<HVector, 4> v;
  HVector a, b, c, d;

  bool coequidistant() const { return is_zero(v[3]); }
  HVector at(const CxAlg& z1, const CxAlg& z2) const;
  CVector symbolic() const;  // V over the torus ring
};

// shared-slice data for two bisectors B(a,b), B(c,d)
struct SliceTest {
  HVector s;                    // intersection of the extended complex spines
  RealAlg norm;                 // <s,s>
  std::optional<CxAlg> z_first, z_second;  // unique slice parameters when defined
  bool on_first = false, on_second = false;  // |z| = 1
  bool cospinal = false;  // the complex spines coincide, s undefined
  bool shared() const { return on_first && on_second; }
};
SliceTest slice_test(const HVector& a, const HVector& b, const HVector& c, const HVector& d);

GiraudChart giraud_chart(const HVector& a, const HVector& b, const HVector& c, const HVector& d);
// coequidistant chart for B(center, q1) and B(center, q2)
GiraudChart giraud_chart(const HVector& center, const HVector& q1, const HVector& q2);

// f = Re(mu z2) - nu; mu is affine in (x1, y1)
struct MuNu {
  CPoly mu;
  MPoly nu;
  MPoly discriminant(bool reduce_circle) const;  // nu^2 - |mu|^2 in (x1, y1)
};

MPoly norm_form(const GiraudChart& ch);  // <V,V> reduced on the torus
// |<V,p>|^2 - |<V,q>|^2 reduced on the torus
MPoly trace_equation(const GiraudChart& ch, const HVector& p, const HVector& q);
// split f, affine in (x2, y2), as Re(mu z2) - nu
MuNu mu_nu(const MPoly& f);

// restrict a torus polynomial in (x1, y1) only to the named pair (x, y)
MPoly in_first_circle(const MPoly& f);

// nu^2 - |mu|^2 > 0 on |z1| = 1 with nu < 0: the negative region of the norm form is empty
CheckResult certify_empty(const std::string& id, const GiraudChart& ch);
// nu^2 - |mu|^2 > 0 on the closed unit disk for the trace of B(p,q)
CheckResult certify_trace_empty(const std::string& id, const GiraudChart& ch, const HVector& p, const HVector& q,
                                Domain dom);
// a negative vector V(z1, z2) from a grid of rational unit parameters
CheckResult certify_nonempty_disk(const std::string& id, const GiraudChart& ch);
// Phillips tangency: A unipotent, B(p0, A p0) and B(p0, A^-1 p0) tangent at fix(A)
CheckResult tangency_by_unipotency(const std::string& id, const HMatrix& A, const HVector& center);

// gradient of a torus function in the angle coordinates (t1, t2), z_k = exp(i t_k)
std::pair<RealAlg, RealAlg> angle_gradient(const MPoly& f, const std::vector<RealAlg>& pt);

struct SpinalChart {
  HMatrix P;  // columns v0, v1, v2 with P* J P = diag(-1, 1, 1)

  static SpinalChart from_basis(const HMatrix& P);
  bool lorentz() const;
  // affine ball coordinates (z1/z0, z2/z0) of a point
  std::pair<CxAlg, CxAlg> affine(const HVector& x) const;
  // the point (1, i t3, t1 + i t2) in original coordinates
  CVector symbolic() const;
  HVector point(const RealAlg& t1, const RealAlg& t2, const RealAlg& t3) const;
};

// midpoint chart: v0 = (p+q)/|p+q|, v1 = (p-q)/|p-q|, v2 completing the basis
// with its last nonzero coordinate real and negative
SpinalChart spinal_chart(const Bisector& b, const FieldConfig& cfg = {});
// |<Z,p>|^2 - |<Z,q>|^2 on the spinal sphere, reduced with the sphere equation
MPoly sphere_trace(const SpinalChart& ch, const HVector& p, const HVector& q);

// scale s with a == s * b, when the polynomials are proportional
std::optional<RealAlg> proportional(const MPoly& a, const MPoly& b);

}  // namespace cruv
