#pragma once

#include <array>
#include <string>
#include <vector>

#include "cruv/numfield.hpp"

namespace cruv {

using HVector = std::array<CxAlg, 3>;

HVector operator+(const HVector& a, const HVector& b);
HVector operator-(const HVector& a, const HVector& b);
HVector operator*(const CxAlg& s, const HVector& v);
HVector conj(const HVector& v);
bool is_zero(const HVector& v);
bool projective_equal(const HVector& a, const HVector& b);
// scale so the first nonzero coordinate (from `from`) equals 1
HVector normalized(const HVector& v, int from = 0);
std::string str(const HVector& v);

struct HMatrix {
  std::array<std::array<CxAlg, 3>, 3> a;

  static HMatrix identity();
  static HMatrix from(const std::array<std::array<CxAlg, 3>, 3>& rows) { return {rows}; }

  CxAlg& operator()(int i, int j) { return a[i][j]; }
  const CxAlg& operator()(int i, int j) const { return a[i][j]; }

  HMatrix transpose() const;
  HMatrix adjoint() const;  // conjugate transpose
  HMatrix conj() const;
  CxAlg det() const;
  CxAlg trace() const;
  HMatrix inverse() const;
  HMatrix pow(int n) const;
  bool is_zero() const;

  bool operator==(const HMatrix& o) const { return a == o.a; }
  bool operator!=(const HMatrix& o) const { return !(*this == o); }
  std::string str() const;
};

HMatrix operator*(const HMatrix& m, const HMatrix& n);
HMatrix operator+(const HMatrix& m, const HMatrix& n);
HMatrix operator-(const HMatrix& m, const HMatrix& n);
HMatrix operator*(const CxAlg& s, const HMatrix& m);
HVector operator*(const HMatrix& m, const HVector& v);

struct HermitianForm {
  HMatrix gram;

  static HermitianForm standard();  // anti-diagonal ones
  CxAlg operator()(const HVector& z, const HVector& w) const;
  bool preserved_by(const HMatrix& m) const;  // M* J M == J
};

// <Z,W> = Z1 W3bar + Z2 W2bar + Z3 W1bar
CxAlg herm(const HVector& z, const HVector& w);
RealAlg hnorm(const HVector& z);
// Hermitian cross product, orthogonal to both inputs
HVector box(const HVector& z, const HVector& w);

// monic degree-3 characteristic polynomial, c[k] is the coefficient of t^k
struct CxPoly3 {
  std::array<CxAlg, 4> c;
  CxAlg eval(const CxAlg& t) const;
  CxAlg discriminant() const;
  bool operator==(const CxPoly3& o) const { return c == o.c; }
  std::string str() const;
};

CxPoly3 char_poly(const HMatrix& m);
bool projective_equal(const HMatrix& m, const HMatrix& n);
HVector eigenvector_for(const HMatrix& m, const CxAlg& lambda);

}  // namespace cruv
