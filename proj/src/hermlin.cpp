#include "cruv/hermlin.hpp"

namespace cruv {

HVector operator+(const HVector& a, const HVector& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
HVector operator-(const HVector& a, const HVector& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
HVector operator*(const CxAlg& s, const HVector& v) { return {s * v[0], s * v[1], s * v[2]}; }
HVector conj(const HVector& v) { return {v[0].conj(), v[1].conj(), v[2].conj()}; }

bool is_zero(const HVector& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

bool projective_equal(const HVector& a, const HVector& b) {
  if (is_zero(a) || is_zero(b)) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  // cross-ratios equal, also need matching supports
  for (int i = 0; i < 3; ++i)
    if (a[i].is_zero() != b[i].is_zero()) return false;
  return true;
}

HVector normalized(const HVector& v, int from) {
  for (int k = 0; k < 3; ++k) {
    int i = (from + k) % 3;
    if (!v[i].is_zero()) return v[i].inverse() * v;
  }
  throw Error(Err::DegenerateInput, "normalizing zero vector");
}

std::string str(const HVector& v) { return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")"; }

HMatrix HMatrix::identity() {
  HMatrix m;
  for (int i = 0; i < 3; ++i) m.a[i][i] = CxAlg(1);
  return m;
}

HMatrix HMatrix::transpose() const {
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
  return r;
}

HMatrix HMatrix::conj() const {
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = a[i][j].conj();
  return r;
}

HMatrix HMatrix::adjoint() const { return transpose().conj(); }

CxAlg HMatrix::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

CxAlg HMatrix::trace() const { return a[0][0] + a[1][1] + a[2][2]; }

HMatrix HMatrix::inverse() const {
  CxAlg d = det();
  if (d.is_zero()) throw Error(Err::DivisionByZero, "singular matrix");
  CxAlg di = d.inverse();
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      r.a[i][j] = di * (a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1]);
    }
  return r;
}

HMatrix HMatrix::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  HMatrix r = identity(), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

bool HMatrix::is_zero() const {
  for (auto& row : a)
    for (auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

std::string HMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + a[i][j].str();
    s += "]";
  }
  return s + "]";
}

HMatrix operator*(const HMatrix& m, const HMatrix& n) {
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CxAlg s;
      for (int k = 0; k < 3; ++k)
        if (!m.a[i][k].is_zero() && !n.a[k][j].is_zero()) s += m.a[i][k] * n.a[k][j];
      r.a[i][j] = s;
    }
  return r;
}

HMatrix operator+(const HMatrix& m, const HMatrix& n) {
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = m.a[i][j] + n.a[i][j];
  return r;
}

HMatrix operator-(const HMatrix& m, const HMatrix& n) {
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = m.a[i][j] - n.a[i][j];
  return r;
}

HMatrix operator*(const CxAlg& s, const HMatrix& m) {
  HMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.a[i][j] = s * m.a[i][j];
  return r;
}

HVector operator*(const HMatrix& m, const HVector& v) {
  HVector r;
  for (int i = 0; i < 3; ++i) r[i] = m.a[i][0] * v[0] + m.a[i][1] * v[1] + m.a[i][2] * v[2];
  return r;
}

HermitianForm HermitianForm::standard() {
  HermitianForm f;
  f.gram.a[0][2] = CxAlg(1);
  f.gram.a[1][1] = CxAlg(1);
  f.gram.a[2][0] = CxAlg(1);
  return f;
}

CxAlg HermitianForm::operator()(const HVector& z, const HVector& w) const {
  CxAlg s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!gram.a[i][j].is_zero()) s += z[i] * gram.a[i][j] * w[j].conj();
  return s;
}

bool HermitianForm::preserved_by(const HMatrix& m) const { return m.adjoint() * gram.transpose() * m == gram.transpose(); }

CxAlg herm(const HVector& z, const HVector& w) { return z[0] * w[2].conj() + z[1] * w[1].conj() + z[2] * w[0].conj(); }

RealAlg hnorm(const HVector& z) { return herm(z, z).re; }

HVector box(const HVector& z, const HVector& w) {
  HVector a{z[2].conj(), z[1].conj(), z[0].conj()};
  HVector b{w[2].conj(), w[1].conj(), w[0].conj()};
  HVector r{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (is_zero(r)) throw Error(Err::DegenerateInput, "box product of proportional vectors");
  return r;
}

CxAlg CxPoly3::eval(const CxAlg& t) const { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }

CxAlg CxPoly3::discriminant() const {
  // monic t^3 + b t^2 + c t + d
  const CxAlg &b = c[2], &cc = c[1], &d = c[0];
  return CxAlg(18) * b * cc * d - CxAlg(4) * b * b * b * d + b * b * cc * cc - CxAlg(4) * cc * cc * cc -
         CxAlg(27) * d * d;
}

std::string CxPoly3::str() const {
  std::string s = "t^3";
  const char* pw[] = {"", "*t", "*t^2"};
  for (int k = 2; k >= 0; --k)
    if (!c[k].is_zero()) s += " + (" + c[k].str() + ")" + pw[k];
  return s;
}

CxPoly3 char_poly(const HMatrix& m) {
  CxPoly3 p;
  CxAlg minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) -
                 m(1, 2) * m(2, 1);
  p.c[3] = CxAlg(1);
  p.c[2] = -m.trace();
  p.c[1] = minors;
  p.c[0] = -m.det();
  return p;
}

bool projective_equal(const HMatrix& m, const HMatrix& n) {
  if (m.is_zero() || n.is_zero()) return false;
  // find a pivot entry of n, then m == (m_p / n_p) n  <=>  m * n_p == m_p * n
  int pi = -1, pj = -1;
  for (int i = 0; i < 3 && pi < 0; ++i)
    for (int j = 0; j < 3; ++j)
      if (!n(i, j).is_zero()) {
        pi = i;
        pj = j;
        break;
      }
  const CxAlg& np = n(pi, pj);
  const CxAlg& mp = m(pi, pj);
  if (mp.is_zero()) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m(i, j) * np != mp * n(i, j)) return false;
  return true;
}

HVector eigenvector_for(const HMatrix& m, const CxAlg& lambda) {
  HMatrix a = m - lambda * HMatrix::identity();
  if (!a.det().is_zero()) throw Error(Err::NotAnEigenvalue, lambda.str());
  // rank 2: cross product of two independent rows spans the kernel
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto &r = a.a[i], &s = a.a[j];
      HVector v{r[1] * s[2] - r[2] * s[1], r[2] * s[0] - r[0] * s[2], r[0] * s[1] - r[1] * s[0]};
      if (!is_zero(v)) return v;
    }
  // rank <= 1
  for (int i = 0; i < 3; ++i) {
    const auto& r = a.a[i];
    for (int k = 0; k < 3; ++k) {
      int k1 = (k + 1) % 3;
      HVector v;
      v[k] = r[k1];
      v[k1] = -r[k];
      if (!is_zero(v)) return v;
    }
  }
  return {CxAlg(1), CxAlg(), CxAlg()};
}

}  // namespace cruv
