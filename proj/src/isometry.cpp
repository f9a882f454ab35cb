#include "cruv/isometry.hpp"

#include <sstream>

namespace cruv {

namespace {

HMatrix mat(std::array<std::array<CxAlg, 3>, 3> rows) { return HMatrix::from(rows); }

// half-integers with sqrt(d) imaginary parts
CxAlg c(long re_n, long re_d, long im_n = 0, long im_d = 1, int d = 1) {
  RealAlg im = rq(im_n, im_d);
  if (d != 1) im = im * sq(d);
  return cx(rq(re_n, re_d), im);
}

bool is_scalar(const HMatrix& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2);
}

int rank(const HMatrix& a) {
  if (a.is_zero()) return 0;
  if (!a.det().is_zero()) return 3;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = k + 1; l < 3; ++l)
          if (!(a(i, k) * a(j, l) - a(i, l) * a(j, k)).is_zero()) return 2;
  return 1;
}

HVector scaled_point(HVector v) {
  if (!v[2].is_zero()) return v[2].inverse() * v;
  return normalized(v, 0);
}

}  // namespace

Representation Representation::make(const std::string& id, const HMatrix& g1, const HMatrix& g3, unsigned radicands) {
  Representation r;
  r.id = id;
  r.G1 = g1;
  r.G3 = g3;
  r.G2 = g3 * g1.inverse() * g3.inverse() * g1;
  r.radicands = radicands;
  return r;
}

Representation Representation::rho(int k) {
  switch (k) {
    case 1:
      return make("rho1",
                  mat({{{c(1, 1), c(1, 1), c(-1, 2, -1, 2, 3)}, {c(0, 1), c(1, 1), c(-1, 1)}, {c(0, 1), c(0, 1), c(1, 1)}}}),
                  mat({{{c(1, 1), c(0, 1), c(0, 1)}, {c(1, 1), c(1, 1), c(0, 1)}, {c(-1, 2, -1, 2, 3), c(-1, 1), c(1, 1)}}}),
                  0x2);
    case 2:
      return make("rho2",
                  mat({{{c(1, 1), c(1, 1), c(-1, 2, -1, 2, 7)}, {c(0, 1), c(1, 1), c(-1, 1)}, {c(0, 1), c(0, 1), c(1, 1)}}}),
                  mat({{{c(1, 1), c(0, 1), c(0, 1)}, {c(-1, 1), c(1, 1), c(0, 1)}, {c(-1, 2, 1, 2, 7), c(1, 1), c(1, 1)}}}),
                  0x8);
    case 3:
      return make("rho3",
                  mat({{{c(1, 1), c(1, 1), c(-1, 2)}, {c(0, 1), c(1, 1), c(-1, 1)}, {c(0, 1), c(0, 1), c(1, 1)}}}),
                  mat({{{c(1, 1), c(0, 1), c(0, 1)},
                        {c(5, 4, -1, 4, 7), c(1, 1), c(0, 1)},
                        {c(-1, 1), c(-5, 4, -1, 4, 7), c(1, 1)}}}),
                  0x8);
  }
  throw Error(Err::Usage, "no representation rho" + std::to_string(k));
}

Representation Representation::by_name(const std::string& name) {
  if (name == "rho1" || name == "1") return rho(1);
  if (name == "rho2" || name == "2") return rho(2);
  if (name == "rho3" || name == "3") return rho(3);
  throw Error(Err::Usage, "unknown representation " + name);
}

const HMatrix& Representation::gen(int k) const {
  switch (k) {
    case 1: return G1;
    case 2: return G2;
    case 3: return G3;
  }
  throw Error(Err::Usage, "generator index " + std::to_string(k));
}

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.back() == 'b') {
      inv = true;
      tok.pop_back();
    }
    int k = 0;
    try {
      k = std::stoi(tok);
    } catch (...) {
      throw Error(Err::Usage, "bad word token '" + tok + "'");
    }
    if (k == 0 || k < -3 || k > 3) throw Error(Err::Usage, "bad word letter " + tok);
    w.push_back(inv ? -k : k);
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l < 0 ? -l : l);
    if (l < 0) s += 'b';
  }
  return s;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

Word operator*(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w, r;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) r = r * base;
  return r;
}

HMatrix eval_word(const Word& w, const Representation& rep) {
  HMatrix m = HMatrix::identity();
  HMatrix inv[3];
  bool have[3] = {false, false, false};
  for (int l : w) {
    int k = l < 0 ? -l : l;
    if (l > 0) {
      m = m * rep.gen(k);
    } else {
      if (!have[k - 1]) {
        inv[k - 1] = rep.gen(k).inverse();
        have[k - 1] = true;
      }
      m = m * inv[k - 1];
    }
  }
  return m;
}

CheckResult check_relation(const std::string& id, const Word& w, const Representation& rep) {
  return run_check(id, "relator " + word_str(w) + " trivial in " + rep.id, [&](CheckResult& r) {
    HMatrix m = eval_word(w, rep);
    r.witness("word", word_str(w));
    if (!r.expect(projective_equal(m, HMatrix::identity()), word_str(w) + " is projectively Id"))
      r.witness("value", to_json(m));
  });
}

CheckResult check_identity(const std::string& id, const Word& lhs, const Word& rhs, const Representation& rep) {
  return run_check(id, word_str(lhs) + " = " + word_str(rhs) + " in " + rep.id, [&](CheckResult& r) {
    HMatrix a = eval_word(lhs, rep), b = eval_word(rhs, rep);
    r.witness("lhs", word_str(lhs));
    r.witness("rhs", word_str(rhs));
    if (!r.expect(projective_equal(a, b), "projective equality")) {
      r.witness("lhs_value", to_json(a));
      r.witness("rhs_value", to_json(b));
    }
  });
}

std::string IsometryClass::str() const {
  switch (kind) {
    case Identity: return "Identity";
    case RegularElliptic: return "RegularElliptic(" + std::to_string(order) + ")";
    case ComplexReflectionPoint: return "ComplexReflectionPoint(" + std::to_string(order) + ")";
    case ComplexReflectionLine: return "ComplexReflectionLine(" + std::to_string(order) + ")";
    case UnipotentParabolic: return "UnipotentParabolic";
    case EllipticParabolic: return "EllipticParabolic";
    case Loxodromic: return "Loxodromic";
  }
  return "?";
}

int projective_order(const HMatrix& m, int bound) {
  HMatrix p = m;
  for (int n = 1; n <= bound; ++n) {
    if (projective_equal(p, HMatrix::identity())) return n;
    p = p * m;
  }
  return 0;
}

RealAlg goldman_discriminant(const HMatrix& m) {
  CxAlg d = m.det();
  if (d.norm2() != RealAlg(1)) throw Error(Err::DegenerateInput, "goldman discriminant needs |det| = 1");
  CxAlg t = m.trace();
  RealAlg n = t.norm2();
  CxAlg t3 = t * t * t * d.conj();
  return n * n - RealAlg(8) * t3.re + RealAlg(18) * n - RealAlg(27);
}

bool is_unipotent(const HMatrix& m) {
  CxPoly3 p = char_poly(m);
  if (p.c[2] != CxAlg(-3) || p.c[1] != CxAlg(3) || p.c[0] != CxAlg(-1)) return false;
  HMatrix a = m - HMatrix::identity();
  return (a * a * a).is_zero();
}

IsometryClass classify(const HMatrix& m, int bound) {
  if (projective_equal(m, HMatrix::identity())) return {IsometryClass::Identity, 1};
  CxPoly3 cp = char_poly(m);
  const CxAlg &c2 = cp.c[2], &c1 = cp.c[1], &c0 = cp.c[0];
  CxAlg lam = -c2 * CxAlg(Q(1, 3));
  if (c1 == CxAlg(3) * lam * lam && c0 == -(lam * lam * lam)) return {IsometryClass::UnipotentParabolic, 0};

  bool regular = !cp.discriminant().is_zero();
  // repeated eigenvalue from the linear remainder of cp modulo cp'
  auto repeated = [&]() {
    CxAlg r1 = CxAlg(Q(2, 3)) * c1 - CxAlg(Q(2, 9)) * c2 * c2;
    CxAlg r0 = c0 - CxAlg(Q(1, 9)) * c2 * c1;
    return -r0 / r1;
  };

  int n = projective_order(m, bound);
  if (n > 0) {
    if (regular) return {IsometryClass::RegularElliptic, n};
    CxAlg ld = repeated();
    CxAlg ls = -c2 - CxAlg(2) * ld;
    HVector v = eigenvector_for(m, ls);
    int s = sign(hnorm(v));
    if (s < 0) return {IsometryClass::ComplexReflectionPoint, n};
    if (s > 0) return {IsometryClass::ComplexReflectionLine, n};
    throw Error(Err::InvariantViolation, "null eigenvector for simple eigenvalue of a finite-order element");
  }
  RealAlg f = goldman_discriminant(m);
  int s = sign(f);
  if (s > 0) return {IsometryClass::Loxodromic, 0};
  if (s < 0) throw Error(Err::OrderBoundExceeded, "elliptic with order beyond " + std::to_string(bound));
  if (!regular && rank(m - repeated() * HMatrix::identity()) == 1)
    throw Error(Err::OrderBoundExceeded, "complex reflection with order beyond " + std::to_string(bound));
  return {IsometryClass::EllipticParabolic, 0};
}

HVector parabolic_fixed_point(const HMatrix& m) {
  if (!is_unipotent(m) || is_scalar(m)) throw Error(Err::NotUnipotent, m.str());
  // the image of (M-Id)^2, or of M-Id for vertical translations, is the fixed line
  HMatrix a = m - HMatrix::identity();
  HMatrix a2 = a * a;
  const HMatrix& src = a2.is_zero() ? a : a2;
  for (int j = 0; j < 3; ++j) {
    HVector col{src(0, j), src(1, j), src(2, j)};
    if (!is_zero(col)) return scaled_point(col);
  }
  throw Error(Err::InvariantViolation, "no fixed point found");
}

HVector center_p0() { return {CxAlg(1), c(-3, 4, -1, 4, 7), CxAlg(-1)}; }

HMatrix involution_I() {
  return mat({{{c(0, 1), c(0, 1), c(1, 1)}, {c(0, 1), c(-1, 1), c(0, 1)}, {c(1, 1), c(0, 1), c(0, 1)}}});
}

HMatrix conjugator_P() {
  return mat({{{c(1, 1), c(0, 1), c(0, 1)},
               {c(-3, 4, -1, 4, 7), c(-5, 4, 1, 4, 7), c(0, 1)},
               {c(-1, 2, 1, 2, 7), c(-1, 2, 1, 2, 7), c(2, 1)}}});
}

const std::vector<VertexRow>& vertex_table() {
  static const std::vector<VertexRow> rows = {
      {"p1", parse_word("1"), {1, 4}, {2, 3}},      {"p2", parse_word("3"), {7, 2}, {8, 1}},
      {"p3", parse_word("2b 3 2"), {5, 8}, {6, 7}}, {"p4", parse_word("2 1 2b"), {3, 6}, {4, 5}},
      {"q1", parse_word("3b 2"), {2, 5}, {3, 4}},   {"q2", parse_word("1b 2"), {4, 7}, {5, 6}},
      {"q3", parse_word("2 1b"), {6, 1}, {7, 8}},   {"q4", parse_word("3 1"), {8, 3}, {1, 2}},
  };
  return rows;
}

std::vector<HVector> vertex_points(const Representation& rep) {
  HMatrix g2i = rep.G2.inverse();
  std::vector<HVector> p(4), q(4);
  p[0] = parabolic_fixed_point(rep.G1);
  q[0] = parabolic_fixed_point(g2i * rep.G3);
  for (int k = 1; k < 4; ++k) {
    p[k] = scaled_point(g2i * p[k - 1]);
    q[k] = scaled_point(rep.G2 * q[k - 1]);
  }
  return {p[0], p[1], p[2], p[3], q[0], q[1], q[2], q[3]};
}

CheckResult verify_vertex_orbit(const Representation& rep) {
  return run_check("isometry.vertex_orbit", "ideal vertices are unipotent fixed points permuted by G2",
                   [&](CheckResult& r) {
    if (rep.id != "rho2") throw Error(Err::Usage, "vertex orbit is defined for rho2");
    auto pts = vertex_points(rep);
    const auto& tab = vertex_table();
    for (size_t i = 0; i < tab.size(); ++i) {
      const auto& row = tab[i];
      const HVector& v = pts[i];
      HMatrix u = eval_word(row.stabilizer, rep);
      r.expect(hnorm(v).is_zero(), row.name + " is null");
      r.expect(is_unipotent(u), word_str(row.stabilizer) + " unipotent");
      r.expect(projective_equal(u * v, v), row.name + " fixed by " + word_str(row.stabilizer));
      r.expect(projective_equal(parabolic_fixed_point(u), v), row.name + " is the fixed point of its stabilizer");
      r.witness(row.name, to_json(v));
    }
    for (int k = 0; k < 4; ++k) {
      r.expect(projective_equal(rep.G2 * pts[(k + 1) % 4], pts[k]),
               "G2 p" + std::to_string((k + 1) % 4 + 1) + " = p" + std::to_string(k + 1));
      r.expect(projective_equal(rep.G2 * pts[4 + k], pts[4 + (k + 1) % 4]),
               "G2 q" + std::to_string(k + 1) + " = q" + std::to_string((k + 1) % 4 + 1));
    }
    // conjugation identities moving stabilizers along the orbit
    r.absorb(check_identity("stab_p4_to_p3", parse_word("2 2 1b 2b 2b"), parse_word("2b 3b 2"), rep));
    r.absorb(check_identity("stab_q3_to_q4", parse_word("2 2 1b 2b"), parse_word("3 1"), rep));
    r.expect(projective_equal(rep.G3 * pts[0], pts[6]), "G3 p1 = q3");
  });
}

CheckResult verify_conjugacies() {
  return run_check("isometry.conjugacies", "symmetry involution, transpose identity and rho3 conjugator",
                   [&](CheckResult& r) {
    auto rho2 = Representation::rho(2), rho3 = Representation::rho(3);
    const HMatrix I = involution_I(), P = conjugator_P();
    const HMatrix &G1 = rho2.G1, &G2 = rho2.G2, &G3 = rho2.G3;
    HMatrix Pi = P.inverse();
    r.expect(projective_equal(Pi * rho3.G1 * P, G1.inverse() * G3 * G1), "P^-1 A1 P = G1^-1 G3 G1");
    r.expect(projective_equal(Pi * rho3.G3 * P, G3), "P^-1 A3 P = G3");
    r.expect(projective_equal(I * G1 * I, G3.inverse()), "I G1 I = G3^-1");
    r.expect(projective_equal(I * G3 * I, G1.inverse()), "I G3 I = G1^-1");
    r.expect(projective_equal(I * G2 * I, G2.inverse()), "I G2 I = G2^-1");
    r.expect(G1.transpose() == G3.inverse(), "G1^T = G3^-1");
    r.expect(G3.transpose() == G1.inverse(), "G3^T = G1^-1");
    r.expect(projective_equal(I * I, HMatrix::identity()), "I^2 = Id");
    r.expect(HermitianForm::standard().preserved_by(I), "I preserves the form");
    r.expect(projective_equal(I * center_p0(), center_p0()), "I fixes p0");
    r.witness("P", to_json(P));
    r.witness("I", to_json(I));
  });
}

CheckResult verify_kernel_generators() {
  return run_check("isometry.kernel_generators", "a^4, (at)^3, (ata)^3 lie in the kernel with a = G2, t = G3",
                   [&](CheckResult& r) {
    auto rho2 = Representation::rho(2);
    Word a = parse_word("2"), t = parse_word("3");
    r.absorb(check_relation("a^4", power(a, 4), rho2));
    r.absorb(check_relation("(at)^3", power(a * t, 3), rho2));
    r.absorb(check_relation("(ata)^3", power(a * t * a, 3), rho2));
    // b = a^-1 t a t^-1 a^-1 maps to G1^-1 G3
    Word b = inverse(a) * t * a * inverse(t) * inverse(a);
    r.absorb(check_identity("b", b, parse_word("1b 3"), rho2));
    // defining relations of the a, b, t presentation
    r.absorb(check_identity("tat^-1=aba", t * a * inverse(t), a * b * a, rho2));
    r.absorb(check_identity("tbt^-1=ab", t * b * inverse(t), a * b, rho2));
  });
}

std::vector<CheckResult> relation_suite(const Representation& rep) {
  std::vector<CheckResult> out;
  auto W = parse_word;
  const std::string pre = "relation." + rep.id + ".";
  out.push_back(check_identity(pre + "g2_commutator", W("2"), W("3 1b 3b 1"), rep));
  out.push_back(check_identity(pre + "g1g2_eq_g2g3", W("1 2"), W("2 3"), rep));
  out.push_back(run_check(pre + "form_preserved", "generators preserve the Hermitian form", [&](CheckResult& r) {
    auto J = HermitianForm::standard();
    for (int k = 1; k <= 3; ++k) r.expect(J.preserved_by(rep.gen(k)), "G" + std::to_string(k) + "* J G" + std::to_string(k) + " = J");
  }));
  if (rep.id == "rho2") {
    out.push_back(check_relation(pre + "g2_order4", power(W("2"), 4), rep));
    out.push_back(check_relation(pre + "g1g2_cubed", power(W("1 2"), 3), rep));
    out.push_back(check_relation(pre + "g2g1g2_cubed", power(W("2 1 2"), 3), rep));
    out.push_back(check_relation(pre + "g1g2sq_cubed", power(W("1 2 2"), 3), rep));
    out.push_back(check_relation(pre + "g2g3_cubed", power(W("2 3"), 3), rep));
    out.push_back(check_relation(pre + "g2g3g2_cubed", power(W("2 3 2"), 3), rep));
    out.push_back(check_identity(pre + "pairing_b4b3", W("3 1 2 1"), W("2 2"), rep));
    out.push_back(check_identity(pre + "pairing_b4b5", W("3 2 1 2b 3"), W("2 2"), rep));
    out.push_back(check_identity(pre + "face4_element", W("2 3b 2b"), W("1b"), rep));
    out.push_back(check_identity(pre + "face7_element", W("2b 1 2"), W("3"), rep));
    out.push_back(check_identity(pre + "face6_element", W("2 2 3b 2 2"), W("2 1b 2b"), rep));
    // the face-5 element as printed and as a conjugation; equal since G2^4 = Id
    out.push_back(check_identity(pre + "face5_element_printed", W("2 2 1 2 2"), W("2b 3 2"), rep));
    out.push_back(check_identity(pre + "face5_element_conjugate", W("2 2 1 2b 2b"), W("2b 3 2"), rep));
  }
  if (rep.id == "rho3") {
    // generators M = A1 A3^-1, N = A1
    Word M = W("1 3b"), N = W("1");
    out.push_back(check_relation(pre + "m_order4", power(M, 4), rep));
    out.push_back(check_relation(pre + "mn_cubed", power(M * N, 3), rep));
    out.push_back(check_relation(pre + "mnm_cubed", power(M * N * M, 3), rep));
  }
  return out;
}

}  // namespace cruv
