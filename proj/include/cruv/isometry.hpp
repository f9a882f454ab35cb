#pragma once

#include <string>
#include <vector>

#include "cruv/check.hpp"
#include "cruv/hermlin.hpp"

namespace cruv {

struct Representation {
  std::string id;  // rho1, rho2, rho3
  HMatrix G1, G2, G3;
  unsigned radicands = 0;  // mask of radicands the entries need

  // G2 is derived as [G3, G1^-1] = G3 G1^-1 G3^-1 G1
  static Representation make(const std::string& id, const HMatrix& g1, const HMatrix& g3, unsigned radicands);
  static Representation rho(int k);
  static Representation by_name(const std::string& name);
  const HMatrix& gen(int k) const;
};

// letters +-1, +-2, +-3; negative means inverse
using Word = std::vector<int>;

// tokens like "1 2 3b" or "1 -2"; a trailing b (bar) inverts
Word parse_word(const std::string& s);
std::string word_str(const Word& w);
Word inverse(const Word& w);
Word operator*(Word a, const Word& b);
Word power(const Word& w, int n);

HMatrix eval_word(const Word& w, const Representation& rep);
// pass iff eval_word(w) is projectively the identity
CheckResult check_relation(const std::string& id, const Word& w, const Representation& rep);
// pass iff eval_word(lhs) and eval_word(rhs) are projectively equal
CheckResult check_identity(const std::string& id, const Word& lhs, const Word& rhs, const Representation& rep);

struct IsometryClass {
  enum Kind { Identity, RegularElliptic, ComplexReflectionPoint, ComplexReflectionLine, UnipotentParabolic,
              EllipticParabolic, Loxodromic };
  Kind kind = Identity;
  int order = 0;  // projective order for elliptic kinds, 0 when infinite

  std::string str() const;
  bool operator==(const IsometryClass& o) const { return kind == o.kind && order == o.order; }
};

// smallest n in 1..bound with m^n projectively trivial, 0 if none
int projective_order(const HMatrix& m, int bound);
IsometryClass classify(const HMatrix& m, int bound = 24);
// char_poly == (t-1)^3 and (M - Id)^3 == 0
bool is_unipotent(const HMatrix& m);
// unique null eigenvector of a nontrivial unipotent, third coordinate scaled to 1 when nonzero
HVector parabolic_fixed_point(const HMatrix& m);
// Goldman's discriminant on the trace of the det-normalized matrix; needs |det| = 1
RealAlg goldman_discriminant(const HMatrix& m);

// fixed data of the domain construction
HVector center_p0();
HMatrix involution_I();
HMatrix conjugator_P();

struct VertexRow {
  std::string name;     // p1..p4, q1..q4
  Word stabilizer;      // unipotent fixing the vertex
  int tangent[2];       // bisector indices with tangent spinal spheres
  int others[2];        // further bisectors through the vertex
};
const std::vector<VertexRow>& vertex_table();
// vertices from the G2-orbit of the fixed points of G1 and G2^-1 G3
std::vector<HVector> vertex_points(const Representation& rep);

CheckResult verify_vertex_orbit(const Representation& rep);
CheckResult verify_conjugacies();
CheckResult verify_kernel_generators();
// knot-group relations for any rep, plus the presentation relations for rho2/rho3
std::vector<CheckResult> relation_suite(const Representation& rep);

}  // namespace cruv
