#include "doctest.h"
#include "support.hpp"

#include "cruv/hermlin.hpp"

using namespace cruv;

namespace {

CxAlg c(long n, long d, long in = 0, long id = 1) {
  // n/d + (in/id) i sqrt7
  return {rq(n, d), rq(in, id) * sq(7)};
}

const HVector p0{c(1, 1), c(-3, 4, -1, 4), c(-1, 1)};

HMatrix G1() {
  return HMatrix::from({{{c(1, 1), c(1, 1), c(-1, 2, -1, 2)}, {c(0, 1), c(1, 1), c(-1, 1)}, {c(0, 1), c(0, 1), c(1, 1)}}});
}

HMatrix G3() {
  return HMatrix::from({{{c(1, 1), c(0, 1), c(0, 1)}, {c(-1, 1), c(1, 1), c(0, 1)}, {c(-1, 2, 1, 2), c(1, 1), c(1, 1)}}});
}

}  // namespace

TEST_CASE("herm examples") {
  CHECK(herm(p0, p0) == CxAlg(-1));
  HVector e1{CxAlg(1), CxAlg(), CxAlg()};
  CHECK(herm(e1, e1).is_zero());
}

TEST_CASE("box product reproduces the displayed X12 and X13") {
  HVector r1 = G1() * p0, r2 = G3().inverse() * p0;
  HMatrix G2 = G3() * G1().inverse() * G3().inverse() * G1();
  HVector r3 = G2 * r1;
  HVector x12 = box(p0 - r1, p0 - r2);
  CHECK(x12[0] == c(1, 4, 1, 4));
  CHECK(x12[1] == c(3, 8, -1, 8));
  CHECK(x12[2] == c(-1, 4, -1, 4));
  CHECK(herm(x12, x12) == CxAlg(rq(-3, 4)));
  HVector x13 = box(p0 - r1, p0 - r3);
  CHECK(x13[0] == c(5, 8, 1, 8));
  CHECK(herm(x13, x13) == CxAlg(rq(-1, 2)));
  CHECK_THROWS_AS(box(p0, CxAlg(3) * p0), Error);
}

TEST_CASE("char_poly and eigenvectors") {
  auto id = char_poly(HMatrix::identity());
  CHECK(id.c[2] == CxAlg(-3));
  CHECK(id.c[1] == CxAlg(3));
  CHECK(id.c[0] == CxAlg(-1));
  CHECK(char_poly(G1()) == id);
  HMatrix G2 = G3() * G1().inverse() * G3().inverse() * G1();
  CHECK_FALSE(char_poly(G2).discriminant().is_zero());
  HVector v = eigenvector_for(G1(), CxAlg(1));
  CHECK(projective_equal(v, HVector{CxAlg(1), CxAlg(), CxAlg()}));
  HVector q1 = eigenvector_for(G2.inverse() * G3(), CxAlg(1));
  CHECK(projective_equal(q1, HVector{c(-1, 2, 1, 2), c(1, 1), c(1, 1)}));
  CHECK_THROWS_AS(eigenvector_for(G1(), CxAlg(2)), Error);
  CHECK_FALSE(is_zero(eigenvector_for(HMatrix::identity(), CxAlg(1))));
}

TEST_CASE("projective equality examples") {
  HMatrix G2 = G3() * G1().inverse() * G3().inverse() * G1();
  HMatrix g12 = G1() * G2;
  CHECK(projective_equal(g12 * g12 * g12, HMatrix::identity()));
  CHECK_FALSE(projective_equal(G2, HMatrix::identity()));
  CHECK(projective_equal(G2, CxAlg(7) * G2));
}

TEST_CASE("property: hermitian symmetry, orthogonality and form preservation") {
  std::mt19937 rng(3);
  auto J = HermitianForm::standard();
  CHECK(J.preserved_by(G1()));
  CHECK(J.preserved_by(G3()));
  for (int n = 0; n < 1000; ++n) {
    HVector z{testing::random_cx(rng, 0xA), testing::random_cx(rng, 0xA), testing::random_cx(rng, 0xA)};
    HVector w{testing::random_cx(rng, 0xA), testing::random_cx(rng, 0xA), testing::random_cx(rng, 0xA)};
    CHECK(herm(z, w) - herm(w, z).conj() == CxAlg());
    CHECK(J(z, w) == herm(z, w));
    if (n % 5 == 0 && !projective_equal(z, w) && !is_zero(z) && !is_zero(w)) {
      HVector b = box(z, w);
      CHECK(herm(b, z).is_zero());
      CHECK(herm(b, w).is_zero());
      CxAlg l = testing::random_cx(rng, 0xA);
      if (!l.is_zero()) {
        HVector bl = box(l * z, w);
        CHECK(projective_equal(bl, b));
        CHECK(bl == l.conj() * b);
      }
    }
  }
}

TEST_CASE("property: projective equality is an equivalence on random triples") {
  std::mt19937 rng(5);
  for (int n = 0; n < 50; ++n) {
    HMatrix m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = testing::random_cx(rng, 0x8);
    CxAlg a = testing::random_cx(rng, 0x8), b = testing::random_cx(rng, 0x8);
    if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
    HMatrix n1 = a * m, n2 = b * n1;
    CHECK(projective_equal(m, m));
    CHECK(projective_equal(m, n1) == projective_equal(n1, m));
    CHECK((projective_equal(m, n1) && projective_equal(n1, n2)) <= projective_equal(m, n2));
  }
}
