#include "doctest.h"
#include "support.hpp"

#include "cruv/isometry.hpp"

using namespace cruv;

namespace {

CxAlg c7(long n, long d, long in = 0, long id = 1) { return {rq(n, d), rq(in, id) * sq(7)}; }

}  // namespace

TEST_CASE("eval_word") {
  auto rho2 = Representation::rho(2);
  CHECK(eval_word({}, rho2) == HMatrix::identity());
  // r4 = G2 G3^-1 p0
  HVector r4 = eval_word(parse_word("2 3b"), rho2) * center_p0();
  CHECK(projective_equal(r4, HVector{c7(9, 4, -1, 4), c7(-7, 4, -1, 4), CxAlg(-1)}));
  CHECK(rho2.G2(0, 0) == CxAlg(2));
  CHECK(rho2.G2(0, 1) == c7(3, 2, -1, 2));
  CHECK(rho2.G2(0, 2) == CxAlg(-1));
  CHECK(rho2.G2 == eval_word(parse_word("3 1b 3b 1"), rho2));
}

TEST_CASE("words parse and print") {
  CHECK(parse_word("1 2 3b") == Word{1, 2, -3});
  CHECK(parse_word("-2") == Word{-2});
  CHECK(word_str(parse_word("2b 3 2")) == "2b 3 2");
  CHECK(inverse(parse_word("1 2b")) == parse_word("2 1b"));
  CHECK_THROWS_AS(parse_word("4"), Error);
  CHECK_THROWS_AS(parse_word("x"), Error);
}

TEST_CASE("check_relation") {
  auto rho2 = Representation::rho(2);
  CHECK(check_relation("g2^4", power(parse_word("2"), 4), rho2).ok());
  CHECK(check_relation("pairing", parse_word("3 1 2 1 2b 2b"), rho2).ok());
  CHECK_FALSE(check_relation("neg", parse_word("1 2 3b"), rho2).ok());
  CHECK_FALSE(check_relation("order3 not 1", parse_word("1 2"), rho2).ok());
}

TEST_CASE("relation suites pass for every representation") {
  for (int k = 1; k <= 3; ++k) {
    auto rep = Representation::rho(k);
    for (const auto& r : relation_suite(rep)) {
      INFO(r.id);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("classify") {
  auto rho2 = Representation::rho(2);
  CHECK(classify(rho2.G2) == IsometryClass{IsometryClass::RegularElliptic, 4});
  CHECK(classify(rho2.G2.pow(2)).kind == IsometryClass::ComplexReflectionPoint);
  CHECK(classify(rho2.G1 * rho2.G2) == IsometryClass{IsometryClass::RegularElliptic, 3});
  CHECK(classify(rho2.G1 * rho2.G2 * rho2.G2) == IsometryClass{IsometryClass::RegularElliptic, 3});
  CHECK(classify(rho2.G1).kind == IsometryClass::UnipotentParabolic);
  CHECK(classify(HMatrix::identity()).kind == IsometryClass::Identity);
  HMatrix lox;
  lox(0, 0) = CxAlg(2);
  lox(1, 1) = CxAlg(1);
  lox(2, 2) = CxAlg(Q(1, 2));
  CHECK(classify(lox).kind == IsometryClass::Loxodromic);
  CHECK(classify(rho2.G3 * rho2.G1).kind == IsometryClass::UnipotentParabolic);
  // projective invariance under unit scalars of the field
  CHECK(classify(CxAlg(-1) * rho2.G2) == classify(rho2.G2));
  CHECK(classify(CxAlg::I() * rho2.G2) == classify(rho2.G2));
  CHECK(classify(CxAlg::I() * rho2.G1).kind == IsometryClass::UnipotentParabolic);
}

TEST_CASE("parabolic fixed points") {
  auto rho2 = Representation::rho(2);
  CHECK(parabolic_fixed_point(rho2.G1) == HVector{CxAlg(1), CxAlg(), CxAlg()});
  HVector q1 = parabolic_fixed_point(rho2.G2.inverse() * rho2.G3);
  CHECK(q1 == HVector{c7(-1, 2, 1, 2), CxAlg(1), CxAlg(1)});
  HVector q4 = parabolic_fixed_point(rho2.G3 * rho2.G1);
  auto pts = vertex_points(rho2);
  CHECK(projective_equal(q4, pts[7]));
  CHECK(projective_equal(q4, rho2.G2 * pts[6]));
  CHECK_THROWS_AS(parabolic_fixed_point(rho2.G2), Error);
  CHECK_THROWS_AS(parabolic_fixed_point(HMatrix::identity()), Error);
  for (const auto& row : vertex_table()) {
    HMatrix u = eval_word(row.stabilizer, rho2);
    HVector v = parabolic_fixed_point(u);
    CHECK(hnorm(v).is_zero());
    CHECK(projective_equal(u * v, v));
  }
}

TEST_CASE("domain checks") {
  CHECK(verify_vertex_orbit(Representation::rho(2)).ok());
  auto conj = verify_conjugacies();
  INFO(conj.details.size());
  CHECK(conj.ok());
  CHECK(verify_kernel_generators().ok());
  CHECK(verify_vertex_orbit(Representation::rho(1)).status == Status::Error);
}

TEST_CASE("property: generators preserve the form and are unipotent") {
  auto J = HermitianForm::standard();
  for (int k = 1; k <= 3; ++k) {
    auto rep = Representation::rho(k);
    CHECK(J.preserved_by(rep.G1));
    CHECK(J.preserved_by(rep.G2));
    CHECK(J.preserved_by(rep.G3));
    CHECK(is_unipotent(rep.G1));
    CHECK(is_unipotent(rep.G3));
  }
}

TEST_CASE("property: random words preserve the form and classify consistently") {
  std::mt19937_64 rng(7);
  auto rho2 = Representation::rho(2);
  auto J = HermitianForm::standard();
  for (int i = 0; i < 40; ++i) {
    Word w;
    int len = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < len; ++j) {
      int l = 1 + static_cast<int>(rng() % 3);
      w.push_back(rng() % 2 ? l : -l);
    }
    HMatrix m = eval_word(w, rho2);
    CHECK(J.preserved_by(m));
    IsometryClass a, b;
    bool threw = false;
    try {
      a = classify(m);
      b = classify(CxAlg::I() * m);
    } catch (const Error&) {
      threw = true;
    }
    if (!threw) CHECK(a == b);
  }
}
