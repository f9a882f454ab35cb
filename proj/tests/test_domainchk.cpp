#include "doctest.h"

#include "cruv/domainchk.hpp"

using namespace cruv;

namespace {

const DirichletData& data() {
  static const DirichletData d = build_dirichlet();
  return d;
}

void show(const CheckResult& r) {
  for (const auto& s : r.details) MESSAGE(s);
}

}  // namespace

TEST_CASE("build_dirichlet") {
  const auto& d = data();
  CHECK(hnorm(d.p0) == hnorm(d.rj(3)));
  CHECK(d.rj(6) == eval_word(parse_word("2 2 3b 2 2"), d.rep) * d.p0);
  for (int j = 1; j <= 8; ++j) {
    CHECK(g2_index(g2_index(g2_index(g2_index(j)))) == j);
    CHECK(i_index(i_index(j)) == j);
  }
}

TEST_CASE("tangency table") {
  const auto& d = data();
  auto t = verify_tangency_table(d);
  show(t);
  CHECK(t.ok());
  CHECK(tangency_row(d, "p1", parse_word("1"), 1, 4).ok());
  CHECK(tangency_row(d, "q2", parse_word("1b 2"), 4, 7).ok());
  CHECK_FALSE(tangency_row(d, "p1", parse_word("1"), 1, 5).ok());
}

TEST_CASE("side pairings, cycles, torsion") {
  const auto& d = data();
  auto s = verify_side_pairings(d);
  show(s);
  CHECK(s.ok());
  auto c = verify_cycles(d);
  show(c);
  CHECK(c.ok());
  auto t = verify_torsion(d);
  show(t);
  CHECK(t.ok());
}

TEST_CASE("B8 trace on the B1 cap B7 torus") {
  auto r = verify_b8_trace(data());
  show(r);
  CHECK(r.ok());
}

TEST_CASE("face lattice") {
  FaceLattice L;
  auto r = verify_face_lattice(data(), &L);
  show(r);
  CHECK(r.ok());
  CHECK(L.neighbors[1] == std::set<int>{2, 3, 7, 8});
  CHECK(L.vertices[1] == std::set<std::string>{"p1", "p2", "q3", "q4"});
  for (int j = 1; j <= 8; ++j) CHECK(L.vertices[j].size() == 4);
}
