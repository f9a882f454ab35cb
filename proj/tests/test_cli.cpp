#include "doctest.h"
#include "support.hpp"

#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "cruv/cli.hpp"
#include "cruv/isometry.hpp"

using namespace cruv;

namespace {

int run_cli(const std::string& args) {
  int st = std::system((std::string(CRUV_BIN) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("algebra and tables suites pass") {
  for (const char* s : {"algebra", "tables"}) {
    Report r = run_suite(s);
    for (const auto& c : r.checks)
      if (!c.ok()) MESSAGE(c.id);
    CHECK(r.ok());
    CHECK(exit_code(r) == 0);
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  }
}

TEST_CASE("unknown suite is a usage error") {
  CHECK_THROWS_AS(run_suite("nope"), Error);
}

TEST_CASE("radicand restriction skips checks outside the field") {
  FieldConfig cfg;
  cfg.radicands = parse_radicands("3");
  Report r = run_suite("all", cfg);
  int ran = 0;
  for (const auto& c : r.checks) {
    if (c.status == Status::Skipped) continue;
    ++ran;
    CHECK(c.id.rfind("relation.rho1.", 0) == 0);
    CHECK(c.ok());
  }
  CHECK(ran > 0);
  CHECK(r.count(Status::Skipped) > 0);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("report serialization round-trips") {
  Report r = run_suite("tables");
  json j = json::parse(to_json(r).dump());
  CHECK(j.at("schema") == kReportSchema);
  CHECK(j.at("summary").at("total") == r.checks.size());
  Report back = report_from_json(j);
  CHECK(back == r);
  // exact witnesses parse back to the same field elements
  for (const auto& c : back.checks)
    if (c.id == "tables.witnesses") CHECK(real_from_json(c.witnesses.at("X12_norm")) == rq(-3, 4));
}

TEST_CASE("heisenberg_coords examples") {
  auto o = heisenberg_coords({CxAlg(), CxAlg(), CxAlg(1)});
  CHECK_FALSE(o.at_infinity);
  CHECK(o.z == CxAlg());
  CHECK(o.t.is_zero());
  CHECK(heisenberg_coords({CxAlg(1), CxAlg(), CxAlg()}).at_infinity);
  auto q1 = heisenberg_coords({CxAlg(rq(-1, 2), rq(1, 2) * sq(7)), CxAlg(1), CxAlg(1)});
  CHECK(q1.z == CxAlg(1));
  CHECK(q1.t == sq(7));
  try {
    heisenberg_coords({CxAlg(1), CxAlg(1), CxAlg(1)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::NotNull);
  }
}

TEST_CASE("property: heisenberg_coords inverts the lift") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    HeisenbergPoint p;
    p.z = testing::random_cx(rng);
    p.t = testing::random_real(rng);
    HVector v = heisenberg_lift(p);
    CHECK(hnorm(v).is_zero());
    CxAlg s = testing::random_cx(rng);
    if (s.is_zero()) s = CxAlg(1);
    auto back = heisenberg_coords(s * v);
    CHECK(back.z == p.z);
    CHECK(back.t == p.t);
    CHECK(projective_equal(heisenberg_lift(back), v));
  }
  for (const auto& v : vertex_points(Representation::rho(2))) CHECK(projective_equal(heisenberg_lift(heisenberg_coords(v)), v));
}

TEST_CASE("figures need at least 16 samples") {
  CHECK_THROWS_AS(sample_figure("4a", 0), Error);
  CHECK_THROWS_AS(sample_figure("4a", 15), Error);
  CHECK_THROWS_AS(sample_figure("5", 32), Error);
}

TEST_CASE("property: every figure row satisfies its equation") {
  for (const auto& id : figure_ids()) {
    INFO(id);
    CurveSample s = sample_figure(id, 16);
    CHECK(s.check.ok());
    CHECK_FALSE(s.rows.empty());
    for (const auto& r : s.rows) {
      CHECK(r.values.size() == s.columns.size());
      CHECK(r.residual <= std::ldexp(1.0, -40));
    }
    std::string csv = to_csv(s);
    CHECK(csv.rfind("figure,curve,branch,segment," + s.columns[0], 0) == 0);
    std::string svg = to_svg(s);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("figure 8 tangency point is exact") {
  CurveSample s = sample_figure("8", 32);
  const auto& w = s.check.witnesses.at("tangency_point");
  CHECK(real_from_json(w.at(0)) == rq(1, 4));
  CHECK(real_from_json(w.at(1)) == rq(5, 28) * sq(7));
}

TEST_CASE("figure 7 endpoints") {
  CurveSample s = sample_figure("7", 32);
  std::vector<double> ends;
  for (const auto& r : s.rows)
    if (r.curve == "B8" && r.branch == "endpoint") ends.push_back(r.values[0]);
  REQUIRE(ends.size() == 2);
  std::sort(ends.begin(), ends.end());
  CHECK(ends[0] == doctest::Approx(-0.07745991).epsilon(1e-7));
  CHECK(ends[1] == doctest::Approx(0.42254009).epsilon(1e-7));
}

TEST_CASE("command line exit codes") {
  CHECK(run_cli("verify --suite algebra") == 0);
  CHECK(run_cli("verify --suite meridian") == 1);
  CHECK(run_cli("verify --suite bogus") == 2);
  CHECK(run_cli("figure --id 4a --samples 8") == 2);
  CHECK(run_cli("figure --id 8 --samples 16 --format svg") == 0);
  CHECK(run_cli("rep --id rho3") == 0);
  CHECK(run_cli("rep --id rho9") == 2);
  CHECK(run_cli("--max-precision-bits 8 verify --suite algebra") == 2);
  CHECK(run_cli("") == 2);
}
