#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cruv/cli.hpp"
#include "cruv/domainchk.hpp"
#include "cruv/isometry.hpp"
#include "cruv/meridian.hpp"
#include "cruv/tables.hpp"

using namespace cruv;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> reasons;

  void need(bool cond, const std::string& why) {
    if (!cond) {
      pass = false;
      reasons.push_back(why);
    }
  }
  void checks(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
      if (r.ok()) continue;
      pass = false;
      std::string why = r.id + " " + status_name(r.status);
      for (const auto& d : r.details)
        if (d.rfind("FAILED", 0) == 0 || r.status == Status::Error) why += "; " + d;
      reasons.push_back(why);
    }
  }
};

int run(const std::string& cmd) {
  int st = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

const DirichletData& data() {
  static const DirichletData d = build_dirichlet();
  return d;
}

const TriangleData& triangle() {
  static const TriangleData T = build_triangle(data());
  return T;
}

Outcome exact_identities() {
  Outcome o;
  o.checks({verify_witnesses(data()), verify_C_setup(data()), verify_p2_gradients(data())});
  return o;
}

Outcome relations() {
  Outcome o;
  o.checks(relation_suite(Representation::rho(2)));
  o.checks(relation_suite(Representation::rho(3)));
  o.checks({verify_conjugacies(), verify_kernel_generators()});
  return o;
}

Outcome tables() {
  const auto& d = data();
  Outcome o;
  o.checks({verify_torus_traces(d), verify_sphere_traces(d, triangle()), verify_triangle_vertices(d, triangle()),
            verify_b1b5(d), verify_b1b7_traces(d), verify_C_B2_disk(d), verify_b1_sphere_circles(d), verify_disk_boundary(d)});
  return o;
}

Outcome certificates() {
  const auto& d = data();
  Outcome o;
  o.checks({verify_b1b5(d), verify_b1b7_traces(d), verify_tangency_table(d)});
  return o;
}

Outcome solution_counts() {
  const auto& d = data();
  Outcome o;
  o.checks({verify_b8_trace(d), verify_C_B2_disk(d), verify_tau(d, triangle()), verify_triangle_T(d, triangle()),
            verify_g2sq_two_points(d, triangle())});
  return o;
}

Outcome properties() {
  Outcome o;
  for (const char* bin : {TEST_NUMFIELD, TEST_HERMLIN, TEST_POLYSYS, TEST_ISOMETRY, TEST_BISECTOR}) {
    std::string cmd = std::string(bin) + " --test-case='property*'";
    o.need(run(cmd) == 0, std::string("property cases failed in ") + bin);
  }
  return o;
}

Outcome end_to_end() {
  Outcome o;
  std::string report = "acceptance_report.json", fig = "acceptance_fig8.json";
  auto t0 = std::chrono::steady_clock::now();
  int code = run(std::string(CRUV_BIN) + " verify --suite all --json " + report);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.need(secs < 120, "verify --suite all took " + std::to_string(secs) + " s");
  if (code != 0) {
    std::string why = "verify --suite all exited " + std::to_string(code);
    std::ifstream f(report);
    if (f) {
      json j = json::parse(f);
      for (const auto& c : j.at("checks"))
        if (c.at("status") != "pass" && c.at("status") != "skipped") why += "; " + c.at("check_id").get<std::string>();
    }
    o.need(false, why);
  }
  o.need(run(std::string(CRUV_BIN) + " figure --id 8 --samples 64 --out acceptance_fig8.csv --json " + fig) == 0,
         "figure --id 8 failed");
  std::ifstream f(fig);
  if (!f) {
    o.need(false, "figure report missing");
    return o;
  }
  json j = json::parse(f);
  const auto& w = j.at("checks").at(0).at("exact_witnesses").at("tangency_point");
  o.need(real_from_json(w.at(0)) == rq(1, 4) && real_from_json(w.at(1)) == rq(5, 28) * sq(7),
         "tangency witness is not (1/4, 5 sqrt7/28)");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int n;
    std::string what;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> crit{
      {1, "exact identities", 1, exact_identities},
      {2, "relation suite", 1, relations},
      {3, "table reproduction", 5, tables},
      {4, "emptiness and tangency certificates", 10, certificates},
      {5, "solution-count certifications", 60, solution_counts},
      {6, "property suites", 600, properties},
      {7, "end-to-end command line", 120, end_to_end},
  };
  // shared data is built once and timed separately
  auto s0 = std::chrono::steady_clock::now();
  triangle();
  std::cout << "setup " << std::fixed << std::setprecision(3)
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count()
            << " s  Dirichlet data and triangle T\n";
  int failed = 0;
  for (const auto& c : crit) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("internal: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.need(secs < c.budget_s, "over the " + std::to_string(c.budget_s) + " s budget");
    failed += !o.pass;
    std::cout << "criterion " << c.n << " " << (o.pass ? "PASS" : "FAIL") << " " << std::fixed << std::setprecision(3)
              << secs << " s  " << c.what << "\n";
    for (const auto& r : o.reasons) std::cout << "    " << r << "\n";
  }
  std::cout << (crit.size() - failed) << "/" << crit.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
