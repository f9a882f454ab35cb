#include "cruv/cli.hpp"

#include <gmp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cruv/domainchk.hpp"
#include "cruv/isometry.hpp"
#include "cruv/meridian.hpp"
#include "cruv/tables.hpp"

namespace cruv {

namespace {

const DirichletData& dirichlet() {
  static const DirichletData d = build_dirichlet();
  return d;
}

const TriangleData& triangle() {
  static const TriangleData T = build_triangle(dirichlet());
  return T;
}

constexpr unsigned k2 = 0x1, k5 = 0x4, k7 = 0x8;

struct Entry {
  std::string suite;
  std::string id;  // reported when the entry is skipped
  unsigned radicands;
  std::function<std::vector<CheckResult>()> run;
};

template <class F>
Entry one(const std::string& suite, const std::string& id, unsigned radicands, F f) {
  return {suite, id, radicands, [f] { return std::vector<CheckResult>{f()}; }};
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    for (int k = 1; k <= 3; ++k) {
      auto rep = Representation::rho(k);
      e.push_back({"algebra", "relation." + rep.id, rep.radicands, [k] { return relation_suite(Representation::rho(k)); }});
    }
    e.push_back(one("algebra", "isometry.vertex_orbit", k7, [] { return verify_vertex_orbit(Representation::rho(2)); }));
    e.push_back(one("algebra", "isometry.conjugacies", k7, [] { return verify_conjugacies(); }));
    e.push_back(one("algebra", "isometry.kernel_generators", k7, [] { return verify_kernel_generators(); }));
    const auto& d = dirichlet;
    e.push_back(one("domain", "domain.face_lattice", k7, [d] { return verify_face_lattice(d()); }));
    e.push_back(one("domain", "domain.tangency_table", k7, [d] { return verify_tangency_table(d()); }));
    e.push_back(one("domain", "domain.side_pairings", k7, [d] { return verify_side_pairings(d()); }));
    e.push_back(one("domain", "domain.cycles", k7, [d] { return verify_cycles(d()); }));
    e.push_back(one("domain", "domain.torsion", k7, [d] { return verify_torsion(d()); }));
    e.push_back(one("domain", "domain.b8_trace", k2 | k7, [d] { return verify_b8_trace(d()); }));
    e.push_back(one("tables", "tables.witnesses", k7, [d] { return verify_witnesses(d()); }));
    e.push_back(one("tables", "tables.p2_gradients", k7, [d] { return verify_p2_gradients(d()); }));
    e.push_back(one("tables", "tables.torus_traces", k7, [d] { return verify_torus_traces(d()); }));
    e.push_back(one("tables", "tables.disk_boundary", k7, [d] { return verify_disk_boundary(d()); }));
    e.push_back(one("tables", "tables.b1b5", k7, [d] { return verify_b1b5(d()); }));
    e.push_back(one("tables", "tables.b1b7_traces", k7, [d] { return verify_b1b7_traces(d()); }));
    e.push_back(one("tables", "tables.b1_sphere_circles", k5 | k7, [d] { return verify_b1_sphere_circles(d()); }));
    e.push_back(one("tables", "meridian.sphere_traces", k5 | k7, [d] { return verify_sphere_traces(d(), triangle()); }));
    e.push_back(one("tables", "meridian.triangle_vertices", k5 | k7, [d] { return verify_triangle_vertices(d(), triangle()); }));
    e.push_back(one("meridian", "meridian.C_setup", k5 | k7, [d] { return verify_C_setup(d()); }));
    e.push_back(one("meridian", "meridian.C_B2_disk", k5 | k7, [d] { return verify_C_B2_disk(d()); }));
    e.push_back(one("meridian", "meridian.tau", k5 | k7, [d] { return verify_tau(d(), triangle()); }));
    e.push_back(one("meridian", "meridian.triangle_T", k5 | k7, [d] { return verify_triangle_T(d(), triangle()); }));
    e.push_back(one("meridian", "meridian.g2sq_two_points", k5 | k7,
                    [d] { return verify_g2sq_two_points(d(), triangle()); }));
    e.push_back(one("meridian", "meridian.g2sq_disjoint", k5 | k7,
                    [d] { return verify_g2sq_disjoint(d(), triangle()); }));
    return e;
  }();
  return entries;
}

std::vector<CheckResult> run_entry(const Entry& e, const FieldConfig& cfg) {
  if (e.radicands & ~cfg.radicands) {
    CheckResult r;
    r.id = e.id;
    r.anchor = "needs radicands " + radicands_str(e.radicands);
    r.status = Status::Skipped;
    r.note("skipped: configured radicands are " + radicands_str(cfg.radicands));
    return {r};
  }
  try {
    return e.run();
  } catch (const std::exception& ex) {
    CheckResult r;
    r.id = e.id;
    r.anchor = "setup of " + e.id;
    r.status = Status::Error;
    r.note(std::string("internal: ") + ex.what());
    return {r};
  }
}

json toolchain() {
  return {{"compiler", __VERSION__}, {"cxx", static_cast<long>(__cplusplus)}, {"gmp", gmp_version}};
}

}  // namespace

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

bool Report::ok() const { return count(Status::Fail) == 0 && count(Status::Error) == 0; }

bool Report::operator==(const Report& o) const { return suite == o.suite && checks == o.checks && config == o.config; }

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json summary = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"error", r.count(Status::Error)},
                  {"skipped", r.count(Status::Skipped)},
                  {"total", r.checks.size()}};
  return {{"schema", kReportSchema}, {"suite", r.suite}, {"config", r.config},
          {"checks", checks},        {"summary", summary}, {"ok", r.ok()}};
}

Report report_from_json(const json& j) {
  if (j.at("schema") != kReportSchema) throw Error(Err::Usage, "unknown report schema");
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "algebra", "domain", "tables", "meridian"};
  return names;
}

Report run_suite(const std::string& suite, const FieldConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(Err::Usage, "unknown suite '" + suite + "'");
  std::vector<const Entry*> todo;
  for (const auto& e : registry())
    if (suite == "all" || e.suite == suite) todo.push_back(&e);
  Report rep;
  rep.suite = suite;
  rep.config = {{"radicands", radicands_str(cfg.radicands)},
                {"max_precision_bits", cfg.max_precision_bits},
                {"toolchain", toolchain()}};
  std::mutex mu;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < todo.size();) {
      auto res = run_entry(*todo[i], cfg);
      std::lock_guard<std::mutex> lock(mu);
      for (auto& r : res) rep.checks.push_back(std::move(r));
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), todo.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return rep;
}

int exit_code(const Report& r) {
  if (r.count(Status::Error)) return 3;
  if (r.count(Status::Fail)) return 1;
  return 0;
}

// ---- figures

namespace {

using cd = std::complex<double>;

RealAlg exact_of(double v) { return RealAlg(Q(v)); }

// |f| at the decimals of pt, enclosed exactly
double residual(const MPoly& f, const std::vector<double>& pt) {
  std::vector<RealAlg> x;
  for (double v : pt) x.push_back(exact_of(v));
  RationalInterval iv = enclose_bits(f.eval(x), 80);
  Q a = abs(iv.lo), b = abs(iv.hi);
  return (a > b ? a : b).get_d();
}

double dval(const MPoly& f, const std::vector<double>& pt) {
  double s = 0;
  for (const auto& [m, c] : f.terms()) {
    double t = c.to_double();
    for (size_t i = 0; i < m.size(); ++i) t *= std::pow(pt[i], m[i]);
    s += t;
  }
  return s;
}

double turns(cd z) { return std::arg(z) / (2 * M_PI); }

const double kBound = std::ldexp(1.0, -40);

void expect_residuals(CurveSample& s) {
  double worst = 0;
  for (const auto& r : s.rows) worst = std::max(worst, r.residual);
  s.check.expect(worst <= kBound, "every row satisfies its equation within 2^-40");
  s.check.witness("max_residual", worst);
  s.check.witness("rows", s.rows.size());
}

// curves Re(mu z2) = nu on a Giraud torus via z2 = (nu +- i sqrt(|mu|^2 - nu^2)) / mu
void sample_torus(CurveSample& s, const std::string& name, const MPoly& f, int N) {
  MuNu mn = mu_nu(f);
  int segment = -1;
  for (int sg : {1, -1}) {
    bool open = false;
    for (int k = 0; k <= N; ++k) {
      double a = -0.5 + double(k) / N;
      cd z1 = std::polar(1.0, 2 * M_PI * a);
      std::vector<double> p{z1.real(), z1.imag(), 0, 0};
      cd mu(dval(mn.mu.re, p), dval(mn.mu.im, p));
      double nu = dval(mn.nu, p), disc = std::norm(mu) - nu * nu;
      if (disc < 0 || std::abs(mu) < 1e-12) {
        open = false;
        continue;
      }
      if (!open) ++segment;
      open = true;
      cd z2 = (nu + cd(0, sg * std::sqrt(disc))) / mu;
      p[2] = z2.real();
      p[3] = z2.imag();
      s.rows.push_back({name, sg > 0 ? "+" : "-", segment, {a, turns(z2)}, residual(f, p)});
    }
  }
  // parameter endpoints where the two branches meet
  try {
    MPoly h = in_first_circle(mn.discriminant(true));
    const auto& W = h.vars();
    MPoly x = MPoly::var(W, "x1"), y = MPoly::var(W, "y1"), one = MPoly::constant(W, 1);
    SolveOptions o;
    o.square_rules = {{"y1", one - x * x}};
    auto ends = solve_system({h, x * x + y * y - one}, {RationalInterval(Q(-1), Q(1)), RationalInterval(Q(-1), Q(1))}, o);
    for (const auto& e : ends.solutions) {
      double ex = e.exact ? (*e.exact)[0].to_double() : e.box[0].mid().get_d();
      double ey = e.exact ? (*e.exact)[1].to_double() : e.box[1].mid().get_d();
      std::vector<double> p{ex, ey, 0, 0};
      cd mu(dval(mn.mu.re, p), dval(mn.mu.im, p));
      if (std::abs(mu) < 1e-12) continue;
      cd z2 = dval(mn.nu, p) / mu;
      p[2] = z2.real();
      p[3] = z2.imag();
      s.rows.push_back({name, "endpoint", ++segment, {turns(cd(ex, ey)), turns(z2)}, residual(f, p)});
      if (e.exact) s.check.witness("endpoint_" + name + "_" + std::to_string(segment), json::array({to_json((*e.exact)[0]), to_json((*e.exact)[1])}));
    }
  } catch (const Error& e) {
    s.check.note(name + ": endpoints not computed (" + std::string(e.what()) + ")");
  }
}

CurveSample giraud_figure(const std::string& id, int j, int k, const std::vector<int>& others, int N) {
  const auto& d = dirichlet();
  CurveSample s;
  s.figure = id;
  s.columns = {"arg_z1_turns", "arg_z2_turns"};
  s.check = run_check("figure." + id, "trace curves on the B" + std::to_string(j) + " cap B" + std::to_string(k) +
                                          " Giraud torus", [&](CheckResult& r) {
    GiraudChart ch = d.chart(j, k);
    s.check = r;
    sample_torus(s, "boundary", norm_form(ch), N);
    for (int m : others) {
      MPoly f = trace_equation(ch, d.p0, d.rj(m));
      if (f.is_zero()) continue;
      sample_torus(s, "B" + std::to_string(m), f, N);
    }
    expect_residuals(s);
    r = s.check;
  });
  return s;
}

CurveSample figure8(int N) {
  const auto& d = dirichlet();
  CurveSample s;
  s.figure = "8";
  s.columns = {"theta_turns", "t1", "t2"};
  s.check = run_check("figure.8", "B2 and B8 traces on the B1 sphere project to tangent circles", [&](CheckResult& r) {
    s.check = r;
    const auto& V = sphere_vars();
    MPoly t1 = MPoly::var(V, "t1"), t2 = MPoly::var(V, "t2");
    auto k = [&](const RealAlg& c) { return MPoly::constant(V, c); };
    struct Circle {
      std::string name;
      double cx, cy;
      MPoly h;
    };
    MPoly a8 = t1 - k(rq(8, 7)), a2 = t1 + k(rq(9, 14)), b2 = t2 - k(rq(5, 14) * sq(7));
    std::vector<Circle> cs{{"h2", -9.0 / 14, 5 / (2 * std::sqrt(7.0)), a2 * a2 + b2 * b2 - k(rq(50, 49))},
                           {"h8", 8.0 / 7, 0, a8 * a8 + t2 * t2 - k(rq(50, 49))}};
    double rad = std::sqrt(50.0 / 49);
    for (const auto& c : cs)
      for (int i = 0; i <= N; ++i) {
        double th = double(i) / N;
        std::vector<double> p{c.cx + rad * std::cos(2 * M_PI * th), c.cy + rad * std::sin(2 * M_PI * th), 0};
        s.rows.push_back({c.name, "circle", 0, {th, p[0], p[1]}, residual(c.h, p)});
      }
    std::vector<RealAlg> q{rq(1, 4), rq(5, 28) * sq(7), RealAlg()};
    s.rows.push_back({"tangency", "point", 0, {0, q[0].to_double(), q[1].to_double()}, 0});
    auto circles = verify_b1_sphere_circles(d);
    s.check.absorb(circles);
    s.check.witness("tangency_point", circles.witnesses.at("tangency_point"));
    s.check.expect(cs[0].h.eval(q).is_zero() && cs[1].h.eval(q).is_zero(),
                   "tangency point (1/4, 5 sqrt7/28) lies on both circles exactly");
    expect_residuals(s);
    r = s.check;
  });
  return s;
}

CurveSample figure9(const std::string& id, int N) {
  const auto& T = triangle();
  CurveSample s;
  s.figure = id;
  s.columns = {"t1", "t2", "t3"};
  s.x = 0;
  s.y = id == "9a" ? 1 : 2;
  s.check = run_check("figure." + id, "critical points of the sphere traces lie outside T", [&](CheckResult& r) {
    s.check = r;
    double m = std::sqrt(5.0 / 7);
    for (int i = 0; i <= N; ++i) {
      double t3 = -m + 2 * m * i / N;
      auto p = tau0_point(t3);
      s.rows.push_back({"tau0", "side", 0, {p[0], p[1], p[2]}, residual(T.f[4], {p[0], p[1], p[2]})});
    }
    for (int mirror : {0, 1})
      for (int i = 0; i <= N; ++i) {
        auto p = tau2_point(-m + m * i / N);
        if (mirror) p[2] = -p[2];
        s.rows.push_back({mirror ? "tau1" : "tau2", "side", 1 + mirror, {p[0], p[1], p[2]},
                          residual(T.f[mirror ? 7 : 2], {p[0], p[1], p[2]})});
      }
    // sides are checked against their own equations; critical points are certified boxes
    expect_residuals(s);
    auto cps = critical_points(T);
    int seg = 3;
    for (int j = 1; j <= 8; ++j)
      for (const auto& b : cps[j]) {
        std::vector<double> p;
        for (int i = 0; i < 3; ++i) p.push_back(b.exact ? (*b.exact)[i].to_double() : b.box[i].mid().get_d());
        int side = triangle_side(T, b);
        s.check.expect(side != 1, "critical point of f" + std::to_string(j) + " is not inside T");
        s.rows.push_back({"f" + std::to_string(j), side == 0 ? "critical_on_boundary" : "critical", seg++, p, 0});
      }
    r = s.check;
  });
  return s;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string esc(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"4a", "4b", "7", "8", "9a", "9b"};
  return ids;
}

CurveSample sample_figure(const std::string& id, int samples) {
  if (samples < 16) throw Error(Err::Usage, "figures need at least 16 samples");
  if (id == "4a") return giraud_figure(id, 1, 2, {3, 4, 5, 6, 7, 8}, samples);
  if (id == "4b") return giraud_figure(id, 1, 7, {2, 3, 4, 5, 6, 8}, samples);
  if (id == "7") {
    CurveSample s = giraud_figure(id, 1, 7, {8}, samples);
    s.check.absorb(verify_b8_trace(dirichlet()));
    return s;
  }
  if (id == "8") return figure8(samples);
  if (id == "9a" || id == "9b") return figure9(id, samples);
  throw Error(Err::Usage, "unknown figure '" + id + "'");
}

std::string to_csv(const CurveSample& s) {
  std::ostringstream os;
  os << "figure,curve,branch,segment";
  for (const auto& c : s.columns) os << "," << c;
  os << ",precision\n";
  for (const auto& r : s.rows) {
    os << s.figure << "," << r.curve << "," << r.branch << "," << r.segment;
    for (double v : r.values) os << "," << num(v);
    os << "," << num(r.residual) << "\n";
  }
  return os.str();
}

std::string to_svg(const CurveSample& s) {
  const double W = 640, H = 640, M = 60;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& r : s.rows) {
    x0 = std::min(x0, r.values[s.x]);
    x1 = std::max(x1, r.values[s.x]);
    y0 = std::min(y0, r.values[s.y]);
    y1 = std::max(y1, r.values[s.y]);
  }
  if (s.rows.empty()) x0 = y0 = 0, x1 = y1 = 1;
  double span = std::max({x1 - x0, y1 - y0, 1e-9});
  auto px = [&](double v) { return M + (v - x0) / span * (W - 2 * M); };
  auto py = [&](double v) { return H - M - (v - y0) / span * (H - 2 * M); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f"};
  std::map<std::string, int> color;
  for (const auto& r : s.rows)
    if (!color.count(r.curve)) color[r.curve] = static_cast<int>(color.size()) % 9;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<rect x=\"" << M << "\" y=\"" << M << "\" width=\"" << W - 2 * M << "\" height=\"" << H - 2 * M
     << "\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 20 << "\" text-anchor=\"middle\" font-size=\"14\">"
     << esc(s.columns[s.x]) << "</text>\n";
  os << "<text x=\"20\" y=\"" << H / 2 << "\" font-size=\"14\" transform=\"rotate(-90 20 " << H / 2
     << ")\" text-anchor=\"middle\">" << esc(s.columns[s.y]) << "</text>\n";
  os << "<text x=\"" << M << "\" y=\"" << M - 10 << "\" font-size=\"12\">x " << num(x0) << " .. " << num(x0 + span)
     << ", y " << num(y0) << " .. " << num(y0 + span) << "</text>\n";
  // polylines join consecutive rows of one curve, branch and segment; a jump of half the span breaks them
  size_t i = 0;
  while (i < s.rows.size()) {
    const auto& r = s.rows[i];
    const char* col = palette[color[r.curve]];
    bool point = r.branch == "point" || r.branch == "endpoint" || r.branch.rfind("critical", 0) == 0;
    if (point) {
      os << "<circle cx=\"" << px(r.values[s.x]) << "\" cy=\"" << py(r.values[s.y]) << "\" r=\"4\" fill=\"" << col
         << "\"><title>" << esc(r.curve + " " + r.branch) << "</title></circle>\n";
      ++i;
      continue;
    }
    size_t j = i;
    std::ostringstream pts;
    while (j < s.rows.size() && s.rows[j].curve == r.curve && s.rows[j].branch == r.branch &&
           s.rows[j].segment == r.segment) {
      if (j > i && (std::abs(s.rows[j].values[s.x] - s.rows[j - 1].values[s.x]) > span / 2 ||
                    std::abs(s.rows[j].values[s.y] - s.rows[j - 1].values[s.y]) > span / 2))
        pts << "\"/>\n<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"";
      pts << px(s.rows[j].values[s.x]) << "," << py(s.rows[j].values[s.y]) << " ";
      ++j;
    }
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" points=\"" << pts.str() << "\"/>\n";
    i = j;
  }
  int row = 0;
  for (const auto& [name, c] : color)
    os << "<text x=\"" << W - M + 5 << "\" y=\"" << M + 15 * ++row << "\" font-size=\"11\" fill=\"" << palette[c]
       << "\">" << esc(name) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

HeisenbergPoint heisenberg_coords(const HVector& v) {
  if (is_zero(v)) throw Error(Err::DegenerateInput, "zero vector");
  if (!hnorm(v).is_zero()) throw Error(Err::NotNull, "vector is not null: " + str(v));
  HeisenbergPoint p;
  if (v[2].is_zero()) {
    p.at_infinity = true;
    return p;
  }
  HVector w = normalized(v, 2);
  p.z = w[1];
  p.t = RealAlg(2) * w[0].im;
  return p;
}

HVector heisenberg_lift(const HeisenbergPoint& p) {
  if (p.at_infinity) return {CxAlg(1), CxAlg(), CxAlg()};
  return {CxAlg(-p.z.norm2() * rq(1, 2), p.t * rq(1, 2)), p.z, CxAlg(1)};
}

json representation_json(const std::string& name) {
  auto rep = Representation::by_name(name);
  json j = {{"id", rep.id}, {"radicands", radicands_str(rep.radicands)}};
  const char* gens[] = {"G1", "G2", "G3"};
  for (int k = 1; k <= 3; ++k)
    j["generators"][gens[k - 1]] = {{"matrix", to_json(rep.gen(k))}, {"class", classify(rep.gen(k)).str()}};
  json rel = json::array();
  for (const auto& c : relation_suite(rep)) rel.push_back({{"check_id", c.id}, {"status", status_name(c.status)}});
  j["relations"] = rel;
  if (rep.id == "rho2") {
    json verts = json::object();
    auto pts = vertex_points(rep);
    for (size_t i = 0; i < pts.size(); ++i) {
      auto h = heisenberg_coords(pts[i]);
      json hv = h.at_infinity ? json("infinity") : json{{"z", to_json(h.z)}, {"t", to_json(h.t)}};
      verts[vertex_table()[i].name] = {{"vector", to_json(pts[i])}, {"heisenberg", hv}};
    }
    j["vertices"] = verts;
  }
  return j;
}

}  // namespace cruv
