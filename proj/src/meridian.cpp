#include "cruv/meridian.hpp"

#include <cmath>
#include <sstream>

namespace cruv {

namespace {

CxAlg c7(long n, long d, long in = 0, long id = 1) { return {rq(n, d), rq(in, id) * sq(7)}; }

RealAlg inv_sqrt5() { return sq(5).inverse(); }
RealAlg sqrt5_7() { return sq(35) * rq(1, 7); }

MPoly sv(const char* name) { return MPoly::var(sphere_vars(), name); }
MPoly sk(const RealAlg& c) { return MPoly::constant(sphere_vars(), c); }

MPoly sphere_eq() {
  MPoly t1 = sv("t1"), t2 = sv("t2"), t3 = sv("t3");
  return t1 * t1 + t2 * t2 + t3 * t3 - sk(1);
}

std::vector<RationalInterval> sphere_box() { return std::vector<RationalInterval>(3, RationalInterval(Q(-1), Q(1))); }

SolveOptions sphere_options(const TriangleData& T) {
  SolveOptions o;
  MPoly t1 = sv("t1"), t2 = sv("t2");
  o.square_rules = {{"t3", sk(1) - t1 * t1 - t2 * t2}};
  for (const auto& v : T.vertices) o.hints.push_back(v.t);
  o.hints.push_back({RealAlg(1), RealAlg(0), RealAlg(0)});
  o.hints.push_back({RealAlg(-1), RealAlg(0), RealAlg(0)});
  o.width = Q(1, 1 << 30);
  return o;
}

std::vector<RationalInterval> torus_box() { return std::vector<RationalInterval>(4, RationalInterval(Q(-1), Q(1))); }

SolveOptions torus_options() {
  const auto& V = torus_vars();
  SolveOptions o;
  MPoly one = MPoly::constant(V, 1);
  MPoly x1 = MPoly::var(V, "x1"), x2 = MPoly::var(V, "x2");
  o.square_rules = {{"y1", one - x1 * x1}, {"y2", one - x2 * x2}};
  o.width = Q(1, 1 << 30);
  return o;
}

std::vector<double> mids(const SolutionBox& s) {
  std::vector<double> v;
  if (s.exact)
    for (const auto& x : *s.exact) v.push_back(x.to_double());
  else
    for (const auto& iv : s.box) v.push_back(iv.mid().get_d());
  return v;
}

json box_json(const SolutionBox& s) {
  json j = json::array();
  if (s.exact)
    for (const auto& v : *s.exact) j.push_back(to_json(v));
  else
    for (const auto& iv : s.box) j.push_back(to_json(iv));
  return j;
}

bool near(double a, double b) { return std::abs(a - b) < 1e-6; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

// Re(a + b z1 + c conj(z1)) in the torus ring
CPoly affine_z1(const CxAlg& a, const CxAlg& b, const CxAlg& c) {
  const auto& V = torus_vars();
  CPoly z1 = CPoly::unit(V, "x1", "y1");
  return CPoly::constant(V, a) + b * z1 + c * z1.conj();
}

int vertex_named(const TriangleData& T, const SolutionBox& s) {
  if (!s.exact) return -1;
  for (int i = 0; i < 3; ++i)
    if (*s.exact == T.vertices[i].t) return i;
  return -1;
}

// square system for critical points of f on the unit sphere
std::vector<MPoly> lagrange_system(const MPoly& f) {
  std::vector<std::string> L{"t1", "t2", "t3", "lam"};
  MPoly F = f.in_vars(L), lam = MPoly::var(L, "lam");
  std::vector<MPoly> sys;
  for (int i = 0; i < 3; ++i) sys.push_back(F.deriv(i) - RealAlg(2) * lam * MPoly::var(L, L[i]));
  MPoly g = sphere_eq().in_vars(L);
  sys.push_back(g);
  return sys;
}

std::vector<RationalInterval> lagrange_box() {
  auto b = sphere_box();
  b.push_back(RationalInterval(Q(-256), Q(256)));
  return b;
}

SolveOptions lagrange_options() {
  SolveOptions o;
  o.width = Q(1, 1 << 30);
  return o;
}

SolutionBox drop_multiplier(const SolutionBox& s) {
  SolutionBox r = s;
  r.box.resize(3);
  if (r.exact) r.exact->resize(3);
  return r;
}

}  // namespace

HMatrix base_change_C() {
  RealAlg s = inv_sqrt5(), s7 = sq(7);
  HMatrix P;
  P(0, 0) = CxAlg(rq(9, 2) * s, rq(-1, 2) * s7 * s);
  P(0, 1) = CxAlg();
  P(0, 2) = CxAlg(rq(-17, 4) * s, rq(3, 4) * s7 * s);
  P(1, 0) = CxAlg(rq(-17, 4) * s, rq(-3, 4) * s7 * s);
  P(1, 1) = c7(3, 4, 1, 4);
  P(1, 2) = CxAlg(rq(9, 2) * s, rq(1, 2) * s7 * s);
  P(2, 0) = CxAlg(-3 * s);
  P(2, 1) = CxAlg(1);
  P(2, 2) = CxAlg(2 * s);
  return P;
}

const std::array<MPoly, 9>& printed_sphere_rows() {
  static const std::array<MPoly, 9> rows = [] {
    MPoly t1 = sv("t1"), t2 = sv("t2"), t3 = sv("t3");
    MPoly rr = t1 * t1 + t2 * t2;
    RealAlg s = inv_sqrt5(), s7 = sq(7), s75 = sq(7) * s;
    std::array<MPoly, 9> f;
    f[0] = MPoly(sphere_vars());
    f[1] = sk(rq(-69, 10)) - (6 * s) * t2 * t3 + rq(66, 5) * t1 - rq(123, 20) * rr;
    f[2] = sk(rq(-24, 5)) - (rq(39, 8) * s) * t2 * t3 + rq(261, 40) * t1 + (rq(3, 8) * s7) * t2 - (3 * s75) * t3 -
           rq(9, 5) * rr + (rq(21, 8) * s75) * t1 * t3;
    f[3] = sk(rq(-21, 10)) - (rq(33, 8) * s) * t2 * t3 + rq(27, 40) * t1 - (rq(3, 8) * s7) * t2 -
           (rq(3, 2) * s75) * t3 + rq(9, 10) * rr + (rq(3, 8) * s75) * t1 * t3;
    f[4] = sk(rq(3, 10)) - rq(12, 5) * t1 + rq(21, 20) * rr;
    f[5] = sk(rq(3, 10)) - rq(12, 5) * t1 + rq(21, 20) * rr;
    f[6] = sk(rq(-21, 10)) + (rq(33, 8) * s) * t2 * t3 + rq(27, 40) * t1 - (rq(3, 8) * s7) * t2 +
           (rq(3, 2) * s75) * t3 + rq(9, 10) * rr - (rq(3, 8) * s75) * t1 * t3;
    f[7] = sk(rq(-24, 5)) + (rq(39, 8) * s) * t2 * t3 + rq(261, 40) * t1 + (rq(3, 8) * s7) * t2 + (3 * s75) * t3 -
           rq(9, 5) * rr - (rq(21, 8) * s75) * t1 * t3;
    f[8] = sk(rq(-69, 10)) + (6 * s) * t2 * t3 + rq(66, 5) * t1 - rq(123, 20) * rr;
    return f;
  }();
  return rows;
}

TriangleData build_triangle(const DirichletData& d) {
  TriangleData T;
  T.chart = SpinalChart::from_basis(base_change_C());
  if (!T.chart.lorentz()) throw Error(Err::InvariantViolation, "base change for C is not a Lorentz basis");
  if (!sphere_trace(T.chart, d.rj(4), d.rj(5)).is_zero())
    throw Error(Err::InvariantViolation, "the sphere of the chart is not the spinal sphere of B(r4, r5)");
  T.f[0] = MPoly(sphere_vars());
  for (int j = 1; j <= 8; ++j) T.f[j] = sphere_trace(T.chart, d.p0, d.rj(j));
  RealAlg t2v = rq(5, 28) * sq(7);
  T.vertices[0] = {"p2", {rq(87, 88), rq(5, 88) * sq(7), RealAlg(0)}, {1, 2, 7, 8}};
  T.vertices[1] = {"q1", {rq(1, 4), t2v, -sqrt5_7()}, {2, 3, 4, 5}};
  T.vertices[2] = {"q2", {rq(1, 4), t2v, sqrt5_7()}, {4, 5, 6, 7}};
  T.interior_point = {rq(4, 5), rq(3, 5), RealAlg(0)};
  int k = 0;
  for (int j : {2, 4, 7}) {
    T.interior_signs[k] = sign(T.f[j].eval(T.interior_point));
    if (T.interior_signs[k] == 0) throw Error(Err::InvariantViolation, "interior point of T lies on a side");
    ++k;
  }
  return T;
}

int triangle_side(const TriangleData& T, const SolutionBox& s, const std::set<int>& on) {
  auto known_zero = [&](int j) { return on.count(j) || (j == 4 && on.count(5)) || (j == 5 && on.count(4)); };
  bool zero = false, undecided = false;
  // returns false when the point is certainly outside
  auto test = [&](int sg, int want, bool strict) {
    if (sg == 2) {
      undecided = true;
      return true;
    }
    if (sg == 0) {
      if (strict) return false;
      zero = true;
      return true;
    }
    return sg == want;
  };
  // T lies in the open quadrant t1, t2 > 0 and in the band t3^2 <= 5/7
  for (const char* v : {"t1", "t2"})
    if (!test(sign_at(sv(v), s), 1, true)) return -1;
  MPoly t3 = sv("t3");
  if (!test(sign_at(sk(rq(5, 7)) - t3 * t3, s), 1, false)) return -1;
  int k = 0;
  for (int j : {2, 4, 7}) {
    int want = T.interior_signs[k++];
    int sg = known_zero(j) ? 0 : sign_at(T.f[j], s);
    if (!test(sg, want, false)) return -1;
  }
  // the B2 and B7 traces have two branches over each t3; T lies beyond the upper one
  TauBranch br = tau2_branch();
  const auto& S = sphere_vars();
  MPoly lower = br.a.to_mpoly(S, 2) * sv("t2") + br.b.to_mpoly(S, 2);
  MPoly upper = lower.subst(2, -t3);
  int s3 = sign_at(t3, s);
  if (s3 <= 0 || s3 == 2)
    if (!test(sign_at(lower, s), 1, false)) return -1;
  if (s3 >= 0)
    if (!test(sign_at(upper, s), 1, false)) return -1;
  if (undecided) return 2;
  return zero ? 0 : 1;
}

std::array<std::vector<SolutionBox>, 9> critical_points(const TriangleData& T) {
  std::array<std::vector<SolutionBox>, 9> out;
  for (int j = 1; j <= 8; ++j)
    for (const auto& s4 : solve_system(lagrange_system(T.f[j]), lagrange_box(), lagrange_options()).solutions)
      out[j].push_back(drop_multiplier(s4));
  return out;
}

TauBranch tau2_branch() {
  RealAlg s35 = sq(35), s5 = sq(5), s7 = sq(7);
  TauBranch b;
  b.a = UPoly({RealAlg(968), 136 * s35, RealAlg(320)}, "t3");
  b.b = UPoly({-55 * s7, 108 * s5, 80 * s7, -39 * s5}, "t3");
  b.d = UPoly({RealAlg(0), -175 * s35, RealAlg(-1750), -385 * s35, RealAlg(-1715)}, "t3");
  b.k = UPoly({rq(87, 35) * s35, RealAlg(7)}, "t3");
  return b;
}

std::array<double, 3> tau2_point(double t3) {
  static const TauBranch br = tau2_branch();
  auto ev = [&](const UPoly& p) {
    double v = 0;
    for (int i = p.degree(); i >= 0; --i) v = v * t3 + p.c[i].to_double();
    return v;
  };
  double phi = (ev(br.b) - ev(br.k) * std::sqrt(std::max(0.0, ev(br.d)))) / ev(br.a);
  double t2 = -phi;
  return {std::sqrt(std::max(0.0, 1 - t2 * t2 - t3 * t3)), t2, t3};
}

std::array<double, 3> tau0_point(double t3) {
  double s = t3 * t3;
  return {(9 - 7 * s) / 16, std::sqrt(std::max(0.0, 175 - 130 * s - 49 * s * s)) / 16, t3};
}

CheckResult verify_C_setup(const DirichletData& d) {
  return run_check("meridian.C_setup", "the bisector C and its relative position to B2", [&](CheckResult& r) {
    const auto& rep = d.rep;
    HVector a = rep.G1.inverse() * d.p0, b = rep.G2.inverse() * rep.G3 * d.p0;
    r.expect(projective_equal(rep.G2 * d.p0, d.p0), "G2 p0 = p0");
    r.expect(projective_equal(a, d.rj(4)), "G1^-1 p0 = r4");
    r.expect(projective_equal(b, d.rj(5)), "G2^-1 G3 p0 = r5");
    SliceTest t = slice_test(d.rj(4), d.rj(5), d.p0, d.rj(2));
    HVector s{CxAlg(-3 * sq(7), RealAlg(-5)), CxAlg(4 * sq(7), RealAlg(10)), CxAlg(4 * sq(7))};
    r.expect(projective_equal(t.s, s), "complex spines meet at s");
    r.expect(hnorm(s) == RealAlg(44), "<s,s> = 44");
    r.witness("s_norm", to_json(hnorm(s)));
    CxAlg z = c7(9, 46, 15, 46);
    r.expect(t.z_first.has_value() && *t.z_first == z, "slice parameter z1 = (9 + 15 i sqrt7)/46");
    r.expect(z.norm2() != RealAlg(1), "that parameter is not unimodular");
    r.expect(!t.on_first && !t.on_second && !t.shared(), "C and B2 share no complex slice");
    if (t.z_first) r.witness("z1", to_json(*t.z_first));
    HVector p2 = vertex_points(rep)[1];
    CxAlg want = c7(9, 4, 1, 4);
    CxAlg ha = herm(p2, a), hb = herm(p2, b);
    r.expect(ha == want, "<p2, G1^-1 p0> = (9 + i sqrt7)/4");
    r.expect(hb == want, "<p2, G2^-1 G3 p0> = (9 + i sqrt7)/4");
    r.expect(hnorm(a) == hnorm(b), "the two centers have equal norms");
    r.witness("p2_products", json::array({to_json(ha), to_json(hb)}));
  });
}

CheckResult verify_C_B2_disk(const DirichletData& d) {
  return run_check("meridian.C_B2_disk", "C cap B2 is a disk", [&](CheckResult& r) {
    GiraudChart ch = giraud_chart(d.rj(4), d.rj(5), d.p0, d.rj(2));
    const auto& V = torus_vars();
    MuNu mn = mu_nu(norm_form(ch));
    CPoly mu = affine_z1(c7(-39, 4, -3, 4), c7(9, 4, 3, 4), CxAlg(rq(18, 4)));
    MPoly nu = MPoly::constant(V, -15) + affine_z1(CxAlg(), c7(12, 1, 3, 2), CxAlg()).re;
    r.expect(mn.mu.re == mu.re && mn.mu.im == mu.im, "mu(z1) matches");
    r.expect(mn.nu == nu, "nu(z1) matches");
    MPoly x = MPoly::var(V, "x1"), y = MPoly::var(V, "y1");
    auto k = [&](const RealAlg& c) { return MPoly::constant(V, c); };
    MPoly delta = rq(1, 8) * (k(1413) - RealAlg(1764) * x + (216 * sq(7)) * y + RealAlg(351) * (x * x - y * y) -
                              (180 * sq(7)) * x * y);
    MPoly disc = mn.discriminant(true);
    r.expect(reduce_torus(delta) == disc, "delta(x,y) = nu^2 - |mu|^2 on the circle");
    MPoly h = in_first_circle(disc);
    const auto& W = h.vars();
    MPoly hx = MPoly::var(W, "x1"), hy = MPoly::var(W, "y1");
    MPoly circ = hx * hx + hy * hy - MPoly::constant(W, 1);
    SolveOptions o;
    o.square_rules = {{"y1", MPoly::constant(W, 1) - hx * hx}};
    o.width = Q(1, 1 << 30);
    auto sol = solve_system({h, circ}, {RationalInterval(Q(-1), Q(1)), RationalInterval(Q(-1), Q(1))}, o);
    r.expect(sol.solutions.size() == 2, "{delta, circle} has " + std::to_string(sol.solutions.size()) + " solutions");
    // eliminants contain the displayed cubic in x and, read with y^3, the displayed cubic in y
    UPoly cubic_x({RealAlg(-2473), RealAlg(7411), RealAlg(-7103), RealAlg(2221)}, "x1");
    UPoly cubic_y({392 * sq(7), RealAlg(2268), 1024 * sq(7), RealAlg(2221)}, "y1");
    UPoly printed_y({392 * sq(7), RealAlg(2268), 1024 * sq(7) + RealAlg(2221)}, "y1");
    UPoly ex = eliminant({h, circ}, "x1", o), ey = eliminant({h, circ}, "y1", o);
    r.expect(divmod(ex, cubic_x).second.is_zero(), "x eliminant has the factor 2221x^3 - 7103x^2 + 7411x - 2473");
    r.expect(divmod(ey, cubic_y).second.is_zero(), "y eliminant has the factor 2221y^3 + 1024 sqrt7 y^2 + 2268y + 392 sqrt7");
    r.note(std::string("displayed y polynomial with 2221y^2 divides the eliminant: ") +
           (divmod(ey, printed_y).second.is_zero() ? "yes" : "no"));
    auto xr = isolate_roots(cubic_x, RationalInterval(Q(-8), Q(8)), Q(1, 1 << 30));
    r.expect(xr.size() == 1, "the x cubic has a single real root");
    bool one = false, other = false;
    double tmin = 0;
    json pts = json::array();
    for (const auto& s : sol.solutions) {
      pts.push_back(box_json(s));
      if (s.exact && (*s.exact)[0] == RealAlg(1) && (*s.exact)[1].is_zero()) {
        one = true;
        continue;
      }
      auto m = mids(s);
      other = near(m[0], 0.70552301) && near(m[1], -0.70868701) && xr.size() == 1 && s.box[0].overlaps(xr[0].interval);
      tmin = std::atan2(m[1], m[0]) / (2 * M_PI);
    }
    r.expect(one, "solution (1, 0)");
    r.expect(other, "second solution near (0.70552301, -0.70868701) on the cubic root");
    r.expect(near(tmin, -0.12535607), "t1min = " + fmt(tmin));
    r.witness("solutions", pts);
    r.witness("t1_min", tmin);
    // delta < 0 exactly on the arc t1min < t1 < 0, where each slice meets the disk in one arc
    std::vector<RealAlg> inside{rq(24, 25), rq(-7, 25)}, outside{RealAlg(-1), RealAlg(0)};
    r.expect(sign(h.eval(inside)) < 0, "delta < 0 at arg(z1)/2pi = -0.045");
    r.expect(sign(h.eval(outside)) > 0, "delta > 0 at z1 = -1");
  });
}

CheckResult verify_sphere_traces(const DirichletData& d, const TriangleData& T) {
  (void)d;
  return run_check("meridian.sphere_traces", "traces of the Dirichlet bisectors on the spinal sphere of C", [&](CheckResult& r) {
    const auto& rows = printed_sphere_rows();
    json scales = json::object();
    for (int j = 1; j <= 8; ++j) {
      auto s = proportional(T.f[j], rows[j]);
      r.expect(s && *s == RealAlg(1), "row B" + std::to_string(j) + " equals the computed trace");
      if (s) scales[std::to_string(j)] = to_json(*s);
    }
    r.witness("scales", scales);
    r.expect(T.f[4] == T.f[5], "rows B4 and B5 coincide");
    MPoly flip = -sv("t3");
    for (auto [a, b] : {std::pair{1, 8}, {2, 7}, {3, 6}})
      r.expect(T.f[a].subst(2, flip) == T.f[b], "rows B" + std::to_string(a) + " and B" + std::to_string(b) +
                                                      " are mirror images under t3 -> -t3");
  });
}

CheckResult verify_triangle_vertices(const DirichletData& d, const TriangleData& T) {
  return run_check("meridian.triangle_vertices", "vertices of the triangle T", [&](CheckResult& r) {
    auto pts = vertex_points(d.rep);
    const int index[3] = {1, 4, 5};
    for (int i = 0; i < 3; ++i) {
      const auto& v = T.vertices[i];
      r.expect(sphere_eq().eval(v.t).is_zero(), v.name + " lies on the sphere");
      r.expect(projective_equal(T.chart.point(v.t[0], v.t[1], v.t[2]), pts[index[i]]),
               v.name + " is the vertex of the domain");
      std::set<int> on;
      for (int j = 1; j <= 8; ++j)
        if (T.f[j].eval(v.t).is_zero()) on.insert(j);
      r.expect(on == v.faces, v.name + " lies on exactly the listed bisectors");
      json c = json::array();
      for (const auto& x : v.t) c.push_back(to_json(x));
      r.witness(v.name, c);
    }
  });
}

CheckResult verify_tau(const DirichletData& d, const TriangleData& T) {
  return run_check("meridian.tau", "the boundary curve tau of T", [&](CheckResult& r) {
    GiraudChart ch = giraud_chart(d.rj(4), d.rj(5), d.p0, d.rj(2));
    const auto& V = torus_vars();
    MPoly N = norm_form(ch);
    auto pts = vertex_points(d.rep);
    auto tv = [&](const char* n) { return MPoly::var(V, n); };
    auto k = [&](const RealAlg& c) { return MPoly::constant(V, c); };
    MPoly x1 = tv("x1"), y1 = tv("y1"), x2 = tv("x2"), y2 = tv("y2");
    // displayed boundary equation and the B1 trace, with the missing x2 and y2 terms restored
    MPoly eq2 = k(15) - RealAlg(12) * x1 + (rq(3, 2) * sq(7)) * y1 - rq(39, 4) * x2 + (rq(3, 4) * sq(7)) * y2 +
                rq(27, 4) * x1 * x2 + rq(9, 4) * y1 * y2 - (rq(3, 4) * sq(7)) * (x1 * y2 + x2 * y1);
    MPoly common = k(rq(-99, 8)) - (rq(3, 2) * sq(7)) * y1 + rq(21, 2) * x1 +
                   (rq(15, 8) * sq(7)) * (x1 * y2 + y1 * x2) + rq(27, 8) * (x1 * x2 - y1 * y2);
    MPoly eq1_printed = common - rq(3, 2) * x1;
    MPoly eq1_fixed = common - rq(3, 2) * x2 - (rq(3, 2) * sq(7)) * y2;
    MPoly f1 = trace_equation(ch, d.p0, d.rj(1));
    r.expect(N == eq2, "boundary equation of C cap B2 matches");
    r.expect(f1 == eq1_fixed, "B1 trace matches once -3/2 x1 reads -3/2 x2 - 3 sqrt7/2 y2");
    r.note(std::string("displayed B1 equation equals the trace: ") + (f1 == eq1_printed ? "yes" : "no"));
    SolveOptions o = torus_options();
    std::vector<RealAlg> z11{RealAlg(1), RealAlg(0), RealAlg(1), RealAlg(0)};
    std::vector<RealAlg> zq1{rq(3, 4), rq(-1, 4) * sq(7), RealAlg(1), RealAlg(0)};
    o.hints = {z11, zq1};
    r.expect(projective_equal(ch.at(CxAlg(1), CxAlg(1)), pts[1]), "(z1, z2) = (1, 1) is p2");
    r.expect(projective_equal(ch.at(c7(3, 4, -1, 4), CxAlg(1)), pts[4]), "(z1, z2) = ((3 - i sqrt7)/4, 1) is q1");
    // (a) B1: two solutions, (1, 1) and one with the displayed arguments
    auto s1 = solve_system({N, f1, torus_circle(1), torus_circle(2)}, torus_box(), o);
    r.expect(s1.solutions.size() == 2, "C cap B2 cap B1 has " + std::to_string(s1.solutions.size()) + " points");
    bool at_one = false, at_args = false;
    for (const auto& s : s1.solutions) {
      if (s.exact && *s.exact == z11) {
        at_one = true;
        continue;
      }
      auto m = mids(s);
      double a1 = std::atan2(m[1], m[0]) / (2 * M_PI), a2 = std::atan2(m[3], m[2]) / (2 * M_PI);
      at_args = near(a1, -0.06508170) && near(a2, 0.13166662);
      r.witness("b1_args", json::array({a1, a2}));
    }
    r.expect(at_one, "exact solution (z1, z2) = (1, 1)");
    r.expect(at_args, "second solution at arg/2pi = (-0.06508170, 0.13166662)");
    r.note("the displayed solution (z1, z2) = (1, 0) is off the torus; the exact solution is (1, 1), the vertex p2");
    // no point of C cap B2 cap Bj on the open bottom arc arg(z2) < 0
    json counts = json::object();
    for (int j = 1; j <= 8; ++j) {
      if (j == 2) continue;
      MPoly f = trace_equation(ch, d.p0, d.rj(j));
      auto s = solve_system({N, f, torus_circle(1), torus_circle(2)}, torus_box(), o);
      counts[std::to_string(j)] = s.solutions.size();
      for (const auto& p : s.solutions) {
        int sg = sign_at(y2, p);
        r.expect(sg == 0 || sg == 1, "B" + std::to_string(j) + " point has arg(z2) >= 0");
      }
      if (j == 3) {
        // (b) B3 touches the boundary curve only at q1
        r.expect(s.solutions.size() == 1 && s.solutions[0].exact && *s.solutions[0].exact == zq1,
                 "C cap B2 cap B3 is the single point q1");
        auto gf = angle_gradient(f, zq1), gn = angle_gradient(N, zq1);
        r.expect((gf.first * gn.second - gf.second * gn.first).is_zero(), "B3 is tangent to the boundary curve at q1");
      }
    }
    r.witness("bj_counts", counts);
    // (c) tau_0 and tau_2 meet only at q1
    auto s24 = solve_system({T.f[2], T.f[4], sphere_eq()}, sphere_box(), sphere_options(T));
    r.expect(s24.solutions.size() == 1 && s24.solutions[0].exact && *s24.solutions[0].exact == T.vertices[1].t,
             "{f2, f4, sphere} has the unique solution q1");
    // tau_0: the displayed parametrization solves f4 and the sphere equation
    MPoly t3 = sv("t3");
    MPoly t1v = rq(1, 16) * (sk(9) - RealAlg(7) * t3 * t3);
    MPoly t2sq = rq(1, 256) * (sk(175) - RealAlg(130) * t3 * t3 - RealAlg(49) * t3 * t3 * t3 * t3);
    for (auto [name, p] : {std::pair<std::string, MPoly>{"f4", T.f[4]}, {"sphere", sphere_eq()}}) {
      MPoly q = p.reduce_square(1, t2sq).subst(0, t1v);
      r.expect(q.is_zero(), "tau_0 parametrization satisfies " + name);
    }
    // tau_2: printed quadratic-formula branch, read as t2 = -phi(t3)
    TauBranch br = tau2_branch();
    const auto& S = sphere_vars();
    MPoly A = br.a.to_mpoly(S, 2), B = br.b.to_mpoly(S, 2), D = br.d.to_mpoly(S, 2), K = br.k.to_mpoly(S, 2);
    MPoly lin = T.f[2] + rq(9, 5) * sphere_eq();
    r.expect(lin.degree(0) == 1 && lin.degree(1) == 1, "f2 is linear in t1 and t2 modulo the sphere");
    MPoly res = resultant(lin, sphere_eq(), 0);
    auto cf = res.coeffs_in(1);
    r.expect(cf.size() == 3, "resultant in t1 is quadratic in t2");
    if (cf.size() == 3) {
      const MPoly &c0 = cf[0], &c1 = cf[1], &c2 = cf[2];
      bool sum_minus = (c1 * A) == (RealAlg(2) * c2 * B);
      bool sum_plus = (c1 * A) == (RealAlg(-2) * c2 * B);
      bool prod = (c0 * A * A) == (c2 * (B * B - K * K * D));
      r.expect(sum_minus && prod, "roots in t2 are -(b -+ k sqrt d)/a");
      r.note(std::string("displayed phi itself is a root in t2: ") + (sum_plus && prod ? "yes" : "no"));
    }
    RealAlg lo = -sqrt5_7(), hi = RealAlg(0);
    r.expect(br.d.eval(hi).is_zero(), "d(0) = 0");
    r.expect(count_roots_between(br.a, lo, hi) == 0 && sign(br.a.eval(hi)) > 0, "a > 0 on the interval");
    r.expect(count_roots_between(br.d, lo, hi) == 0 && sign(br.d.eval(rq(-1, 2))) > 0, "d > 0 inside the interval");
    r.expect(count_roots_between(br.b, lo, hi) == 0 && sign(br.b.eval(hi)) < 0 && sign(br.b.eval(lo)) < 0,
             "b < 0 on the interval");
    r.expect(count_roots_between(br.k, lo, hi) == 0 && sign(br.k.eval(lo)) > 0, "k > 0 on the interval");
    // endpoints: q1 at t3 = -sqrt(5/7) and p2 at t3 = 0
    auto endpoint = [&](const RealAlg& t, const std::vector<RealAlg>& want, const std::string& name) {
      RealAlg dv = br.d.eval(t);
      auto rt = try_sqrt(dv);
      r.expect(rt.has_value(), "d is a square at " + name);
      if (!rt) return;
      RealAlg t2 = -(br.b.eval(t) - br.k.eval(t) * *rt) / br.a.eval(t);
      RealAlg t1sq = RealAlg(1) - t2 * t2 - t * t;
      r.expect(t2 == want[1] && t1sq == want[0] * want[0], "branch ends at " + name);
    };
    endpoint(lo, T.vertices[1].t, "q1");
    endpoint(hi, T.vertices[0].t, "p2");
    // t1 does not vanish along the branch
    std::vector<std::string> P{"t2", "t3"};
    MPoly e0 = T.f[2].subst_value(0, RealAlg(0)).in_vars(P);
    MPoly c0 = MPoly::var(P, "t2") * MPoly::var(P, "t2") + MPoly::var(P, "t3") * MPoly::var(P, "t3") -
               MPoly::constant(P, 1);
    auto z = solve_system({e0, c0}, {RationalInterval(Q(-1), Q(1)), RationalInterval(Q(-1), Q(1))});
    int hits = 0;
    for (const auto& s : z.solutions) {
      MPoly t2p = MPoly::var(P, "t2"), t3p = MPoly::var(P, "t3");
      bool pos = sign_at(t2p, s) > 0;
      bool in_range = sign_at(t3p, s) <= 0 && sign_at(t3p + MPoly::constant(P, sqrt5_7()), s) >= 0;
      if (pos && in_range) ++hits;
    }
    r.expect(hits == 0, "the B2 curve meets t1 = 0 nowhere over the tau_2 range");
    // tau_1 is the mirror image of tau_2
    r.expect(T.f[2].subst(2, -sv("t3")) == T.f[7], "f7(t1, t2, t3) = f2(t1, t2, -t3)");
  });
}

CheckResult verify_triangle_T(const DirichletData& d, const TriangleData& T) {
  (void)d;
  return run_check("meridian.triangle_T", "no trace of a Dirichlet bisector inside the triangle T", [&](CheckResult& r) {
    // (a) critical points of every f_j on the sphere
    json crit = json::object();
    std::set<std::pair<int, std::string>> on_boundary;
    auto cps = critical_points(T);
    for (int j = 1; j <= 8; ++j) {
      json pts = json::array();
      for (const auto& s : cps[j]) {
        pts.push_back(box_json(s));
        int side = triangle_side(T, s, {});
        r.expect(side != 2, "critical point of f" + std::to_string(j) + " located");
        r.expect(side != 1, "critical point of f" + std::to_string(j) + " is not inside T");
        if (side == 0) {
          int v = vertex_named(T, s);
          on_boundary.insert({j, v >= 0 ? T.vertices[v].name : "side"});
        }
      }
      crit[std::to_string(j)] = pts;
    }
    r.witness("critical_points", crit);
    std::set<std::pair<int, std::string>> want{{3, "q1"}, {6, "q2"}};
    r.expect(on_boundary == want, "critical points on the boundary of T: q1 for f3 and q2 for f6");
    // displayed Lagrange system; its gradient is that of the B3 row
    std::vector<std::string> L{"t1", "t2", "t3", "lam"};
    auto lv = [&](const char* n) { return MPoly::var(L, n); };
    auto lk = [&](const RealAlg& c) { return MPoly::constant(L, c); };
    RealAlg s = inv_sqrt5(), s7 = sq(7);
    MPoly lam2 = RealAlg(2) * lv("lam");
    std::vector<MPoly> shown{
        lk(rq(27, 40)) + (rq(3, 8) * s7 * s) * lv("t3") + (lk(rq(9, 5)) - lam2) * lv("t1"),
        (rq(-33, 8) * s) * lv("t3") - lk(rq(3, 8) * s7) + (lk(rq(9, 5)) - lam2) * lv("t2"),
        (rq(-33, 8) * s) * lv("t2") + (rq(3, 8) * s7 * s) * lv("t1") - lk(rq(3, 2) * s7 * s) - lam2 * lv("t3"),
        sphere_eq().in_vars(L)};
    auto f3sys = lagrange_system(T.f[3]);
    bool same = true;
    for (int i = 0; i < 4; ++i) same = same && shown[i] == f3sys[i];
    r.expect(same, "displayed Lagrange system is the one of the B3 row");
    auto ls = solve_system(shown, lagrange_box(), lagrange_options());
    r.expect(ls.solutions.size() == 4, "displayed Lagrange system has " + std::to_string(ls.solutions.size()) +
                                           " real solutions");
    UPoly quartic({RealAlg(-35), -20 * sq(35), RealAlg(-49), 28 * sq(35), RealAlg(140)}, "t3");
    auto qr = isolate_roots(quartic, RationalInterval(Q(-2), Q(2)), Q(1, 1 << 30));
    r.expect(qr.size() == 2, "the quartic in t3 has two real roots");
    if (qr.size() == 2) {
      r.expect(near(qr[0].approx().get_d(), -0.50306965) && near(qr[1].approx().get_d(), 0.84223313),
               "quartic roots near -0.50306965 and 0.84223313");
      r.witness("quartic_roots", json::array({to_json(qr[0].interval), to_json(qr[1].interval)}));
    }
    int exact0 = 0, exactq = 0, onq = 0;
    for (const auto& p : ls.solutions) {
      if (p.exact && (*p.exact)[2].is_zero()) ++exact0;
      else if (p.exact && (*p.exact)[2] == -sqrt5_7()) ++exactq;
      else
        for (const auto& q : qr)
          if (p.box[2].overlaps(q.interval)) ++onq;
    }
    r.expect(exact0 == 1 && exactq == 1 && onq == 2, "t3 values 0, -sqrt(5/7) and the two quartic roots");
    // (b) pairwise intersections of the traces
    json pairs = json::object();
    bool found_second = false;
    for (int j = 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) {
        if (T.f[j] == T.f[k]) continue;
        auto sol = solve_system({T.f[j], T.f[k], sphere_eq()}, sphere_box(), sphere_options(T));
        std::string tag = std::to_string(j) + "_" + std::to_string(k);
        // f_j - f_k proportional to t2 t3 splits the solutions onto the great circles t2 = 0 and t3 = 0
        bool split = proportional(T.f[j] - T.f[k], sv("t2") * sv("t3")).has_value();
        json pts = json::array();
        for (const auto& p : sol.solutions) {
          pts.push_back(box_json(p));
          int side = triangle_side(T, p, {j, k});
          int s3 = sign_at(sv("t3"), p);
          if (side == 2 && split && (s3 == 1 || s3 == -1)) side = -1;
          int v = vertex_named(T, p);
          r.expect(side == -1 || (side == 0 && v >= 0), "B" + std::to_string(j) + " cap B" + std::to_string(k) +
                                                             " point is outside T or a vertex");
          if (v >= 0) r.expect(T.vertices[v].faces.count(j) && T.vertices[v].faces.count(k), "vertex incidence");
          if (j == 1 && k == 2 && v < 0) {
            auto m = mids(p);
            found_second = near(m[0], 0.88541680) && near(m[1], 0.03241871) && near(m[2], -0.46366596);
            r.expect(side == -1, "second point of B1 cap B2 on the sphere is outside T");
          }
        }
        pairs[tag] = pts;
      }
    r.witness("pairs", pairs);
    r.expect(found_second, "B1 cap B2 meets the sphere at p2 and near (0.88541680, 0.03241871, -0.46366596)");
  });
}

CheckResult verify_g2sq_two_points(const DirichletData& d, const TriangleData& T) {
  return run_check("meridian.g2sq_two_points", "the sphere of C meets its G2^2 translate in two points",
                   [&](CheckResult& r) {
    HMatrix g = d.rep.G2 * d.rep.G2;
    MPoly e = sphere_trace(T.chart, g * d.rj(4), g * d.rj(5));
    MPoly shown = (-12 * inv_sqrt5()) * sv("t2") * sv("t3");
    r.expect(e == shown, "the equation is -12 t2 t3 / sqrt5");
    r.witness("equation", to_json(e));
    // the zero set on the sphere is two great circles, not two points
    std::vector<std::vector<RealAlg>> extra{{RealAlg(0), RealAlg(1), RealAlg(0)},
                                            {RealAlg(0), RealAlg(0), RealAlg(1)},
                                            {rq(3, 5), rq(4, 5), RealAlg(0)}};
    json w = json::array();
    for (const auto& p : extra)
      if (e.eval(p).is_zero() && sphere_eq().eval(p).is_zero()) {
        json c = json::array();
        for (const auto& x : p) c.push_back(to_json(x));
        w.push_back(c);
      }
    r.witness("further_points", w);
    r.expect(w.empty(), "the only solutions on the sphere are (1,0,0) and (-1,0,0)");
    if (!w.empty()) r.note("the zero set on the sphere is the pair of great circles t2 = 0 and t3 = 0");
  });
}

CheckResult verify_g2sq_disjoint(const DirichletData& d, const TriangleData& T) {
  return run_check("meridian.g2sq_disjoint", "T and its G2^2 translate are disjoint", [&](CheckResult& r) {
    HMatrix g = d.rep.G2 * d.rep.G2;
    MPoly e = sphere_trace(T.chart, g * d.rj(4), g * d.rj(5));
    r.expect(proportional(e, sv("t2") * sv("t3")).has_value(), "intersection locus is t2 t3 = 0 on the sphere");
    r.expect(projective_equal(g * g, HMatrix::identity()), "G2^2 is an involution");
    // G2^2 permutes the four open arcs of the two circles; follow (0, 1, 0) on the arc t3 = 0, t2 > 0
    HVector img = g * T.chart.point(RealAlg(0), RealAlg(1), RealAlg(0));
    auto a = T.chart.affine(img);
    r.expect(a.first.re.is_zero() && (a.first.norm2() + a.second.norm2()) == RealAlg(1), "image lies on the sphere");
    RealAlg t1 = a.second.re, t2 = a.second.im, t3 = a.first.im;
    r.expect(t3.is_zero() && sign(t2) < 0, "G2^2 maps the arc t3 = 0, t2 > 0 to the arc t3 = 0, t2 < 0");
    r.witness("image_of_010", json::array({to_json(t1), to_json(t2), to_json(t3)}));
    // T lies in t2 > 0: vertices, tau_0, and tau_2 with its mirror tau_1
    for (const auto& v : T.vertices) r.expect(sign(v.t[1]) > 0, v.name + " has t2 > 0");
    UPoly t2sq({RealAlg(175), RealAlg(-130), RealAlg(-49)}, "s");
    r.expect(count_roots_between(t2sq, RealAlg(0), rq(5, 7)) == 0 && sign(t2sq.eval(rq(5, 7))) > 0,
             "tau_0 has t2 > 0");
    TauBranch br = tau2_branch();
    RealAlg lo = -sqrt5_7();
    bool b_neg = count_roots_between(br.b, lo, RealAlg(0)) == 0 && sign(br.b.eval(lo)) < 0 &&
                 sign(br.b.eval(RealAlg(0))) < 0;
    bool k_pos = count_roots_between(br.k, lo, RealAlg(0)) == 0 && sign(br.k.eval(lo)) > 0;
    r.expect(b_neg && k_pos, "tau_2 has t2 = -(b - k sqrt d)/a > 0, and tau_1 by mirror symmetry");
  });
}

}  // namespace cruv
