#include "cruv/domainchk.hpp"

#include <cmath>
#include <sstream>

namespace cruv {

namespace {

CxAlg c7(long n, long d, long in = 0, long id = 1) { return {rq(n, d), rq(in, id) * sq(7)}; }

const char* const kVertexNames[8] = {"p1", "p2", "p3", "p4", "q1", "q2", "q3", "q4"};

int vertex_index(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (name == kVertexNames[i]) return i;
  throw Error(Err::Usage, "unknown vertex " + name);
}

std::vector<RationalInterval> torus_box() { return std::vector<RationalInterval>(4, RationalInterval(Q(-1), Q(1))); }

SolveOptions torus_options() {
  const auto& V = torus_vars();
  SolveOptions o;
  MPoly one = MPoly::constant(V, 1);
  MPoly x1 = MPoly::var(V, "x1"), x2 = MPoly::var(V, "x2");
  o.square_rules = {{"y1", one - x1 * x1}, {"y2", one - x2 * x2}};
  return o;
}

// derivative along z_k = exp(i t_k), reduced on the torus
MPoly angle_deriv(const MPoly& f, int k) {
  const auto& V = torus_vars();
  int ix = 2 * (k - 1), iy = ix + 1;
  MPoly x = MPoly::var(V, V[ix]), y = MPoly::var(V, V[iy]);
  return reduce_torus(x * f.deriv(iy) - y * f.deriv(ix));
}

json box_json(const SolutionBox& s) {
  json j = json::array();
  if (s.exact)
    for (const auto& v : *s.exact) j.push_back(to_json(v));
  else
    for (const auto& iv : s.box) j.push_back(to_json(iv));
  return j;
}

std::string set_str(const std::set<int>& s) {
  std::string o = "{";
  for (int v : s) o += (o.size() > 1 ? "," : "") + std::to_string(v);
  return o + "}";
}

std::string set_str(const std::set<std::string>& s) {
  std::string o = "{";
  for (const auto& v : s) o += (o.size() > 1 ? "," : "") + v;
  return o + "}";
}

}  // namespace

int g2_index(int j) { return (j + 1) % 8 + 1; }

int i_index(int j) {
  static const int m[9] = {0, 2, 1, 8, 7, 6, 5, 4, 3};
  return m[j];
}

const std::array<std::vector<std::string>, 9>& face_vertex_table() {
  static const std::array<std::vector<std::string>, 9> t{{
      {},
      {"p1", "p2", "q3", "q4"},
      {"p2", "q4", "q1", "p1"},
      {"p4", "p1", "q4", "q1"},
      {"p1", "q1", "q2", "p4"},
      {"p3", "p4", "q1", "q2"},
      {"p4", "q2", "q3", "p3"},
      {"p2", "p3", "q2", "q3"},
      {"p3", "q3", "q4", "p2"},
  }};
  return t;
}

DirichletData build_dirichlet() {
  DirichletData d;
  d.rep = Representation::rho(2);
  d.p0 = center_p0();
  d.I = involution_I();
  const char* words[8] = {"1", "3b", "2 1 2b", "2 3b 2b", "2 2 1 2 2", "2 2 3b 2 2", "2b 1 2", "2b 3b 2"};
  for (int j = 0; j < 8; ++j) {
    d.words[j] = parse_word(words[j]);
    d.r[j] = eval_word(d.words[j], d.rep) * d.p0;
  }
  // displayed lifts; the word images agree with them exactly
  const std::array<HVector, 8> shown{{
      {c7(3, 4, 1, 4), c7(1, 4, -1, 4), CxAlg(-1)},
      {CxAlg(1), c7(1, 4, -1, 4), c7(-3, 4, -1, 4)},
      {CxAlg(2), c7(-1, 2, -1, 2), c7(-3, 4, -1, 4)},
      {c7(9, 4, -1, 4), c7(-7, 4, -1, 4), CxAlg(-1)},
      {c7(9, 4, -1, 4), c7(-5, 2, -1, 2), CxAlg(-2)},
      {CxAlg(2), c7(-5, 2, -1, 2), c7(-9, 4, 1, 4)},
      {CxAlg(1), c7(-7, 4, -1, 4), c7(-9, 4, 1, 4)},
      {c7(3, 4, 1, 4), c7(-1, 2, -1, 2), CxAlg(-2)},
  }};
  RealAlg n0 = hnorm(d.p0);
  if (sign(n0) >= 0) throw Error(Err::InvariantViolation, "p0 is not inside the ball");
  if (!projective_equal(d.rep.G2 * d.p0, d.p0)) throw Error(Err::InvariantViolation, "p0 is not fixed by G2");
  for (int j = 0; j < 8; ++j) {
    std::string name = "r" + std::to_string(j + 1);
    if (!projective_equal(d.r[j], shown[j])) throw Error(Err::InvariantViolation, name + " differs from its display");
    if (hnorm(d.r[j]) != n0) throw Error(Err::InvariantViolation, name + " has a different norm");
    if (projective_equal(d.r[j], d.p0)) throw Error(Err::InvariantViolation, name + " equals p0");
    for (int k = 0; k < j; ++k)
      if (projective_equal(d.r[j], d.r[k])) throw Error(Err::InvariantViolation, name + " repeats");
    d.B[j] = Bisector::make(d.p0, d.r[j], std::to_string(j + 1));
  }
  for (int k = 0; k < 4; ++k) {
    HMatrix g = d.rep.G2.pow(k);
    if (!projective_equal(g * d.r[0], d.r[2 * k]) || !projective_equal(g * d.r[1], d.r[2 * k + 1]))
      throw Error(Err::InvariantViolation, "orbit points are not G2 translates of r1, r2");
  }
  return d;
}

// a resultant cascade can vanish identically for one elimination order even when the system is finite
static SolveResult solve_torus(const std::vector<MPoly>& sys, SolveOptions opt) {
  static const std::vector<std::vector<std::string>> orders = {
      {}, {"y2", "y1", "x2", "x1"}, {"y1", "y2", "x1", "x2"}, {"x2", "y2", "y1", "x1"}};
  for (size_t i = 0;; ++i) {
    opt.elimination_order = orders[i];
    try {
      return solve_system(sys, torus_box(), opt);
    } catch (const Error& e) {
      if (e.kind() != Err::NotZeroDimensional || i + 1 == orders.size()) throw;
    }
  }
}

DiskSide disk_side(const DirichletData& d, int j, int k, int m) {
  DiskSide out;
  GiraudChart ch = d.chart(j, k);
  MPoly N = norm_form(ch);
  MPoly f = trace_equation(ch, d.p0, d.rj(m));
  if (f.is_zero()) throw Error(Err::DegenerateInput, "trace vanishes identically");
  // no zeros on the whole torus: constant sign
  MuNu mn = mu_nu(f);
  auto pos = positivity_on_domain(in_first_circle(mn.discriminant(true)), Domain::UnitCircle);
  if (pos.verdict == Verdict::Positive) {
    out.side = sign(f.eval({RealAlg(1), RealAlg(0), RealAlg(1), RealAlg(0)}));
    out.method = "trace misses the torus";
    return out;
  }
  // extremes of f on the closed disk sit at interior critical points or at critical points on the boundary curve
  SolveOptions opt = torus_options();
  MPoly f1 = angle_deriv(f, 1), f2 = angle_deriv(f, 2);
  MPoly n1 = angle_deriv(N, 1), n2 = angle_deriv(N, 2);
  MPoly c1 = torus_circle(1), c2 = torus_circle(2);
  auto inner = solve_torus({f1, f2, c1, c2}, opt);
  auto bdy = solve_torus({N, reduce_torus(f1 * n2 - f2 * n1), c1, c2}, opt);
  bool nonneg = true, nonpos = true;
  for (const auto& s : inner.solutions) {
    int sn = sign_at(N, s);
    if (sn > 0) continue;
    int sf = sign_at(f, s);
    if (sf == 2 || sn == 2) throw Error(Err::CertificationFailed, "undecided sign at an interior critical point");
    out.candidates.push_back(s.box);
    if (sn < 0) {
      nonneg = nonneg && sf > 0;
      nonpos = nonpos && sf < 0;
    } else {
      nonneg = nonneg && sf >= 0;
      nonpos = nonpos && sf <= 0;
    }
  }
  for (const auto& s : bdy.solutions) {
    int sf = sign_at(f, s);
    if (sf == 2) throw Error(Err::CertificationFailed, "undecided sign at a boundary critical point");
    out.candidates.push_back(s.box);
    nonneg = nonneg && sf >= 0;
    nonpos = nonpos && sf <= 0;
  }
  out.side = nonneg ? 1 : nonpos ? -1 : 0;
  std::ostringstream os;
  os << "critical points: " << inner.solutions.size() << " on the torus, " << bdy.solutions.size()
     << " on the boundary curve";
  out.method = os.str();
  return out;
}

CheckResult tangency_row(const DirichletData& d, const std::string& vertex, const Word& stab, int i, int j) {
  return run_check("domain.tangency." + vertex, "tangent spinal spheres at a unipotent fixed point", [&](CheckResult& r) {
    HMatrix A = eval_word(stab, d.rep);
    r.absorb(tangency_by_unipotency("unipotent", A, d.p0));
    HVector a = A * d.p0, b = A.inverse() * d.p0;
    bool match = (projective_equal(a, d.rj(i)) && projective_equal(b, d.rj(j))) ||
                 (projective_equal(a, d.rj(j)) && projective_equal(b, d.rj(i)));
    r.expect(match, "{A p0, A^-1 p0} = {r" + std::to_string(i) + ", r" + std::to_string(j) + "}");
    HVector v = parabolic_fixed_point(A);
    r.expect(projective_equal(v, vertex_points(d.rep)[vertex_index(vertex)]), "fixed point is " + vertex);
  });
}

CheckResult verify_tangency_table(const DirichletData& d) {
  return run_check("domain.tangency_table", "eight tangent pairs of spinal spheres", [&](CheckResult& r) {
    for (const auto& row : vertex_table())
      r.absorb(tangency_row(d, row.name, row.stabilizer, row.tangent[0], row.tangent[1]));
  });
}

CheckResult verify_face_lattice(const DirichletData& d, FaceLattice* out) {
  return run_check("domain.face_lattice", "bisector and face intersections of the Dirichlet domain",
                   [&](CheckResult& r) {
    FaceLattice L;
    // equivariance of the index actions
    for (int j = 1; j <= 8; ++j) {
      r.expect(projective_equal(d.rep.G2 * d.rj(j), d.rj(g2_index(j))), "G2 r" + std::to_string(j));
      r.expect(projective_equal(d.I * d.rj(j), d.rj(i_index(j))), "I r" + std::to_string(j));
    }
    // pairwise intersections for one face of each I-orbit type
    auto classify_pairs = [&](int j) {
      std::set<int> nb;
      for (int k = 1; k <= 8; ++k) {
        if (k == j) continue;
        std::string tag = std::to_string(j) + "_" + std::to_string(k);
        GiraudChart ch = d.chart(j, k);
        auto w = certify_nonempty_disk("witness." + tag, ch);
        if (w.ok()) {
          nb.insert(k);
          r.witness("disk." + tag, w.witnesses);
          continue;
        }
        bool tangent = false;
        for (const auto& row : vertex_table()) {
          int a = row.tangent[0], b = row.tangent[1];
          if ((a == j && b == k) || (a == k && b == j)) {
            auto t = tangency_row(d, row.name, row.stabilizer, a, b);
            r.absorb(t);
            tangent = true;
          }
        }
        if (!tangent) r.absorb(certify_empty("empty." + tag, ch));
      }
      return nb;
    };
    std::set<int> nb1 = classify_pairs(1);
    r.expect(nb1 == std::set<int>{2, 3, 7, 8}, "B1 meets exactly " + set_str(nb1));
    // propagate with G2 and I, then re-verify the I-translate directly
    for (int s = 0; s < 4; ++s) {
      int j = 1;
      for (int t = 0; t < s; ++t) j = g2_index(j);
      std::set<int> nj, ij;
      for (int k : nb1) {
        int kk = k;
        for (int t = 0; t < s; ++t) kk = g2_index(kk);
        nj.insert(kk);
        ij.insert(i_index(kk));
      }
      L.neighbors[j] = nj;
      L.neighbors[i_index(j)] = ij;
    }
    std::set<int> nb2 = classify_pairs(2);
    r.expect(nb2 == L.neighbors[2], "direct B2 neighbors " + set_str(nb2) + " match the I-translate");
    for (int j = 1; j <= 8; ++j)
      for (int k : L.neighbors[j]) r.expect(L.neighbors[k].count(j) == 1, "neighbor relation is symmetric");

    // faces: the disk B1 cap Bk lies in E for k = 2, 8 and misses E for k = 3, 7
    auto face = [&](int j, int k, bool inside) {
      std::string tag = std::to_string(j) + "_" + std::to_string(k);
      json sides = json::object();
      bool any_out = false, all_in = true;
      for (int m = 1; m <= 8; ++m) {
        if (m == j || m == k) continue;
        DiskSide s = disk_side(d, j, k, m);
        sides[std::to_string(m)] = {{"side", s.side}, {"method", s.method}};
        any_out = any_out || s.side > 0;
        all_in = all_in && s.side < 0;
      }
      r.witness("face." + tag, sides);
      if (inside)
        r.expect(all_in, "B" + std::to_string(j) + " cap B" + std::to_string(k) + " lies in E");
      else
        r.expect(any_out, "B" + std::to_string(j) + " cap B" + std::to_string(k) + " misses E");
    };
    face(1, 2, true);
    face(1, 8, true);
    face(1, 7, false);
    face(1, 3, false);

    // ideal vertices on each face
    auto pts = vertex_points(d.rep);
    for (int j = 1; j <= 8; ++j) {
      std::set<std::string> on;
      for (int v = 0; v < 8; ++v)
        if (herm(pts[v], d.p0).norm2() == herm(pts[v], d.rj(j)).norm2()) on.insert(kVertexNames[v]);
      L.vertices[j] = on;
      const auto& tv = face_vertex_table()[j];
      std::set<std::string> want(tv.begin(), tv.end());
      r.expect(on == want, "vertices of b" + std::to_string(j) + " " + set_str(on));
    }
    json nbj = json::object();
    for (int j = 1; j <= 8; ++j) nbj[std::to_string(j)] = std::vector<int>(L.neighbors[j].begin(), L.neighbors[j].end());
    r.witness("neighbors", nbj);
    if (out) *out = L;
  });
}

CheckResult verify_side_pairings(const DirichletData& d) {
  return run_check("domain.side_pairings", "side pairings map opposite faces and their vertices", [&](CheckResult& r) {
    const auto& rep = d.rep;
    r.absorb(check_identity("g3g1g2g1", parse_word("3 1 2 1"), parse_word("2 2"), rep));
    r.absorb(check_identity("g3g2g1g2bg3", parse_word("3 2 1 2b 3"), parse_word("2 2"), rep));
    r.expect(projective_equal(eval_word(parse_word("1 2 1"), rep) * d.p0, rep.G3.inverse() * d.p0),
             "G1 G2 G1 p0 = G3^-1 p0");
    r.expect(projective_equal(eval_word(parse_word("1 2b 3"), rep) * d.p0, eval_word(parse_word("2b 3b"), rep) * d.p0),
             "G1 G2^-1 G3 p0 = G2^-1 G3^-1 p0");
    r.expect(projective_equal(rep.G1 * d.p0, d.rj(1)), "G1 p0 = r1");
    auto pts = vertex_points(rep);
    // each face element maps the vertices of the opposite face onto its own, in table order
    for (int j = 1; j <= 8; ++j) {
      HMatrix g = eval_word(d.words[j - 1], rep);
      int opp = 0;
      for (int k = 1; k <= 8; ++k)
        if (projective_equal(g.inverse() * d.p0, d.rj(k))) opp = k;
      std::string tag = "b" + std::to_string(opp) + " -> b" + std::to_string(j);
      if (!r.expect(opp != 0, "opposite face of b" + std::to_string(j))) continue;
      r.expect(projective_equal(eval_word(d.words[opp - 1], rep), g.inverse()), tag + " elements are inverse");
      const auto& from = face_vertex_table()[opp];
      const auto& to = face_vertex_table()[j];
      for (int i = 0; i < 4; ++i)
        r.expect(projective_equal(g * pts[vertex_index(from[i])], pts[vertex_index(to[i])]),
                 tag + ": " + from[i] + " -> " + to[i]);
      // the pairing carries the bisector of the opposite face onto B_j
      r.expect(projective_equal(g * d.p0, d.rj(j)), tag + ": p0 -> r" + std::to_string(j));
    }
  });
}

CheckResult verify_cycles(const DirichletData& d) {
  return run_check("domain.cycles", "ridge cycles of order three and parabolic vertex cycles", [&](CheckResult& r) {
    const auto& rep = d.rep;
    r.absorb(check_relation("(g1g2)^3", parse_word("1 2 1 2 1 2"), rep));
    r.absorb(check_relation("(g1g2^2)^3", parse_word("1 2 2 1 2 2 1 2 2"), rep));
    r.expect(!projective_equal(rep.G1 * rep.G2, HMatrix::identity()), "G1 G2 is not trivial");
    r.expect(projective_order(rep.G1 * rep.G2, 24) == 3, "G1 G2 has order exactly 3");
    auto cyclic = [&](const std::string& name, const HMatrix& T, const std::array<HVector, 3>& pts) {
      for (int i = 0; i < 3; ++i)
        r.expect(projective_equal(T * pts[i], pts[(i + 1) % 3]), name + " permutes the ridge triple cyclically");
    };
    // B1 cap B2 is equidistant from p0, r1, r2
    cyclic("G1 G2", rep.G1 * rep.G2, {d.p0, d.rj(1), d.rj(2)});
    HVector g3g1p0 = rep.G3 * rep.G1 * d.p0;
    r.expect(projective_equal(g3g1p0, d.rj(8)), "G3 G1 p0 = r8");
    cyclic("G1 G2^2", rep.G1 * rep.G2 * rep.G2, {d.p0, d.rj(1), g3g1p0});
    auto pts = vertex_points(rep);
    r.expect(projective_equal(rep.G3 * pts[0], pts[6]), "G3 p1 = q3");
    r.expect(classify(rep.G1).kind == IsometryClass::UnipotentParabolic, "cycle transformation at p1 is parabolic");
    HMatrix s = rep.G2.inverse() * rep.G3;
    r.expect(classify(s).kind == IsometryClass::UnipotentParabolic, "cycle transformation at q1 is parabolic");
    r.expect(projective_equal(s * pts[4], pts[4]), "G2^-1 G3 fixes q1");
  });
}

CheckResult verify_torsion(const DirichletData& d) {
  return run_check("domain.torsion", "torsion elements are conjugate into the center stabilizer", [&](CheckResult& r) {
    const auto& rep = d.rep;
    auto expect_class = [&](const std::string& name, const HMatrix& m, IsometryClass want) {
      IsometryClass got = classify(m);
      r.expect(got == want, name + " is " + got.str());
      r.witness(name, got.str());
    };
    expect_class("G2", rep.G2, {IsometryClass::RegularElliptic, 4});
    expect_class("G2^2", rep.G2 * rep.G2, {IsometryClass::ComplexReflectionPoint, 2});
    expect_class("G1G2", rep.G1 * rep.G2, {IsometryClass::RegularElliptic, 3});
    expect_class("G1G2^2", rep.G1 * rep.G2 * rep.G2, {IsometryClass::RegularElliptic, 3});
    expect_class("Id", HMatrix::identity(), {IsometryClass::Identity, 1});
  });
}

CheckResult verify_b8_trace(const DirichletData& d) {
  return run_check("domain.b8_trace", "trace of B8 on the B1 cap B7 Giraud torus", [&](CheckResult& r) {
    GiraudChart ch = d.chart(1, 7);
    MPoly N = norm_form(ch), f8 = trace_equation(ch, d.p0, d.rj(8));
    const auto& V = torus_vars();
    SolveOptions opt = torus_options();
    // boundary contact: the two vertices p2 and q3
    auto sol = solve_system({N, f8, torus_circle(1), torus_circle(2)}, torus_box(), opt);
    r.expect(sol.solutions.size() == 2, "boundary system has " + std::to_string(sol.solutions.size()) + " solutions");
    std::vector<std::vector<RealAlg>> want{{RealAlg(1), RealAlg(0), rq(3, 4), rq(1, 4) * sq(7)},
                                           {rq(3, 4), rq(-1, 4) * sq(7), RealAlg(1), RealAlg(0)}};
    for (const auto& w : want) {
      bool found = false;
      for (const auto& s : sol.solutions) found = found || (s.exact && *s.exact == w);
      r.expect(found, "exact boundary point found");
    }
    json pts = json::array();
    for (const auto& s : sol.solutions) pts.push_back(box_json(s));
    r.witness("boundary_points", pts);
    // tangency with the B2 curve at p2
    auto p2 = want[1];
    auto g8 = angle_gradient(f8, p2), gn = angle_gradient(N, p2);
    r.expect((g8.first * gn.second - g8.second * gn.first).is_zero(), "B8 trace tangent to the disk boundary at p2");
    auto q3 = want[0];
    g8 = angle_gradient(f8, q3);
    gn = angle_gradient(N, q3);
    r.expect((g8.first * gn.second - g8.second * gn.first).is_zero(), "B8 trace tangent to the disk boundary at q3");
    // endpoints of the z1 parameter range
    MuNu mn = mu_nu(f8);
    MPoly h = in_first_circle(mn.discriminant(true));
    const auto& W = h.vars();
    MPoly circ = MPoly::var(W, "x1") * MPoly::var(W, "x1") + MPoly::var(W, "y1") * MPoly::var(W, "y1") -
                 MPoly::constant(W, 1);
    SolveOptions o2;
    o2.square_rules = {{"y1", MPoly::constant(W, 1) - MPoly::var(W, "x1") * MPoly::var(W, "x1")}};
    auto ends = solve_system({h, circ}, {RationalInterval(Q(-1), Q(1)), RationalInterval(Q(-1), Q(1))}, o2);
    r.expect(ends.solutions.size() == 2, "two endpoints of the parameter range");
    RealAlg ex = rq(5, 8) * sq(2), ey = rq(-1, 8) * sq(14);
    json args = json::array();
    for (const auto& s : ends.solutions) {
      bool hit = s.exact && (((*s.exact)[0] == ex && (*s.exact)[1] == ey) || ((*s.exact)[0] == -ex && (*s.exact)[1] == -ey));
      r.expect(hit, "endpoint is +-(5 - i sqrt7)/(4 sqrt2)");
      if (s.exact) {
        double a = std::atan2((*s.exact)[1].to_double(), (*s.exact)[0].to_double()) / (2 * M_PI);
        args.push_back(a);
        r.expect(std::abs(a - (-0.07745991)) < 1e-6 || std::abs(a - 0.42254009) < 1e-6, "endpoint argument");
      }
    }
    r.witness("endpoint_args", args);
    // the diagonal z2 = tau z1 lies in the trace and outside the ball
    CxAlg tau = c7(-9, 16, -5, 16);
    CPoly z1 = CPoly::unit(V, "x1", "y1");
    CPoly z2 = tau * z1;
    MPoly on_diag = reduce_torus(f8.subst(3, z2.im).subst(2, z2.re));
    MPoly n_diag = reduce_torus(N.subst(3, z2.im).subst(2, z2.re));
    r.expect(on_diag.is_zero(), "f8 vanishes on z2 = tau z1");
    r.expect(n_diag == MPoly::constant(V, rq(189, 32)), "norm on the diagonal is 189/32");
    r.witness("tau", to_json(tau));
  });
}

}  // namespace cruv
