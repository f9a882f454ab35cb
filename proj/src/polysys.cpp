#include "cruv/polysys.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cruv {

namespace {

int sign_at(const UPoly& p, const Q& x) {
  int s = p.eval(RationalInterval(x), 128).sign();
  if (s) return s;
  return sign(p.eval(x));
}

// sign of p just right (side = +1) or left (side = -1) of x
int side_sign(const UPoly& p, const Q& x, int side) {
  UPoly d = p;
  for (int k = 0; !d.is_zero(); ++k) {
    int s = sign_at(d, x);
    if (s) return (side < 0 && k % 2) ? -s : s;
    d = d.deriv();
  }
  return 0;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p.primitive(), p.deriv().primitive()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    UPoly neg;
    neg.var = r.var;
    neg = neg - r;
    seq.push_back(neg.primitive());
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<UPoly>& seq, const Q& x, int side) {
  int prev = 0, v = 0;
  for (const auto& s : seq) {
    int g = side_sign(s, x, side);
    if (!g) continue;
    if (prev && g != prev) ++v;
    prev = g;
  }
  return v;
}

}  // namespace

Q root_bound(const UPoly& p) {
  if (p.degree() < 1) return Q(1);
  RationalInterval lead = enclose_bits(p.lead(), 64);
  Q lmin = std::min(Q(abs(lead.lo)), Q(abs(lead.hi)));
  if (lead.has_zero()) lmin = abs(enclose(p.lead(), abs(lead.mid()) / 4).mid()) / 2;
  Q m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    RationalInterval c = enclose_bits(p.c[k], 64);
    m = std::max(m, std::max(Q(abs(c.lo)), Q(abs(c.hi))));
  }
  return 1 + m / lmin;
}

int sturm_count(const UPoly& p, const RationalInterval& open) {
  if (p.is_zero()) throw Error(Err::ZeroPolynomial, "sturm_count of zero polynomial");
  if (p.degree() == 0 || open.lo >= open.hi) return 0;
  auto seq = sturm_sequence(squarefree_part(p));
  return variations(seq, open.lo, +1) - variations(seq, open.hi, -1);
}

std::vector<RealAlg> exact_roots_low_degree(const UPoly& p, const FieldConfig& cfg) {
  std::vector<RealAlg> out;
  if (p.degree() == 1) {
    out.push_back(-p.c[0] / p.c[1]);
  } else if (p.degree() == 2) {
    RealAlg disc = p.c[1] * p.c[1] - RealAlg(4) * p.c[2] * p.c[0];
    int s = sign(disc, cfg);
    RealAlg inv = (RealAlg(2) * p.c[2]).inverse();
    if (s == 0) {
      out.push_back(-p.c[1] * inv);
    } else if (s > 0) {
      if (auto r = try_sqrt(disc, cfg)) {
        out.push_back((-p.c[1] - *r) * inv);
        out.push_back((-p.c[1] + *r) * inv);
        if (cmp(out[0], out[1], cfg) > 0) std::swap(out[0], out[1]);
      }
    }
  }
  return out;
}

void refine(IsolatedRoot& r, const Q& width) {
  if (r.interval.width() <= width) return;
  if (r.exact) {
    RationalInterval e = enclose(*r.exact, width);
    r.interval = {std::max(e.lo, r.interval.lo), std::min(e.hi, r.interval.hi)};
    return;
  }
  while (r.interval.width() > width) {
    Q m = r.interval.mid();
    int s = sign_at(r.defining_poly, m);
    if (s == 0) {
      r.exact = RealAlg(m);
      r.interval = RationalInterval(m);
      return;
    }
    if (s == r.sign_lo)
      r.interval.lo = m;
    else
      r.interval.hi = m;
  }
}

std::vector<IsolatedRoot> isolate_roots(const UPoly& p, const RationalInterval& closed, const Q& width) {
  if (p.is_zero()) throw Error(Err::ZeroPolynomial, "isolate_roots of zero polynomial");
  std::vector<IsolatedRoot> out;
  const Q& a = closed.lo;
  const Q& b = closed.hi;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    std::vector<IsolatedRoot> rs;
    auto point_root = [&](const Q& x) {
      IsolatedRoot r;
      r.interval = RationalInterval(x);
      r.defining_poly = f;
      r.multiplicity_hint = mult;
      r.exact = RealAlg(x);
      rs.push_back(r);
    };
    if (sign(f.eval(a)) == 0) point_root(a);
    if (b != a && sign(f.eval(b)) == 0) point_root(b);
    if (a < b) {
      auto seq = sturm_sequence(f);
      struct Span {
        Q l, r;
        int k;
      };
      std::vector<Span> stack{{a, b, variations(seq, a, +1) - variations(seq, b, -1)}};
      while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (s.k <= 0) continue;
        if (s.k == 1) {
          IsolatedRoot r;
          r.interval = {s.l, s.r};
          r.defining_poly = f;
          r.multiplicity_hint = mult;
          r.sign_lo = side_sign(f, s.l, +1);
          refine(r, width);
          rs.push_back(r);
          continue;
        }
        Q m = (s.l + s.r) / 2;
        if (sign(f.eval(m)) == 0) point_root(m);
        int vm_left = variations(seq, m, -1), vm_right = variations(seq, m, +1);
        stack.push_back({s.l, m, variations(seq, s.l, +1) - vm_left});
        stack.push_back({m, s.r, vm_right - variations(seq, s.r, -1)});
      }
    }
    if (f.degree() <= 2) {
      for (const RealAlg& e : exact_roots_low_degree(f)) {
        for (auto& r : rs) {
          if (r.exact) continue;
          if (sign(e - RealAlg(r.interval.lo)) > 0 && sign(RealAlg(r.interval.hi) - e) > 0) r.exact = e;
        }
      }
    }
    out.insert(out.end(), rs.begin(), rs.end());
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.interval.lo < y.interval.lo; });
  return out;
}

// ---- elimination

namespace {

std::vector<MPoly> dedupe(std::vector<MPoly> ps) {
  std::vector<MPoly> out;
  for (auto& p : ps) {
    if (p.is_zero()) continue;
    bool dup = false;
    for (const auto& q : out)
      if (q == p || q == -p) dup = true;
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

MPoly apply_rules(MPoly p, const SolveOptions& opt, const std::set<std::string>& eliminated) {
  for (const auto& [v, repl] : opt.square_rules) {
    bool ok = true;
    for (int i : repl.used_vars())
      if (eliminated.count(repl.vars()[i])) ok = false;
    if (!ok || eliminated.count(v)) continue;
    p = p.reduce_square(p.index(v), repl);
  }
  return p;
}

}  // namespace

UPoly eliminant(const std::vector<MPoly>& polys, const std::string& target, const SolveOptions& opt) {
  if (polys.empty()) throw Error(Err::NotZeroDimensional, "empty system");
  const auto& vars = polys[0].vars();
  std::vector<std::string> order = opt.elimination_order;
  if (order.empty()) order.assign(vars.rbegin(), vars.rend());
  for (const auto& v : vars)
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  std::vector<MPoly> cur = dedupe(polys);
  std::set<std::string> eliminated;
  for (const auto& v : order) {
    if (v == target) continue;
    int vi = polys[0].index(v);
    std::vector<MPoly> S, R;
    for (auto& p : cur) (p.depends_on(vi) ? S : R).push_back(p);
    eliminated.insert(v);
    if (S.size() <= 1) {
      cur = R;
      continue;
    }
    std::stable_sort(S.begin(), S.end(),
                     [&](const MPoly& x, const MPoly& y) { return x.degree(vi) < y.degree(vi); });
    std::vector<MPoly> best;
    for (size_t pi = 0; pi < S.size(); ++pi) {
      std::vector<MPoly> res;
      for (size_t j = 0; j < S.size(); ++j) {
        if (j == pi) continue;
        MPoly r = resultant(S[pi], S[j], vi);
        r = apply_rules(r, opt, eliminated);
        if (!r.is_zero()) res.push_back(r.primitive());
      }
      if (res.size() > best.size()) best = res;
      if (best.size() == S.size() - 1) break;
    }
    if (best.empty()) throw Error(Err::NotZeroDimensional, "every resultant in " + v + " vanishes identically");
    R.insert(R.end(), best.begin(), best.end());
    cur = dedupe(R);
  }
  int ti = polys[0].index(target);
  std::optional<UPoly> g;
  for (const auto& p : cur) {
    for (int i : p.used_vars())
      if (i != ti) throw Error(Err::InvariantViolation, "elimination left variable " + vars[i]);
    UPoly u = UPoly::from(p, ti);
    g = g ? gcd(*g, u) : u.primitive();
  }
  if (!g) throw Error(Err::NotZeroDimensional, "no constraint left on " + target);
  return g->primitive();
}

// ---- Krawczyk

namespace {

unsigned bits_for(const std::vector<RationalInterval>& box) {
  Q w = 0;
  for (const auto& iv : box) w = std::max(w, iv.width());
  unsigned b = 64;
  if (w > 0) {
    long e = 0;
    double d = mpq_get_d(w.get_mpq_t());
    if (d > 0) e = std::lround(-std::log2(d));
    if (e > 0) b = std::max<long>(64, 2 * e + 48);
  }
  return b;
}

bool invert_double(std::vector<std::vector<double>> a, std::vector<std::vector<double>>& inv) {
  int n = static_cast<int>(a.size());
  inv.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0 || !std::isfinite(a[piv][c])) return false;
    std::swap(a[c], a[piv]);
    std::swap(inv[c], inv[piv]);
    double d = a[c][c];
    for (int k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[r][c];
      if (f == 0.0) continue;
      for (int k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return true;
}

// one Krawczyk step; returns K(X) or nullopt when the Jacobian midpoint is singular
std::optional<std::vector<RationalInterval>> krawczyk_image(const std::vector<MPoly>& polys,
                                                            const std::vector<RationalInterval>& X,
                                                            unsigned bits) {
  int n = static_cast<int>(X.size());
  std::vector<RationalInterval> m(n), d(n);
  for (int i = 0; i < n; ++i) {
    Q mid = round_down(X[i].mid(), bits);
    if (!X[i].contains(mid)) mid = X[i].lo;
    m[i] = RationalInterval(mid);
    d[i] = X[i] - m[i];
  }
  std::vector<RationalInterval> F(n);
  std::vector<std::vector<RationalInterval>> J(n, std::vector<RationalInterval>(n));
  std::vector<std::vector<double>> Jm(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    F[i] = IntervalPoly(polys[i], bits).eval(m);
    for (int j = 0; j < n; ++j) {
      J[i][j] = IntervalPoly(polys[i].deriv(j), bits).eval(X);
      Jm[i][j] = J[i][j].mid().get_d();
    }
  }
  std::vector<std::vector<double>> Yd;
  if (!invert_double(Jm, Yd)) return std::nullopt;
  std::vector<std::vector<Q>> Y(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(Yd[i][j])) return std::nullopt;
      Y[i][j] = Q(Yd[i][j]);
    }
  std::vector<RationalInterval> K(n);
  for (int i = 0; i < n; ++i) {
    RationalInterval k = m[i];
    for (int j = 0; j < n; ++j) k -= (RationalInterval(Y[i][j]) * F[j]).rounded(bits);
    for (int j = 0; j < n; ++j) {
      RationalInterval c(Q(i == j ? 1 : 0));
      for (int l = 0; l < n; ++l) c -= (RationalInterval(Y[i][l]) * J[l][j]).rounded(bits);
      k += (c * d[j]).rounded(bits);
    }
    K[i] = k;
  }
  return K;
}

}  // namespace

bool krawczyk(const std::vector<MPoly>& polys, const std::vector<RationalInterval>& box, unsigned bits) {
  if (polys.size() != box.size()) return false;
  auto K = krawczyk_image(polys, box, bits);
  if (!K) return false;
  for (size_t i = 0; i < box.size(); ++i)
    if (!(*K)[i].strictly_inside(box[i])) return false;
  return true;
}

int sign_at(const MPoly& p, const SolutionBox& s) {
  if (s.exact) return sign(p.eval(*s.exact));
  for (unsigned bits : {128u, 512u, 2048u}) {
    int sg = IntervalPoly(p, bits).eval(s.box).sign();
    if (sg != 0) return sg;
  }
  return 2;
}

int count_roots_between(const UPoly& p, const RealAlg& lo, const RealAlg& hi) {
  auto in = [](const RealAlg& x, const RationalInterval& iv) {
    return sign(x - RealAlg(iv.lo)) >= 0 && sign(RealAlg(iv.hi) - x) >= 0;
  };
  RationalInterval elo = enclose(lo, Q(1, 1 << 20)), ehi = enclose(hi, Q(1, 1 << 20));
  Q width(1, 1 << 12);
  auto roots = isolate_roots(p, RationalInterval(elo.lo - 1, ehi.hi + 1), width);
  bool zlo = p.eval(lo).is_zero(), zhi = p.eval(hi).is_zero();
  int n = 0;
  for (auto& r : roots) {
    // an isolating interval holding an endpoint that is itself a root holds exactly that root
    if ((zlo && in(lo, r.interval)) || (zhi && in(hi, r.interval))) continue;
    for (int round = 0;; ++round) {
      const auto& iv = r.interval;
      if (sign(RealAlg(iv.hi) - lo) < 0 || sign(RealAlg(iv.lo) - hi) > 0) break;
      if (sign(RealAlg(iv.lo) - lo) > 0 && sign(RealAlg(iv.hi) - hi) < 0) {
        ++n;
        break;
      }
      if (round > 40) throw Error(Err::PrecisionExhausted, "root too close to an interval endpoint");
      width /= 1 << 8;
      refine(r, width);
    }
  }
  return n;
}

bool recertify_shrunk(const std::vector<MPoly>& polys, const SolutionBox& s, const Q& factor) {
  if (!s.certified) return false;
  if (s.exact) {
    for (const auto& p : polys)
      if (!p.eval(*s.exact).is_zero()) return false;
    for (size_t i = 0; i < s.box.size(); ++i) {
      RationalInterval e = enclose((*s.exact)[i], s.box[i].width() * factor + Q(1, 1 << 30));
      if (!e.overlaps(s.box[i])) return false;
    }
    return true;
  }
  std::vector<RationalInterval> X = s.box;
  Q target = 0;
  for (const auto& iv : X) target = std::max(target, Q(iv.width() * factor));
  for (int round = 0; round < 60; ++round) {
    Q w = 0;
    for (const auto& iv : X) w = std::max(w, iv.width());
    if (w <= target) return krawczyk(polys, X, bits_for(X));
    auto K = krawczyk_image(polys, X, bits_for(X));
    if (!K) return false;
    for (size_t i = 0; i < X.size(); ++i) {
      Q lo = std::max(X[i].lo, (*K)[i].lo), hi = std::min(X[i].hi, (*K)[i].hi);
      if (lo > hi) return false;
      X[i] = {lo, hi};
    }
  }
  return false;
}

// ---- system solving

namespace {

bool in_interval(const RealAlg& v, const IsolatedRoot& r) {
  if (r.exact) return *r.exact == v;
  if (r.interval.is_point()) return v == RealAlg(r.interval.lo);
  return sign(v - RealAlg(r.interval.lo)) > 0 && sign(RealAlg(r.interval.hi) - v) > 0;
}

struct Solver {
  const std::vector<MPoly>& polys;
  const SolveOptions& opt;
  std::vector<std::string> vars;
  int n;
  std::vector<std::vector<IsolatedRoot>> roots;
  std::vector<std::vector<RealAlg>> hints;

  std::vector<RationalInterval> box_of(const std::vector<int>& c) const {
    std::vector<RationalInterval> X(n, RationalInterval(Q(0)));
    for (size_t i = 0; i < c.size(); ++i) X[i] = roots[i][c[i]].interval;
    return X;
  }

  // roots are shared between candidates, so refinement targets absolute widths opt.width / 2^level
  void refine_all(const std::vector<int>& c, const std::vector<int>& which, int level) {
    Q target = opt.width / Q(Z(1) << level);
    for (int i : which) refine(roots[i][c[i]], target);
  }

  // -1 excluded, 0 undecided, +1 exact zero
  int test_poly(const MPoly& p, const std::vector<int>& c, int rounds) {
    std::vector<int> used = p.used_vars();
    for (int round = 0; round <= rounds; ++round) {
      std::vector<RationalInterval> X = box_of(c);
      if (IntervalPoly(p, bits_for(X)).eval(X).sign() != 0) return -1;
      bool all_exact = true;
      std::vector<RealAlg> pt(n);
      for (int i : used) {
        if (roots[i][c[i]].exact)
          pt[i] = *roots[i][c[i]].exact;
        else
          all_exact = false;
      }
      if (all_exact) return p.eval(pt).is_zero() ? 1 : -1;
      if (round < rounds) refine_all(c, used, 12 * (round + 1));
    }
    return 0;
  }

  bool excluded_prefix(const std::vector<int>& c) {
    int k = static_cast<int>(c.size()) - 1;
    for (const auto& p : polys) {
      auto used = p.used_vars();
      if (used.empty() || used.back() != k) continue;
      if (test_poly(p, c, 3) < 0) return true;
    }
    return false;
  }

  void exact_complete(std::vector<std::optional<RealAlg>>& ex, const std::vector<int>& c) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int v = 0; v < n; ++v) {
        if (ex[v]) continue;
        std::optional<UPoly> g;
        for (const auto& p : polys) {
          MPoly q = p;
          for (int u = 0; u < n; ++u)
            if (ex[u] && q.depends_on(u)) q = q.subst_value(u, *ex[u]);
          auto used = q.used_vars();
          if (used.size() != 1 || used[0] != v) continue;
          UPoly u = UPoly::from(q, v);
          g = g ? gcd(*g, u) : u;
        }
        if (!g || g->degree() < 1 || g->degree() > 2) continue;
        for (const RealAlg& e : exact_roots_low_degree(*g, opt.cfg))
          if (in_interval(e, roots[v][c[v]])) {
            ex[v] = e;
            progress = true;
            break;
          }
      }
    }
  }

  // returns: 1 certified (s filled), 0 not a solution
  int certify(const std::vector<int>& c, SolutionBox& s) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int round = 0; round <= opt.max_rounds; ++round) {
      std::vector<std::optional<RealAlg>> ex(n);
      for (int i = 0; i < n; ++i)
        if (roots[i][c[i]].exact) ex[i] = roots[i][c[i]].exact;
      for (const auto& h : hints) {
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) inside = in_interval(h[i], roots[i][c[i]]);
        if (inside)
          for (int i = 0; i < n; ++i) ex[i] = h[i];
      }
      exact_complete(ex, c);
      if (std::all_of(ex.begin(), ex.end(), [](const auto& e) { return e.has_value(); })) {
        std::vector<RealAlg> pt(n);
        for (int i = 0; i < n; ++i) pt[i] = *ex[i];
        for (const auto& p : polys)
          if (!p.eval(pt).is_zero()) return 0;
        s.box = box_of(c);
        s.exact = pt;
        s.certified = true;
        s.method = "exact";
        return 1;
      }
      std::vector<RationalInterval> X = box_of(c);
      unsigned bits = bits_for(X);
      for (const auto& p : polys)
        if (IntervalPoly(p, bits).eval(X).sign() != 0) return 0;
      if (static_cast<int>(polys.size()) == n) {
        // point coordinates get a small neighbourhood that stays clear of sibling roots
        std::vector<RationalInterval> Y = X;
        bool clear = true;
        for (int i = 0; i < n; ++i) {
          if (!Y[i].is_point()) continue;
          Q eps = Q(1, Z(1) << (bits / 2));
          Y[i] = {Y[i].lo - eps, Y[i].hi + eps};
          for (size_t j = 0; j < roots[i].size(); ++j)
            if (static_cast<int>(j) != c[i] && roots[i][j].interval.overlaps(Y[i])) clear = false;
        }
        if (clear && krawczyk(polys, Y, bits_for(Y))) {
          s.box = Y;
          s.certified = true;
          s.method = "krawczyk";
          return 1;
        }
      }
      refine_all(c, all, 10 * (round + 1));
    }
    std::string desc;
    for (int i = 0; i < n; ++i) desc += (i ? ", " : "") + vars[i] + "=" + decimal(roots[i][c[i]].interval.mid(), 8);
    throw Error(Err::CertificationFailed, "candidate (" + desc + ") neither excluded nor certified");
  }
};

}  // namespace

SolveResult solve_system(const std::vector<MPoly>& polys_in, const std::vector<RationalInterval>& box,
                         const SolveOptions& opt) {
  std::vector<MPoly> polys;
  for (const auto& p : polys_in)
    if (!p.is_zero()) polys.push_back(p);
  if (polys.empty()) throw Error(Err::NotZeroDimensional, "no nonzero equations");
  SolveResult res;
  res.vars = polys[0].vars();
  int n = static_cast<int>(res.vars.size());
  if (static_cast<int>(box.size()) != n) throw Error(Err::InvariantViolation, "box dimension mismatch");
  for (const auto& p : polys)
    if (p.vars() != res.vars) throw Error(Err::InvariantViolation, "mixed variable lists in system");

  Solver S{polys, opt, res.vars, n, {}, {}};
  for (const auto& h : opt.hints) {
    if (static_cast<int>(h.size()) != n) continue;
    bool ok = std::all_of(polys.begin(), polys.end(), [&](const MPoly& p) { return p.eval(h).is_zero(); });
    if (ok) S.hints.push_back(h);
  }
  for (int i = 0; i < n; ++i) {
    UPoly e = eliminant(polys, res.vars[i], opt);
    res.eliminants.push_back(e);
    if (e.degree() == 0) return res;
    S.roots.push_back(isolate_roots(e, box[i], opt.width));
  }
  std::vector<std::vector<int>> cands{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& c : cands)
      for (int r = 0; r < static_cast<int>(S.roots[i].size()); ++r) {
        std::vector<int> d = c;
        d.push_back(r);
        if (!S.excluded_prefix(d)) next.push_back(d);
      }
    cands = std::move(next);
  }
  res.candidates = static_cast<int>(cands.size());
  for (const auto& c : cands) {
    SolutionBox s;
    if (S.certify(c, s)) res.solutions.push_back(s);
  }
  return res;
}

// ---- positivity

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "Positive";
    case Verdict::NonnegativeWithZeros: return "NonnegativeWithZeros";
    case Verdict::Indefinite: return "Indefinite";
  }
  return "?";
}

namespace {

// sign of a + sigma*sqrt(q)*b, q > 0 rational
int sign_with_root(const RealAlg& a, const RealAlg& b, const Q& q, int sigma) {
  int sa = sign(a), sb = sigma * sign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  RealAlg d = a * a - RealAlg(q) * b * b;
  return sign(d) * sa;
}

RationalInterval sqrt_interval(const Q& q, unsigned bits) {
  if (q <= 0) return RationalInterval(Q(0));
  Z num = q.get_num() << (2 * bits);
  Z v;
  mpz_fdiv_q(v.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  Z s;
  mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
  Q lo(s, Z(1) << bits), hi(s + 1, Z(1) << bits);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

PositivityResult circle_positivity(const MPoly& f, const FieldConfig& cfg) {
  PositivityResult out;
  const auto& vars = f.vars();
  MPoly x = MPoly::var(vars, vars[0]);
  MPoly one = MPoly::constant(vars, RealAlg(1));
  MPoly g = f.reduce_square(1, one - x * x);
  auto cs = g.coeffs_in(1);
  MPoly A = cs[0], B = cs.size() > 1 ? cs[1] : MPoly(vars);
  UPoly Au = UPoly::from(A, 0), Bu = UPoly::from(B, 0);
  UPoly w({RealAlg(1), RealAlg(), RealAlg(-1)}, vars[0]);
  UPoly R = Au * Au - w * Bu * Bu;
  out.certificate = "A^2-(1-x^2)B^2 = " + R.str();
  if (R.is_zero()) {
    out.verdict = Verdict::NonnegativeWithZeros;
    out.zeros.push_back({RationalInterval(Q(-1), Q(1)), RationalInterval(Q(-1), Q(1))});
    out.certificate = "vanishes on the whole circle";
    return out;
  }
  auto roots = isolate_roots(R, RationalInterval(Q(-1), Q(1)), Q(1, 1 << 30));
  if (roots.empty()) {
    int s = sign(Au.eval(Q(1)), cfg);
    out.verdict = s > 0 ? Verdict::Positive : Verdict::Indefinite;
    if (s <= 0) out.witness = {{RationalInterval(Q(1)), RationalInterval(Q(0))}};
    out.certificate += "; no roots in [-1,1]; f(1,0) sign " + std::to_string(s);
    return out;
  }
  for (const auto& r : roots) {
    RationalInterval X = r.interval;
    RationalInterval ysq = (RationalInterval(Q(1)) - X.sqr()).rounded(64);
    Q top = std::max(ysq.hi, Q(0));
    RationalInterval Y = sqrt_interval(top, 64);
    // y of the zero is -A/B when B does not vanish there
    RationalInterval a = Au.eval(X, 96), b = Bu.eval(X, 96);
    int sy = 0;
    if (b.sign() != 0 && a.sign() != 0) sy = -a.sign() * b.sign();
    if (sy > 0)
      out.zeros.push_back({X, RationalInterval(Q(0), Y.hi)});
    else if (sy < 0)
      out.zeros.push_back({X, RationalInterval(-Y.hi, Q(0))});
    else
      out.zeros.push_back({X, RationalInterval(-Y.hi, Y.hi)});
  }
  // sample every arc between consecutive zeros on both branches, plus (+-1, 0)
  std::vector<Q> samples;
  Q prev = -1;
  for (const auto& r : roots) {
    if (r.interval.lo > prev) samples.push_back((prev + r.interval.lo) / 2);
    prev = r.interval.hi;
  }
  if (prev < 1) samples.push_back((prev + 1) / 2);
  bool negative = false;
  std::pair<RationalInterval, RationalInterval> wit;
  for (const Q& s : samples) {
    if (s <= -1 || s >= 1) continue;
    Q q = 1 - s * s;
    RealAlg a = Au.eval(s), b = Bu.eval(s);
    for (int sigma : {1, -1}) {
      if (sign_with_root(a, b, q, sigma) < 0 && !negative) {
        negative = true;
        RationalInterval y = sqrt_interval(q, 64);
        wit = {RationalInterval(s), sigma > 0 ? y : -y};
      }
    }
  }
  for (int e : {1, -1}) {
    if (negative) break;
    int s = sign(Au.eval(Q(e)), cfg);
    if (s < 0) {
      negative = true;
      wit = {RationalInterval(Q(e)), RationalInterval(Q(0))};
    }
  }
  out.verdict = negative ? Verdict::Indefinite : Verdict::NonnegativeWithZeros;
  if (negative) out.witness = wit;
  out.certificate += "; " + std::to_string(roots.size()) + " zero abscissae on [-1,1]";
  return out;
}

}  // namespace

PositivityResult positivity_on_domain(const MPoly& f, Domain d, const FieldConfig& cfg) {
  if (f.nvars() != 2) throw Error(Err::DegenerateDomain, "positivity needs a bivariate polynomial");
  PositivityResult circ = circle_positivity(f, cfg);
  if (d == Domain::UnitCircle || circ.verdict == Verdict::Indefinite) return circ;

  PositivityResult out = circ;
  MPoly fx = f.deriv(0), fy = f.deriv(1);
  std::vector<RealAlg> crit_values;
  std::vector<std::pair<RationalInterval, RationalInterval>> crit_boxes;
  int negatives = 0, zeros = 0;
  auto record = [&](int s, const RationalInterval& X, const RationalInterval& Y) {
    if (s < 0) {
      ++negatives;
      if (!out.witness) out.witness = {{X, Y}};
    } else if (s == 0) {
      ++zeros;
      out.zeros.push_back({X, Y});
    }
  };
  if (fx.is_zero() && fy.is_zero()) {
    int s = sign(f.constant_term(), cfg);
    record(s, RationalInterval(Q(0)), RationalInterval(Q(0)));
  } else if (fx.is_zero() || fy.is_zero()) {
    // f depends on one variable only; its interior critical set is a chord
    int v = fx.is_zero() ? 1 : 0;
    UPoly fu = UPoly::from(f, v), du = fu.deriv();
    for (auto& r : isolate_roots(du, RationalInterval(Q(-1), Q(1)), Q(1, 1 << 30))) {
      if (r.interval.lo <= -1 || r.interval.hi >= 1) {
        if (r.exact && (cmp(*r.exact, RealAlg(1)) == 0 || cmp(*r.exact, RealAlg(-1)) == 0)) continue;
      }
      int s;
      if (r.exact) {
        s = sign(fu.eval(*r.exact), cfg);
      } else {
        s = 0;
        for (int k = 0; k < 30 && s == 0; ++k) {
          s = fu.eval(r.interval, 128).sign();
          if (!s) refine(r, r.interval.width() / 1024);
        }
        if (!s) throw Error(Err::CertificationFailed, "critical value sign undecided");
      }
      RationalInterval other(Q(0));
      record(s, v == 0 ? r.interval : other, v == 0 ? other : r.interval);
    }
  } else {
    SolveOptions opt;
    opt.cfg = cfg;
    SolveResult sr = solve_system({fx, fy}, {RationalInterval(Q(-1), Q(1)), RationalInterval(Q(-1), Q(1))}, opt);
    for (auto& s : sr.solutions) {
      if (s.exact) {
        const auto& p = *s.exact;
        RealAlg r2 = p[0] * p[0] + p[1] * p[1];
        if (cmp(r2, RealAlg(1), cfg) >= 0) continue;
        record(sign(f.eval(p), cfg), s.box[0], s.box[1]);
        continue;
      }
      std::vector<MPoly> sys{fx, fy};
      std::vector<RationalInterval> X = s.box;
      MPoly r2 = MPoly::var(f.vars(), f.vars()[0]).pow(2) + MPoly::var(f.vars(), f.vars()[1]).pow(2);
      int inside = 0, sv = 0;
      for (int k = 0; k < 40; ++k) {
        unsigned bits = bits_for(X);
        RationalInterval rr = IntervalPoly(r2, bits).eval(X);
        inside = rr.hi < 1 ? 1 : (rr.lo > 1 ? -1 : 0);
        sv = IntervalPoly(f, bits).eval(X).sign();
        if (inside != 0 && (inside < 0 || sv != 0)) break;
        auto K = krawczyk_image(sys, X, bits);
        if (!K) break;
        for (size_t i = 0; i < X.size(); ++i)
          X[i] = {std::max(X[i].lo, (*K)[i].lo), std::min(X[i].hi, (*K)[i].hi)};
      }
      if (inside == 0) throw Error(Err::CertificationFailed, "critical point on the unit circle undecided");
      if (inside < 0) continue;
      if (sv == 0) throw Error(Err::CertificationFailed, "critical value sign undecided");
      record(sv, X[0], X[1]);
    }
  }
  if (negatives)
    out.verdict = Verdict::Indefinite;
  else if (zeros || circ.verdict == Verdict::NonnegativeWithZeros)
    out.verdict = Verdict::NonnegativeWithZeros;
  else
    out.verdict = Verdict::Positive;
  out.certificate = "boundary: " + circ.certificate + "; interior critical points checked";
  return out;
}

}  // namespace cruv
