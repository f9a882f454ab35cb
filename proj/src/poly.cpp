#include "cruv/poly.hpp"

#include <algorithm>

namespace cruv {

static void require_same(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw Error(Err::InvariantViolation, "polynomials over different variable lists");
}

MPoly MPoly::constant(const std::vector<std::string>& vars, const RealAlg& c) {
  MPoly p(vars);
  p.add_term(Mono(vars.size(), 0), c);
  return p;
}

MPoly MPoly::var(const std::vector<std::string>& vars, const std::string& name) {
  MPoly p(vars);
  Mono m(vars.size(), 0);
  m[p.index(name)] = 1;
  p.add_term(m, RealAlg(1));
  return p;
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, const Mono& m, const RealAlg& c) {
  MPoly p(vars);
  p.add_term(m, c);
  return p;
}

int MPoly::index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  throw Error(Err::InvariantViolation, "unknown variable " + name);
}

bool MPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const Mono& m = t_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

RealAlg MPoly::constant_term() const { return coeff(Mono(vars_.size(), 0)); }

RealAlg MPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? RealAlg() : it->second;
}

int MPoly::degree(int var) const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<int> MPoly::used_vars() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (depends_on(i)) out.push_back(i);
  return out;
}

std::pair<Mono, RealAlg> MPoly::leading() const {
  if (t_.empty()) throw Error(Err::ZeroPolynomial, "leading term of zero");
  return *t_.rbegin();
}

void MPoly::add_term(const Mono& m, const RealAlg& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_.empty() && t_.empty()) vars_ = o.vars_;
  require_same(*this, o);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (vars_.empty() && t_.empty()) vars_ = o.vars_;
  require_same(*this, o);
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const RealAlg& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v = v * c;
  return *this;
}

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  require_same(a, b);
  MPoly r(a.vars());
  Mono m(a.nvars());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      for (int i = 0; i < a.nvars(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly operator*(const RealAlg& c, MPoly a) { return a *= c; }
MPoly operator*(MPoly a, const RealAlg& c) { return a *= c; }

MPoly MPoly::pow(unsigned n) const {
  MPoly r = constant(vars_, RealAlg(1)), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

MPoly MPoly::deriv(int var) const {
  MPoly r(vars_);
  for (const auto& [m, c] : t_) {
    if (m[var] == 0) continue;
    Mono n = m;
    --n[var];
    r.add_term(n, c * RealAlg(m[var]));
  }
  return r;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
  require_same(*this, value);
  auto cs = coeffs_in(var);
  // Horner in the substituted value
  MPoly r(vars_);
  for (int k = static_cast<int>(cs.size()) - 1; k >= 0; --k) r = r * value + cs[k];
  return r;
}

MPoly MPoly::subst_value(int var, const RealAlg& v) const {
  MPoly r(vars_);
  std::vector<RealAlg> pw{RealAlg(1)};
  for (const auto& [m, c] : t_) {
    while (static_cast<int>(pw.size()) <= m[var]) pw.push_back(pw.back() * v);
    Mono n = m;
    n[var] = 0;
    r.add_term(n, c * pw[m[var]]);
  }
  return r;
}

RealAlg MPoly::eval(const std::vector<RealAlg>& pt) const {
  std::vector<std::vector<RealAlg>> pw(nvars(), std::vector<RealAlg>{RealAlg(1)});
  RealAlg s;
  for (const auto& [m, c] : t_) {
    RealAlg t = c;
    for (int i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      while (static_cast<int>(pw[i].size()) <= m[i]) pw[i].push_back(pw[i].back() * pt[i]);
      t = t * pw[i][m[i]];
    }
    s += t;
  }
  return s;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
  std::vector<MPoly> out(degree(var) + 1, MPoly(vars_));
  for (const auto& [m, c] : t_) {
    Mono n = m;
    n[var] = 0;
    out[m[var]].add_term(n, c);
  }
  return out;
}

MPoly MPoly::reduce_square(int var, const MPoly& repl) const {
  auto cs = coeffs_in(var);
  MPoly v = MPoly::var(vars_, vars_[var]);
  MPoly r(vars_);
  std::vector<MPoly> rp{constant(vars_, RealAlg(1))};
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    if (cs[k].is_zero()) continue;
    int h = k / 2;
    while (static_cast<int>(rp.size()) <= h) rp.push_back(rp.back() * repl);
    MPoly t = cs[k] * rp[h];
    if (k % 2) t = t * v;
    r += t;
  }
  // repl may reintroduce var; iterate until stable
  if (r.degree(var) > 1) return r.reduce_square(var, repl);
  return r;
}

Q MPoly::primitive_scale() const {
  Z g = 0, l = 1;
  for (const auto& [m, c] : t_)
    for (const auto& [k, q] : c.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
  if (g == 0) return Q(1);
  Q s(l, abs(g));
  s.canonicalize();
  return s;
}

MPoly MPoly::primitive() const {
  MPoly r = *this;
  r *= RealAlg(primitive_scale());
  return r;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  MPoly r = *this;
  r *= leading().second.inverse();
  return r;
}

MPoly MPoly::in_vars(const std::vector<std::string>& vars) const {
  std::vector<int> map(nvars());
  for (int i = 0; i < nvars(); ++i) map[i] = -1;
  for (int i = 0; i < nvars(); ++i) {
    for (int j = 0; j < static_cast<int>(vars.size()); ++j)
      if (vars[j] == vars_[i]) map[i] = j;
  }
  MPoly r(vars);
  for (const auto& [m, c] : t_) {
    Mono n(vars.size(), 0);
    for (int i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (map[i] < 0) throw Error(Err::InvariantViolation, "variable " + vars_[i] + " missing in target ring");
      n[map[i]] = m[i];
    }
    r.add_term(n, c);
  }
  return r;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (int i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    bool neg = false;
    std::string cs;
    if (c.terms().size() == 1) {
      neg = c.terms()[0].second < 0;
      cs = (neg ? -c : c).str();
    } else {
      cs = "(" + c.str() + ")";
    }
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cs == "1")
      body = mono;
    else
      body = cs + "*" + mono;
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

static bool divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MPoly divexact(const MPoly& f, const MPoly& g) {
  require_same(f, g);
  if (g.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
  MPoly q(f.vars()), r = f;
  auto [mg, cg] = g.leading();
  RealAlg cgi = cg.inverse();
  while (!r.is_zero()) {
    auto [mr, cr] = r.leading();
    if (!divides(mg, mr)) throw Error(Err::InvariantViolation, "inexact polynomial division");
    Mono d(mr.size());
    for (size_t i = 0; i < mr.size(); ++i) d[i] = mr[i] - mg[i];
    MPoly t = MPoly::monomial(f.vars(), d, cr * cgi);
    q += t;
    r -= t * g;
  }
  return q;
}

static MPoly bareiss_det(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars) {
  int n = static_cast<int>(m.size());
  if (n == 0) return MPoly::constant(vars, RealAlg(1));
  bool neg = false;
  MPoly prev = MPoly::constant(vars, RealAlg(1));
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return MPoly(vars);
      std::swap(m[k], m[piv]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v * prev.constant_term().inverse() : divexact(v, prev);
      }
      m[i][k] = MPoly(vars);
    }
    prev = m[k][k];
  }
  return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MPoly resultant(const MPoly& p, const MPoly& q, int var) {
  require_same(p, q);
  int dp = p.degree(var), dq = q.degree(var);
  if (p.is_zero() || q.is_zero()) return MPoly(p.vars());
  if (dp == 0) return p.pow(dq);
  if (dq == 0) return q.pow(dp);
  auto cp = p.coeffs_in(var), cq = q.coeffs_in(var);
  int n = dp + dq;
  std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(p.vars())));
  for (int i = 0; i < dq; ++i)
    for (int k = 0; k <= dp; ++k) m[i][i + dp - k] = cp[k];
  for (int i = 0; i < dp; ++i)
    for (int k = 0; k <= dq; ++k) m[dq + i][i + dq - k] = cq[k];
  return bareiss_det(std::move(m), p.vars());
}

MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) { return resultant(p, q, p.index(var)); }

// ---- UPoly

UPoly UPoly::from(const MPoly& p, int var) {
  UPoly u;
  u.var = p.vars()[var];
  u.c.assign(p.degree(var) + 1, RealAlg());
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i)
      if (i != var && m[i]) throw Error(Err::InvariantViolation, "polynomial is not univariate in " + u.var);
    u.c[m[var]] += c;
  }
  u.trim();
  return u;
}

MPoly UPoly::to_mpoly(const std::vector<std::string>& vars, int var) const {
  MPoly r(vars);
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    Mono m(vars.size(), 0);
    m[var] = k;
    r.add_term(m, c[k]);
  }
  return r;
}

void UPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RealAlg UPoly::eval(const RealAlg& x) const {
  RealAlg r;
  for (int k = degree(); k >= 0; --k) r = r * x + c[k];
  return r;
}

RealAlg UPoly::eval(const Q& x) const {
  RealAlg r;
  for (int k = degree(); k >= 0; --k) {
    r *= x;
    r += c[k];
  }
  return r;
}

RationalInterval UPoly::eval(const RationalInterval& x, unsigned bits) const {
  RationalInterval r(Q(0));
  for (int k = degree(); k >= 0; --k) {
    r = (r * x).rounded(bits);
    r += enclose_bits(c[k], bits);
  }
  return r;
}

UPoly UPoly::deriv() const {
  UPoly d;
  d.var = var;
  for (int k = 1; k < static_cast<int>(c.size()); ++k) d.c.push_back(c[k] * RealAlg(k));
  d.trim();
  return d;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  RealAlg li = lead().inverse();
  for (auto& v : r.c) v = v * li;
  return r;
}

UPoly UPoly::primitive() const {
  Z g = 0, l = 1;
  for (const auto& v : c)
    for (const auto& [k, q] : v.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
  if (g == 0) return *this;
  Q s(l, abs(g));
  s.canonicalize();
  UPoly r = *this;
  for (auto& v : r.c) v *= s;
  return r;
}

bool UPoly::is_rational() const {
  return std::all_of(c.begin(), c.end(), [](const RealAlg& v) { return v.is_rational(); });
}

std::string UPoly::str() const {
  std::vector<std::string> vars{var};
  return to_mpoly(vars, 0).str();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.var = a.is_zero() ? b.var : a.var;
  r.c.assign(std::max(a.c.size(), b.c.size()), RealAlg());
  for (size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
  for (size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.var = a.is_zero() ? b.var : a.var;
  r.c.assign(std::max(a.c.size(), b.c.size()), RealAlg());
  for (size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
  for (size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
  r.trim();
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  r.var = a.var;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, RealAlg());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Err::DivisionByZero, "univariate division by zero");
  UPoly q, r = a;
  q.var = r.var = a.var;
  int db = b.degree();
  if (a.degree() < db) return {q, r};
  q.c.assign(a.degree() - db + 1, RealAlg());
  RealAlg li = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    int s = r.degree() - db;
    RealAlg f = r.lead() * li;
    q.c[s] = f;
    for (int k = 0; k <= db; ++k) r.c[s + k] -= f * b.c[k];
    r.c.back() = RealAlg();
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw Error(Err::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() == 0) return out;
  UPoly dp = p.deriv();
  UPoly a = gcd(p, dp);
  UPoly b = divmod(p, a).first;
  UPoly c = divmod(dp, a).first;
  UPoly d = c - b.deriv();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly f = d.is_zero() ? b.monic() : gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f.monic(), i);
    UPoly nb = divmod(b, f).first;
    c = divmod(d, f).first;
    b = nb;
    d = c - b.deriv();
  }
  for (auto& [f, i] : out) f.var = p.var;
  return out;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly r({RealAlg(1)}, p.var);
  for (const auto& [f, i] : squarefree_decomposition(p)) r = r * f;
  return r;
}

// ---- interval evaluation

IntervalPoly::IntervalPoly(const MPoly& p, unsigned bits) : bits_(bits), nvars_(p.nvars()) {
  maxdeg_.assign(nvars_, 0);
  for (const auto& [m, c] : p.terms()) {
    terms_.emplace_back(m, enclose_bits(c, bits));
    for (int i = 0; i < nvars_; ++i) maxdeg_[i] = std::max(maxdeg_[i], m[i]);
  }
}

RationalInterval IntervalPoly::eval(const std::vector<RationalInterval>& box) const {
  std::vector<std::vector<RationalInterval>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    pw[i].push_back(RationalInterval(Q(1)));
    for (int k = 1; k <= maxdeg_[i]; ++k)
      pw[i].push_back(k % 2 == 0 ? box[i].pow(k).rounded(bits_) : (pw[i].back() * box[i]).rounded(bits_));
  }
  RationalInterval s(Q(0));
  for (const auto& [m, c] : terms_) {
    RationalInterval t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t = (t * pw[i][m[i]]).rounded(bits_);
    s += t;
  }
  return s;
}

}  // namespace cruv
