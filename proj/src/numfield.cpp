#include "cruv/numfield.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cruv {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::PrecisionExhausted: return "PrecisionExhausted";
    case Err::NegativeRadicand: return "NegativeRadicand";
    case Err::RadicandDisabled: return "RadicandDisabled";
    case Err::DegenerateInput: return "DegenerateInput";
    case Err::NotAnEigenvalue: return "NotAnEigenvalue";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::NotZeroDimensional: return "NotZeroDimensional";
    case Err::CertificationFailed: return "CertificationFailed";
    case Err::OrderBoundExceeded: return "OrderBoundExceeded";
    case Err::NotUnipotent: return "NotUnipotent";
    case Err::SharedSlice: return "SharedSlice";
    case Err::FieldClosure: return "FieldClosure";
    case Err::NonRealInnerProduct: return "NonRealInnerProduct";
    case Err::NoWitnessFound: return "NoWitnessFound";
    case Err::InvariantViolation: return "InvariantViolation";
    case Err::LatticeInconsistent: return "LatticeInconsistent";
    case Err::NotNull: return "NotNull";
    case Err::DegenerateDomain: return "DegenerateDomain";
    case Err::Usage: return "Usage";
  }
  return "?";
}

Error::Error(Err kind, const std::string& msg)
    : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

FieldConfig& default_field_config() {
  static FieldConfig cfg(0xF, 4096);
  return cfg;
}

FieldConfig::FieldConfig() : FieldConfig(default_field_config()) {}

unsigned parse_radicands(const std::string& s) {
  unsigned mask = 0;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(tok);
    } catch (...) {
      throw Error(Err::Usage, "bad radicand '" + tok + "'");
    }
    auto it = std::find(kPrimes.begin(), kPrimes.end(), v);
    if (it == kPrimes.end()) throw Error(Err::Usage, "radicand must be one of 2,3,5,7");
    mask |= 1u << (it - kPrimes.begin());
  }
  return mask;
}

std::string radicands_str(unsigned mask) {
  std::string out;
  for (int k = 0; k < 4; ++k)
    if (mask >> k & 1) out += (out.empty() ? "" : ",") + std::to_string(kPrimes[k]);
  return out;
}

// ---- rational helpers

static int qsgn(const Q& q) { return sgn(q); }

Q round_down(const Q& q, unsigned bits) {
  Z scaled = q.get_num() << bits;
  Z f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Q r(f, Z(1) << bits);
  r.canonicalize();
  return r;
}

Q round_up(const Q& q, unsigned bits) {
  Z scaled = q.get_num() << bits;
  Z c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Q r(c, Z(1) << bits);
  r.canonicalize();
  return r;
}

std::string decimal(const Q& q, int digits) {
  Z scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Q a = abs(q) * scale + Q(1, 2);
  Z n;
  mpz_fdiv_q(n.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  std::string s = n.get_str();
  if ((int)s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  bool zero = n == 0;
  return (q < 0 && !zero ? "-" : "") + out;
}

// ---- intervals

int RationalInterval::sign() const {
  if (lo > 0) return 1;
  if (hi < 0) return -1;
  return 0;
}

RationalInterval& RationalInterval::operator+=(const RationalInterval& o) {
  lo += o.lo;
  hi += o.hi;
  return *this;
}

RationalInterval& RationalInterval::operator-=(const RationalInterval& o) {
  Q nlo = lo - o.hi;
  hi -= o.lo;
  lo = nlo;
  return *this;
}

RationalInterval& RationalInterval::operator*=(const RationalInterval& o) {
  if (is_point() && o.is_point()) {
    lo *= o.lo;
    hi = lo;
    return *this;
  }
  Q a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  lo = std::min({a, b, c, d});
  hi = std::max({a, b, c, d});
  return *this;
}

RationalInterval RationalInterval::sqr() const {
  Q a = lo * lo, b = hi * hi;
  if (lo >= 0) return {a, b};
  if (hi <= 0) return {b, a};
  return {Q(0), std::max(a, b)};
}

RationalInterval RationalInterval::pow(unsigned n) const {
  RationalInterval r(Q(1)), base = *this;
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base = base.sqr();
  }
  return r;
}

RationalInterval RationalInterval::rounded(unsigned bits) const {
  return {round_down(lo, bits), round_up(hi, bits)};
}

RationalInterval RationalInterval::hull(const RationalInterval& o) const {
  return {std::min(lo, o.lo), std::max(hi, o.hi)};
}

std::string RationalInterval::str(int digits) const {
  return "[" + decimal(lo, digits) + ", " + decimal(hi, digits) + "]";
}

RationalInterval operator+(RationalInterval a, const RationalInterval& b) { return a += b; }
RationalInterval operator-(RationalInterval a, const RationalInterval& b) { return a -= b; }
RationalInterval operator*(RationalInterval a, const RationalInterval& b) { return a *= b; }

// ---- RealAlg

static long mask_product(unsigned mask) {
  long p = 1;
  for (int k = 0; k < 4; ++k)
    if (mask >> k & 1) p *= kPrimes[k];
  return p;
}

RealAlg::RealAlg(int v) {
  if (v) t_.emplace_back(0u, Q(v));
}

RealAlg::RealAlg(long v) {
  if (v) t_.emplace_back(0u, Q(v));
}

RealAlg::RealAlg(const Q& v) {
  if (v != 0) t_.emplace_back(0u, v);
}

RealAlg RealAlg::rat(long num, long den) {
  if (den == 0) throw Error(Err::DivisionByZero, "rational with zero denominator");
  Q q(num, den);
  q.canonicalize();
  return RealAlg(q);
}

RealAlg RealAlg::sqrt_of(int d) {
  if (d <= 0) throw Error(Err::NegativeRadicand, "sqrt of " + std::to_string(d));
  unsigned mask = 0;
  int rest = d;
  for (int k = 0; k < 4; ++k) {
    if (rest % kPrimes[k] == 0) {
      mask |= 1u << k;
      rest /= kPrimes[k];
      if (rest % kPrimes[k] == 0) throw Error(Err::DegenerateInput, "radicand not square-free");
    }
  }
  if (rest != 1) throw Error(Err::RadicandDisabled, "radicand " + std::to_string(d) + " outside basis");
  return basis(mask);
}

RealAlg RealAlg::basis(unsigned mask, const Q& c) {
  RealAlg r;
  if (c != 0) r.t_.emplace_back(mask, c);
  return r;
}

bool RealAlg::is_rational() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }

Q RealAlg::rational() const { return coord(0); }

Q RealAlg::coord(unsigned mask) const {
  for (const auto& [m, c] : t_)
    if (m == mask) return c;
  return Q(0);
}

unsigned RealAlg::support() const {
  unsigned s = 0;
  for (const auto& [m, c] : t_) s |= m;
  return s;
}

void RealAlg::add_term(unsigned mask, const Q& c) {
  auto it = std::lower_bound(t_.begin(), t_.end(), mask,
                             [](const Term& t, unsigned m) { return t.first < m; });
  if (it != t_.end() && it->first == mask) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  } else if (c != 0) {
    t_.insert(it, {mask, c});
  }
}

RealAlg RealAlg::operator-() const {
  RealAlg r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

RealAlg& RealAlg::operator+=(const RealAlg& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

RealAlg& RealAlg::operator-=(const RealAlg& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

RealAlg& RealAlg::operator*=(const RealAlg& o) {
  *this = *this * o;
  return *this;
}

RealAlg& RealAlg::operator*=(const Q& q) {
  if (q == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [m, c] : t_) c *= q;
  return *this;
}

RealAlg& RealAlg::operator/=(const RealAlg& o) {
  *this = *this * o.inverse();
  return *this;
}

RealAlg operator*(const RealAlg& a, const RealAlg& b) {
  if (a.is_zero() || b.is_zero()) return RealAlg();
  if (b.is_rational()) {
    RealAlg r = a;
    r *= b.rational();
    return r;
  }
  if (a.is_rational()) {
    RealAlg r = b;
    r *= a.rational();
    return r;
  }
  std::array<Q, 16> acc;
  unsigned touched = 0;
  for (const auto& [m1, c1] : a.terms())
    for (const auto& [m2, c2] : b.terms()) {
      unsigned m = m1 ^ m2;
      Q c = c1 * c2;
      unsigned common = m1 & m2;
      if (common) c *= mask_product(common);
      acc[m] += c;
      touched |= 1u << m;
    }
  RealAlg r;
  for (unsigned m = 0; m < 16; ++m)
    if ((touched >> m & 1) && acc[m] != 0) r += RealAlg::basis(m, acc[m]);
  return r;
}

RealAlg RealAlg::conj_at(int bit) const {
  RealAlg r = *this;
  for (auto& [m, c] : r.t_)
    if (m >> bit & 1) c = -c;
  return r;
}

RealAlg RealAlg::inverse() const {
  if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero");
  if (is_rational()) return RealAlg(Q(1) / rational());
  unsigned s = support();
  int top = 3;
  while (!(s >> top & 1)) --top;
  RealAlg c = conj_at(top);
  RealAlg n = *this * c;  // free of √p_top
  return c * n.inverse();
}

bool RealAlg::operator==(const RealAlg& o) const { return t_ == o.t_; }

static std::string radical_name(unsigned mask) { return "sqrt(" + std::to_string(mask_product(mask)) + ")"; }

std::string RealAlg::str() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Q a = abs(c);
    std::string body;
    if (m == 0)
      body = a.get_str();
    else if (a == 1)
      body = radical_name(m);
    else
      body = a.get_str() + "*" + radical_name(m);
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

RealAlg operator+(RealAlg a, const RealAlg& b) { return a += b; }
RealAlg operator-(RealAlg a, const RealAlg& b) { return a -= b; }
RealAlg operator/(RealAlg a, const RealAlg& b) { return a /= b; }

// floor(sqrt(m) * 2^bits), memoized per thread
static const Z& sqrt_floor(long m, unsigned bits) {
  thread_local std::map<std::pair<long, unsigned>, Z> cache;
  auto key = std::make_pair(m, bits);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Z v = Z(m) << (2 * bits);
  Z s;
  mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
  return cache.emplace(key, s).first->second;
}

RationalInterval enclose_bits(const RealAlg& x, unsigned bits) {
  RationalInterval r(Q(0));
  Z den = Z(1) << bits;
  for (const auto& [m, c] : x.terms()) {
    if (m == 0) {
      r += RationalInterval(c);
      continue;
    }
    const Z& s = sqrt_floor(mask_product(m), bits);
    Q lo(s, den), hi(s + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    if (c > 0)
      r += RationalInterval(c * lo, c * hi);
    else
      r += RationalInterval(c * hi, c * lo);
  }
  return r;
}

int sign(const RealAlg& x, const FieldConfig& cfg) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return qsgn(x.rational());
  for (unsigned bits = 64;; bits *= 2) {
    if (bits > cfg.max_precision_bits) bits = cfg.max_precision_bits;
    int s = enclose_bits(x, bits).sign();
    if (s) return s;
    if (bits >= cfg.max_precision_bits)
      throw Error(Err::PrecisionExhausted, "sign undecided at " + std::to_string(bits) + " bits");
  }
}

int cmp(const RealAlg& a, const RealAlg& b, const FieldConfig& cfg) { return sign(a - b, cfg); }

RealAlg abs(const RealAlg& x) { return sign(x) < 0 ? -x : x; }

RationalInterval enclose(const RealAlg& x, const Q& width, const FieldConfig& cfg) {
  if (x.is_rational()) return RationalInterval(x.rational());
  for (unsigned bits = 64;; bits *= 2) {
    RationalInterval r = enclose_bits(x, bits);
    if (r.width() <= width) return r;
    if (bits > (1u << 20)) throw Error(Err::PrecisionExhausted, "enclosure width not reached");
  }
  (void)cfg;
}

double RealAlg::to_double() const { return enclose_bits(*this, 64).mid().get_d(); }

std::string RealAlg::decimal(int digits) const {
  Z scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 3);
  return cruv::decimal(enclose(*this, Q(1, scale)).mid(), digits);
}

// ---- square roots over the tower

static std::optional<Q> rational_sqrt(const Q& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  Z n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  Q r(n, d);
  r.canonicalize();
  return r;
}

static std::optional<RealAlg> sqrt_rec(const RealAlg& x, const std::vector<int>& bits, size_t n) {
  if (x.is_zero()) return RealAlg();
  if (n == 0) {
    if (!x.is_rational()) return std::nullopt;
    auto r = rational_sqrt(x.rational());
    if (!r) return std::nullopt;
    return RealAlg(*r);
  }
  int bit = bits[n - 1];
  unsigned pm = 1u << bit;
  RealAlg a, b;
  for (const auto& [m, c] : x.terms()) {
    if (m & pm)
      b += RealAlg::basis(m ^ pm, c);
    else
      a += RealAlg::basis(m, c);
  }
  RealAlg root_p = RealAlg::basis(pm);
  long p = kPrimes[bit];
  if (b.is_zero()) {
    if (auto r = sqrt_rec(a, bits, n - 1)) return r;
    if (auto r = sqrt_rec(a * RealAlg::rat(1, p), bits, n - 1)) return *r * root_p;
    return std::nullopt;
  }
  RealAlg disc = a * a - RealAlg(p) * b * b;
  auto s = sqrt_rec(disc, bits, n - 1);
  if (!s) return std::nullopt;
  for (int sg : {1, -1}) {
    RealAlg c2 = (a + RealAlg(sg) * *s) * RealAlg::rat(1, 2);
    auto c = sqrt_rec(c2, bits, n - 1);
    if (!c || c->is_zero()) continue;
    RealAlg d = b / (RealAlg(2) * *c);
    RealAlg y = *c + d * root_p;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

std::optional<RealAlg> try_sqrt(const RealAlg& x, const FieldConfig& cfg) {
  int s = sign(x, cfg);
  if (s < 0) throw Error(Err::NegativeRadicand, "square root of negative element " + x.str());
  if (s == 0) return RealAlg();
  unsigned avail = cfg.radicands | x.support();
  std::vector<int> bits;
  for (int k = 0; k < 4; ++k)
    if (avail >> k & 1) bits.push_back(k);
  auto y = sqrt_rec(x, bits, bits.size());
  if (!y) return std::nullopt;
  if (sign(*y, cfg) < 0) y = -*y;
  return y;
}

RealAlg sqrt_in_field(const RealAlg& x, const FieldConfig& cfg) {
  auto y = try_sqrt(x, cfg);
  if (!y) throw Error(Err::FieldClosure, "sqrt(" + x.str() + ") not in field");
  return *y;
}

// ---- CxAlg

CxAlg CxAlg::inverse() const {
  RealAlg n = norm2();
  if (n.is_zero()) throw Error(Err::DivisionByZero, "inverse of complex zero");
  RealAlg inv = n.inverse();
  return {re * inv, -(im * inv)};
}

CxAlg& CxAlg::operator+=(const CxAlg& o) {
  re += o.re;
  im += o.im;
  return *this;
}

CxAlg& CxAlg::operator-=(const CxAlg& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

CxAlg& CxAlg::operator*=(const CxAlg& o) {
  *this = *this * o;
  return *this;
}

CxAlg& CxAlg::operator/=(const CxAlg& o) {
  *this = *this * o.inverse();
  return *this;
}

CxAlg operator+(CxAlg a, const CxAlg& b) { return a += b; }
CxAlg operator-(CxAlg a, const CxAlg& b) { return a -= b; }
CxAlg operator*(const CxAlg& a, const CxAlg& b) {
  if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
  if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CxAlg operator/(const CxAlg& a, const CxAlg& b) { return a * b.inverse(); }

std::string CxAlg::str() const {
  if (im.is_zero()) return re.str();
  std::string ims;
  bool neg = false;
  if (im.terms().size() == 1) {
    RealAlg a = im;
    if (sgn(im.terms()[0].second) < 0) {
      neg = true;
      a = -im;
    }
    ims = a == RealAlg(1) ? "i" : a.str() + "*i";
  } else {
    ims = "(" + im.str() + ")*i";
  }
  if (re.is_zero()) return (neg ? "-" : "") + ims;
  return re.str() + (neg ? " - " : " + ") + ims;
}

std::string CxAlg::decimal(int digits) const {
  std::string r = re.decimal(digits), i = im.decimal(digits);
  if (i[0] == '-') return r + " - " + i.substr(1) + "i";
  return r + " + " + i + "i";
}

}  // namespace cruv
