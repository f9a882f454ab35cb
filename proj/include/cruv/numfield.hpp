#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cruv {

using Q = mpq_class;
using Z = mpz_class;

enum class Err {
  DivisionByZero,
  PrecisionExhausted,
  NegativeRadicand,
  RadicandDisabled,
  DegenerateInput,
  NotAnEigenvalue,
  ZeroPolynomial,
  NotZeroDimensional,
  CertificationFailed,
  OrderBoundExceeded,
  NotUnipotent,
  SharedSlice,
  FieldClosure,
  NonRealInnerProduct,
  NoWitnessFound,
  InvariantViolation,
  LatticeInconsistent,
  NotNull,
  DegenerateDomain,
  Usage,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg);
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

// radicand basis: bit k of a mask selects kPrimes[k]
inline constexpr std::array<int, 4> kPrimes{2, 3, 5, 7};

struct FieldConfig;
// process-wide defaults, set once by the CLI before any check runs
FieldConfig& default_field_config();

struct FieldConfig {
  unsigned radicands;
  unsigned max_precision_bits;

  FieldConfig();
  FieldConfig(unsigned radicands, unsigned max_precision_bits)
      : radicands(radicands), max_precision_bits(max_precision_bits) {}
};

// parse "2,3,5,7" style lists into a mask
unsigned parse_radicands(const std::string& s);
std::string radicands_str(unsigned mask);

struct RationalInterval {
  Q lo, hi;

  RationalInterval() = default;
  RationalInterval(const Q& v) : lo(v), hi(v) {}
  RationalInterval(const Q& l, const Q& h) : lo(l), hi(h) {}

  Q width() const { return hi - lo; }
  Q mid() const { return (lo + hi) / 2; }
  bool contains(const Q& v) const { return lo <= v && v <= hi; }
  bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_inside(const RationalInterval& o) const { return o.lo < lo && hi < o.hi; }
  bool has_zero() const { return lo <= 0 && hi >= 0; }
  bool is_point() const { return lo == hi; }
  int sign() const;  // +1/-1 when the interval excludes 0, else 0
  bool overlaps(const RationalInterval& o) const { return !(hi < o.lo || o.hi < lo); }

  RationalInterval operator-() const { return {-hi, -lo}; }
  RationalInterval& operator+=(const RationalInterval& o);
  RationalInterval& operator-=(const RationalInterval& o);
  RationalInterval& operator*=(const RationalInterval& o);
  RationalInterval sqr() const;
  RationalInterval pow(unsigned n) const;
  // outward rounding to multiples of 2^-bits
  RationalInterval rounded(unsigned bits) const;
  RationalInterval hull(const RationalInterval& o) const;
  std::string str(int digits = 12) const;
};

RationalInterval operator+(RationalInterval a, const RationalInterval& b);
RationalInterval operator-(RationalInterval a, const RationalInterval& b);
RationalInterval operator*(RationalInterval a, const RationalInterval& b);

// floor toward -inf / ceil toward +inf at 2^-bits
Q round_down(const Q& q, unsigned bits);
Q round_up(const Q& q, unsigned bits);
std::string decimal(const Q& q, int digits);

class RealAlg {
 public:
  using Term = std::pair<unsigned, Q>;

  RealAlg() = default;
  RealAlg(int v);
  RealAlg(long v);
  RealAlg(const Q& v);
  RealAlg(const Z& v) : RealAlg(Q(v)) {}

  static RealAlg rat(long num, long den);
  // √d for d a square-free product of the basis primes
  static RealAlg sqrt_of(int d);
  static RealAlg basis(unsigned mask, const Q& c = 1);

  bool is_zero() const { return t_.empty(); }
  bool is_rational() const;
  Q rational() const;  // constant coordinate
  Q coord(unsigned mask) const;
  unsigned support() const;
  const std::vector<Term>& terms() const { return t_; }

  RealAlg operator-() const;
  RealAlg& operator+=(const RealAlg& o);
  RealAlg& operator-=(const RealAlg& o);
  RealAlg& operator*=(const RealAlg& o);
  RealAlg& operator*=(const Q& q);
  RealAlg& operator/=(const RealAlg& o);

  RealAlg inverse() const;
  // flips the sign of √p_bit
  RealAlg conj_at(int bit) const;

  bool operator==(const RealAlg& o) const;
  bool operator!=(const RealAlg& o) const { return !(*this == o); }

  std::string str() const;
  std::string decimal(int digits = 12) const;
  double to_double() const;

 private:
  std::vector<Term> t_;  // sorted by mask, nonzero coefficients
  void add_term(unsigned mask, const Q& c);
};

RealAlg operator+(RealAlg a, const RealAlg& b);
RealAlg operator-(RealAlg a, const RealAlg& b);
RealAlg operator*(const RealAlg& a, const RealAlg& b);
RealAlg operator/(RealAlg a, const RealAlg& b);

int sign(const RealAlg& x, const FieldConfig& cfg = {});
int cmp(const RealAlg& a, const RealAlg& b, const FieldConfig& cfg = {});
RealAlg abs(const RealAlg& x);
RationalInterval enclose(const RealAlg& x, const Q& width, const FieldConfig& cfg = {});
// enclosure using 2^-bits approximations of each radical
RationalInterval enclose_bits(const RealAlg& x, unsigned bits);
std::optional<RealAlg> try_sqrt(const RealAlg& x, const FieldConfig& cfg = {});
RealAlg sqrt_in_field(const RealAlg& x, const FieldConfig& cfg = {});

class CxAlg {
 public:
  RealAlg re, im;

  CxAlg() = default;
  CxAlg(int v) : re(v) {}
  CxAlg(const Q& v) : re(v) {}
  CxAlg(const RealAlg& r) : re(r) {}
  CxAlg(const RealAlg& r, const RealAlg& i) : re(r), im(i) {}

  static CxAlg I() { return CxAlg(0, 1); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  CxAlg conj() const { return {re, -im}; }
  RealAlg norm2() const { return re * re + im * im; }
  CxAlg inverse() const;

  CxAlg operator-() const { return {-re, -im}; }
  CxAlg& operator+=(const CxAlg& o);
  CxAlg& operator-=(const CxAlg& o);
  CxAlg& operator*=(const CxAlg& o);
  CxAlg& operator/=(const CxAlg& o);

  bool operator==(const CxAlg& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CxAlg& o) const { return !(*this == o); }

  std::string str() const;
  std::string decimal(int digits = 12) const;
};

CxAlg operator+(CxAlg a, const CxAlg& b);
CxAlg operator-(CxAlg a, const CxAlg& b);
CxAlg operator*(const CxAlg& a, const CxAlg& b);
CxAlg operator/(const CxAlg& a, const CxAlg& b);

// shorthand constructors
inline RealAlg rq(long n, long d = 1) { return RealAlg::rat(n, d); }
inline RealAlg sq(int d) { return RealAlg::sqrt_of(d); }
inline CxAlg cx(const RealAlg& re, const RealAlg& im = RealAlg()) { return CxAlg(re, im); }

}  // namespace cruv
