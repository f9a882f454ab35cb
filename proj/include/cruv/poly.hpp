#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cruv/numfield.hpp"

namespace cruv {

using Mono = std::vector<int>;

// Multivariate polynomial over RealAlg in a fixed list of named variables.
// Monomials compare lexicographically with the first variable most significant.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(const std::vector<std::string>& vars, const RealAlg& c);
  static MPoly var(const std::vector<std::string>& vars, const std::string& name);
  static MPoly monomial(const std::vector<std::string>& vars, const Mono& m, const RealAlg& c);

  const std::vector<std::string>& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int index(const std::string& name) const;
  const std::map<Mono, RealAlg>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  RealAlg constant_term() const;
  RealAlg coeff(const Mono& m) const;
  int degree(int var) const;
  int total_degree() const;
  bool depends_on(int var) const { return degree(var) > 0; }
  std::vector<int> used_vars() const;
  std::pair<Mono, RealAlg> leading() const;

  void add_term(const Mono& m, const RealAlg& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const RealAlg& c);
  MPoly pow(unsigned n) const;

  bool operator==(const MPoly& o) const { return vars_ == o.vars_ && t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly deriv(int var) const;
  MPoly subst(int var, const MPoly& value) const;
  MPoly subst_value(int var, const RealAlg& v) const;
  RealAlg eval(const std::vector<RealAlg>& pt) const;
  // coefficient list in var: result[k] multiplies var^k
  std::vector<MPoly> coeffs_in(int var) const;
  // rewrite var^2 -> repl until every exponent of var is at most 1
  MPoly reduce_square(int var, const MPoly& repl) const;
  // positive rational rescaling with coprime integer rational coordinates
  MPoly primitive() const;
  Q primitive_scale() const;
  // divide by the leading coefficient
  MPoly monic() const;
  // same polynomial viewed in another variable list (names must be present)
  MPoly in_vars(const std::vector<std::string>& vars) const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<Mono, RealAlg> t_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const RealAlg& c, MPoly a);
MPoly operator*(MPoly a, const RealAlg& c);

// exact quotient; throws InvariantViolation when g does not divide f
MPoly divexact(const MPoly& f, const MPoly& g);
MPoly resultant(const MPoly& p, const MPoly& q, int var);
MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var);

// Dense univariate polynomial; c[k] multiplies x^k.
struct UPoly {
  std::vector<RealAlg> c;
  std::string var = "x";

  UPoly() = default;
  explicit UPoly(std::vector<RealAlg> coeffs, std::string v = "x") : c(std::move(coeffs)), var(std::move(v)) { trim(); }
  static UPoly from(const MPoly& p, int var);
  MPoly to_mpoly(const std::vector<std::string>& vars, int var) const;

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const RealAlg& lead() const { return c.back(); }
  RealAlg eval(const RealAlg& x) const;
  RealAlg eval(const Q& x) const;
  RationalInterval eval(const RationalInterval& x, unsigned bits) const;
  UPoly deriv() const;
  UPoly monic() const;
  UPoly primitive() const;
  bool is_rational() const;

  bool operator==(const UPoly& o) const { return c == o.c; }
  std::string str() const;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
// Yun decomposition: pairs (f_i, i) with p = lc * prod f_i^i, f_i square-free, monic
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

// interval evaluation with coefficient enclosures frozen at a fixed precision
class IntervalPoly {
 public:
  IntervalPoly() = default;
  IntervalPoly(const MPoly& p, unsigned bits);
  RationalInterval eval(const std::vector<RationalInterval>& box) const;
  unsigned bits() const { return bits_; }

 private:
  unsigned bits_ = 64;
  int nvars_ = 0;
  std::vector<int> maxdeg_;
  std::vector<std::pair<Mono, RationalInterval>> terms_;
};

}  // namespace cruv
