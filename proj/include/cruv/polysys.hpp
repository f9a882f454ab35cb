#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cruv/poly.hpp"

namespace cruv {

struct IsolatedRoot {
  RationalInterval interval;  // open isolating interval, or a point for exact rational roots
  UPoly defining_poly;        // square-free factor the root belongs to
  int multiplicity_hint = 1;
  std::optional<RealAlg> exact;
  int sign_lo = 0;  // sign of defining_poly just right of interval.lo

  Q approx() const { return interval.mid(); }
};

// distinct real roots in the open interval (lo, hi)
int sturm_count(const UPoly& p, const RationalInterval& open);
// all roots in the closed interval, isolating intervals no wider than width
std::vector<IsolatedRoot> isolate_roots(const UPoly& p, const RationalInterval& closed, const Q& width);
void refine(IsolatedRoot& r, const Q& width);
// exact real roots of a polynomial of degree at most 2 (sorted)
std::vector<RealAlg> exact_roots_low_degree(const UPoly& p, const FieldConfig& cfg = {});
// Cauchy bound on the modulus of all roots
Q root_bound(const UPoly& p);

struct SolveOptions {
  // variables eliminated first come first; default is the reversed variable list
  std::vector<std::string> elimination_order;
  // rewrite rules var^2 -> poly valid modulo the system (e.g. circle equations)
  std::vector<std::pair<std::string, MPoly>> square_rules;
  // exact candidate points, verified by substitution before use
  std::vector<std::vector<RealAlg>> hints;
  Q width = Q(1, 1 << 20);
  int max_rounds = 14;
  FieldConfig cfg;
};

struct SolutionBox {
  std::vector<RationalInterval> box;
  bool certified = false;
  std::optional<std::vector<RealAlg>> exact;
  std::string method;  // "exact" or "krawczyk"
};

struct SolveResult {
  std::vector<std::string> vars;
  std::vector<SolutionBox> solutions;
  std::vector<UPoly> eliminants;  // per variable, before square-free reduction
  int candidates = 0;
};

// univariate eliminant for `target` by iterated pairwise resultants
UPoly eliminant(const std::vector<MPoly>& polys, const std::string& target, const SolveOptions& opt = {});
SolveResult solve_system(const std::vector<MPoly>& polys, const std::vector<RationalInterval>& box,
                         const SolveOptions& opt = {});
// shrink each coordinate interval of a certified box and re-run the existence test
bool recertify_shrunk(const std::vector<MPoly>& polys, const SolutionBox& s, const Q& factor);
// sign of p at a solution: exact when known, else by interval evaluation; 2 when undecided
int sign_at(const MPoly& p, const SolutionBox& s);
// roots of p strictly between lo and hi
int count_roots_between(const UPoly& p, const RealAlg& lo, const RealAlg& hi);
// Krawczyk existence test for a square system on the box
bool krawczyk(const std::vector<MPoly>& polys, const std::vector<RationalInterval>& box, unsigned bits);

enum class Domain { UnitCircle, ClosedUnitDisk };
enum class Verdict { Positive, NonnegativeWithZeros, Indefinite };

const char* verdict_name(Verdict v);

struct PositivityResult {
  Verdict verdict = Verdict::Positive;
  // zero locations as (x, y) boxes
  std::vector<std::pair<RationalInterval, RationalInterval>> zeros;
  // point with f < 0 for Indefinite
  std::optional<std::pair<RationalInterval, RationalInterval>> witness;
  std::string certificate;
};

// f is a polynomial in exactly two variables (x, y) in that order of its variable list
PositivityResult positivity_on_domain(const MPoly& f, Domain d, const FieldConfig& cfg = {});

}  // namespace cruv
