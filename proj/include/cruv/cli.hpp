#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cruv/check.hpp"
#include "cruv/hermlin.hpp"

namespace cruv {

inline constexpr const char* kReportSchema = "cruv.report/1";

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by check id
  json config = json::object();

  int count(Status s) const;
  bool ok() const;  // no failed or errored check
  bool operator==(const Report& o) const;
};

json to_json(const Report& r);
Report report_from_json(const json& j);

const std::vector<std::string>& suite_names();
// runs the checks of a suite on a worker pool; checks needing a disabled radicand are skipped
Report run_suite(const std::string& suite, const FieldConfig& cfg = {});
// 0 all pass, 1 a check failed, 3 a check hit an internal error
int exit_code(const Report& r);

struct CurveRow {
  std::string curve;   // which curve or point set the row belongs to
  std::string branch;  // branch label within the curve
  int segment = 0;     // consecutive rows with equal segment are joined in plots
  std::vector<double> values;
  double residual = 0;  // |defining polynomial| at the printed decimals, enclosed exactly
};

struct CurveSample {
  std::string figure;
  std::vector<std::string> columns;  // names of `values`
  std::vector<CurveRow> rows;
  int x = 0, y = 1;  // columns plotted by the SVG
  CheckResult check;  // exact facts behind the figure
};

const std::vector<std::string>& figure_ids();
// N >= 16 samples per curve branch
CurveSample sample_figure(const std::string& id, int samples);
std::string to_csv(const CurveSample& s);
std::string to_svg(const CurveSample& s);

// boundary point in Heisenberg coordinates, lift ((-|z|^2 + i t)/2, z, 1)
struct HeisenbergPoint {
  bool at_infinity = false;
  CxAlg z;
  RealAlg t;
};
HeisenbergPoint heisenberg_coords(const HVector& v);
HVector heisenberg_lift(const HeisenbergPoint& p);

// matrices, radicands and relation checks of a representation
json representation_json(const std::string& name);

}  // namespace cruv
