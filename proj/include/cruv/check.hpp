#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "cruv/hermlin.hpp"
#include "cruv/poly.hpp"

namespace cruv {

using json = nlohmann::json;

enum class Status { Pass, Fail, Error, Skipped };

const char* status_name(Status s);
Status status_from_name(const std::string& s);

struct CheckResult {
  std::string id;
  std::string anchor;  // descriptive key of the claim being verified
  Status status = Status::Pass;
  std::vector<std::string> details;
  json witnesses = json::object();
  double duration_ms = 0;

  bool ok() const { return status == Status::Pass; }
  // records a sub-claim, downgrading the status on failure
  bool expect(bool cond, const std::string& what);
  void note(const std::string& s) { details.push_back(s); }
  void witness(const std::string& key, json v) { witnesses[key] = std::move(v); }
  // fold another result in as a sub-claim
  void absorb(const CheckResult& sub);

  bool operator==(const CheckResult& o) const;
};

// exact serialization: coordinate map over the radical basis plus a decimal preview
json to_json(const RealAlg& x);
json to_json(const CxAlg& z);
json to_json(const HVector& v);
json to_json(const HMatrix& m);
json to_json(const RationalInterval& r);
json to_json(const MPoly& p);
json to_json(const CheckResult& r);

RealAlg real_from_json(const json& j);
CxAlg cx_from_json(const json& j);
CheckResult check_from_json(const json& j);

// times f(result) and maps thrown library errors to Status::Error
template <class F>
CheckResult run_check(const std::string& id, const std::string& anchor, F&& f) {
  CheckResult r;
  r.id = id;
  r.anchor = anchor;
  auto t0 = std::chrono::steady_clock::now();
  try {
    f(r);
  } catch (const Error& e) {
    r.status = Status::Error;
    r.details.push_back(std::string(err_name(e.kind())) + ": " + e.what());
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.details.push_back(std::string("internal: ") + e.what());
  }
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cruv
