#include "cruv/check.hpp"

namespace cruv {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status status_from_name(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "error") return Status::Error;
  if (s == "skipped") return Status::Skipped;
  throw Error(Err::Usage, "unknown status " + s);
}

bool CheckResult::expect(bool cond, const std::string& what) {
  if (!cond) {
    if (status == Status::Pass) status = Status::Fail;
    details.push_back("FAILED: " + what);
  }
  return cond;
}

void CheckResult::absorb(const CheckResult& sub) {
  if (sub.status == Status::Error)
    status = Status::Error;
  else if (sub.status == Status::Fail && status == Status::Pass)
    status = Status::Fail;
  for (auto& d : sub.details) details.push_back(sub.id + ": " + d);
  if (!sub.witnesses.empty()) witnesses[sub.id] = sub.witnesses;
}

bool CheckResult::operator==(const CheckResult& o) const {
  return id == o.id && anchor == o.anchor && status == o.status && details == o.details &&
         witnesses == o.witnesses && duration_ms == o.duration_ms;
}

static std::string coord_key(unsigned mask) {
  if (mask == 0) return "1";
  long p = 1;
  for (int k = 0; k < 4; ++k)
    if (mask >> k & 1) p *= kPrimes[k];
  return "sqrt(" + std::to_string(p) + ")";
}

static unsigned mask_of_key(const std::string& key) {
  if (key == "1") return 0;
  if (key.rfind("sqrt(", 0) != 0 || key.back() != ')') throw Error(Err::Usage, "bad coordinate key " + key);
  long p = std::stol(key.substr(5, key.size() - 6));
  unsigned m = 0;
  for (int k = 0; k < 4; ++k)
    if (p % kPrimes[k] == 0) {
      m |= 1u << k;
      p /= kPrimes[k];
    }
  if (p != 1) throw Error(Err::Usage, "bad coordinate key " + key);
  return m;
}

json to_json(const RealAlg& x) {
  json coords = json::object();
  for (const auto& [m, c] : x.terms()) coords[coord_key(m)] = c.get_str();
  return {{"coords", coords}, {"exact", x.str()}, {"decimal", x.decimal(16)}};
}

json to_json(const CxAlg& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}, {"exact", z.str()}}; }

json to_json(const HVector& v) { return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

json to_json(const HMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({m(i, 0).str(), m(i, 1).str(), m(i, 2).str()}));
  return rows;
}

json to_json(const RationalInterval& r) {
  return {{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}, {"preview", r.str(12)}};
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exp", m}, {"coeff", to_json(c)}});
  return {{"vars", p.vars()}, {"text", p.str()}, {"terms", terms}};
}

json to_json(const CheckResult& r) {
  return {{"check_id", r.id},     {"anchor", r.anchor},           {"status", status_name(r.status)},
          {"details", r.details}, {"exact_witnesses", r.witnesses}, {"duration_ms", r.duration_ms}};
}

RealAlg real_from_json(const json& j) {
  RealAlg x;
  for (auto& [k, v] : j.at("coords").items()) {
    Q c(v.get<std::string>());
    c.canonicalize();
    x += RealAlg::basis(mask_of_key(k), c);
  }
  return x;
}

CxAlg cx_from_json(const json& j) { return {real_from_json(j.at("re")), real_from_json(j.at("im"))}; }

CheckResult check_from_json(const json& j) {
  CheckResult r;
  r.id = j.at("check_id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.status = status_from_name(j.at("status").get<std::string>());
  r.details = j.at("details").get<std::vector<std::string>>();
  r.witnesses = j.at("exact_witnesses");
  r.duration_ms = j.at("duration_ms").get<double>();
  return r;
}

}  // namespace cruv
