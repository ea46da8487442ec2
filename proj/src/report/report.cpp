#include "symsing/report/report.hpp"

#include <algorithm>

namespace symsing {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_budget: return "skipped-budget";
  }
  return "unknown";
}

Json Check::to_json() const {
  Json j = {{"id", id}, {"params", params}, {"status", symsing::to_string(status)}};
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

Check make_check(std::string id, Json params, bool ok, Json witness) {
  Check c{std::move(id), std::move(params), ok ? Status::pass : Status::fail, std::move(witness)};
  if (!ok && c.witness.is_null()) c.witness = "check failed without a recorded residual";
  return c;
}

Check skipped(std::string id, Json params, std::string reason) {
  return Check{std::move(id), std::move(params), Status::skipped_budget, std::move(reason)};
}

void VerificationReport::add(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

void VerificationReport::sort() {
  std::stable_sort(checks_.begin(), checks_.end(), [](const Check& a, const Check& b) {
    if (a.id != b.id) return a.id < b.id;
    return a.params.dump() < b.params.dump();
  });
}

Json VerificationReport::to_json() const {
  VerificationReport sorted = *this;
  sorted.sort();
  Json list = Json::array();
  for (const auto& c : sorted.checks_) list.push_back(c.to_json());
  return {{"checks", list},
          {"summary",
           {{"pass", count(Status::pass)},
            {"fail", count(Status::fail)},
            {"skipped-budget", count(Status::skipped_budget)}}}};
}

}  // namespace symsing
