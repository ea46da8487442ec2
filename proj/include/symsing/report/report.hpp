#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace symsing {

using Json = nlohmann::json;

enum class Status { pass, fail, skipped_budget };

std::string to_string(Status s);

/// One verified statement.  A failing check always carries a witness (residual, offending
/// element, rank value).
struct Check {
  std::string id;
  Json params = Json::object();
  Status status = Status::pass;
  Json witness;

  bool failed() const { return status == Status::fail; }
  Json to_json() const;
};

/// Builds a pass/fail check.  A failure without an explicit witness gets a placeholder so the
/// invariant above holds.
Check make_check(std::string id, Json params, bool ok, Json witness = nullptr);
Check skipped(std::string id, Json params, std::string reason);

/// Ordered collection of checks.  Checks keep their insertion order until sorted; to_json always
/// emits them sorted by (id, params).
class VerificationReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(const VerificationReport& other);

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t count(Status s) const;
  bool all_passed() const { return count(Status::fail) == 0 && count(Status::skipped_budget) == 0; }
  bool any_failed() const { return count(Status::fail) != 0; }
  /// First check with the given id, or nullptr.
  const Check* find(const std::string& id) const;

  void sort();
  Json to_json() const;

 private:
  std::vector<Check> checks_;
};

constexpr int report_schema_version = 1;

}  // namespace symsing
