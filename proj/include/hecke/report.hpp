#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "hecke/linalg.hpp"

namespace hecke {

using json = nlohmann::ordered_json;

struct CheckResult {
  std::string id;              // e.g. "eq:T^2"
  std::vector<int> instance;   // generator indices, 1-based
  bool pass = true;
  json witness;                // null when pass
};

using RelationReport = std::vector<CheckResult>;

bool all_pass(const RelationReport &r);
std::size_t count_failures(const RelationReport &r);
// compares two matrices and records the first differing entry on failure
CheckResult check_equal(std::string id, std::vector<int> instance, const Matrix &lhs, const Matrix &rhs);
CheckResult check_flag(std::string id, std::vector<int> instance, bool ok, json witness = nullptr);

json to_json(const Rational &r);
json to_json(const Vec &v);
json to_json(const Matrix &m);
json to_json(const CheckResult &c);
json to_json(const RelationReport &r);

Rational rational_from_json(const json &j);

}  // namespace hecke
