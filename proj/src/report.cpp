#include "hecke/report.hpp"

#include <algorithm>

namespace hecke {

bool all_pass(const RelationReport &r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult &c) { return c.pass; });
}

std::size_t count_failures(const RelationReport &r) {
  return std::count_if(r.begin(), r.end(), [](const CheckResult &c) { return !c.pass; });
}

CheckResult check_equal(std::string id, std::vector<int> instance, const Matrix &lhs, const Matrix &rhs) {
  CheckResult c{std::move(id), std::move(instance), true, nullptr};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.pass = false;
    c.witness = {{"shape_mismatch", true}};
    return c;
  }
  if (auto d = lhs.first_difference(rhs)) {
    c.pass = false;
    c.witness = {{"row", d->first},
                 {"col", d->second},
                 {"lhs", lhs(d->first, d->second).str()},
                 {"rhs", rhs(d->first, d->second).str()}};
  }
  return c;
}

CheckResult check_flag(std::string id, std::vector<int> instance, bool ok, json witness) {
  return CheckResult{std::move(id), std::move(instance), ok, ok ? json(nullptr) : std::move(witness)};
}

json to_json(const Rational &r) { return r.str(); }

json to_json(const Vec &v) {
  json a = json::array();
  for (const auto &x : v) a.push_back(x.str());
  return a;
}

json to_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CheckResult &c) {
  json j = {{"id", c.id}, {"instance", c.instance}, {"pass", c.pass}};
  if (!c.pass) j["witness"] = c.witness;
  return j;
}

json to_json(const RelationReport &r) {
  json a = json::array();
  for (const auto &c : r) a.push_back(to_json(c));
  return a;
}

Rational rational_from_json(const json &j) {
  if (!j.is_string()) throw MathError("rationals must be encoded as strings");
  return Rational::parse(j.get<std::string>());
}

}  // namespace hecke
