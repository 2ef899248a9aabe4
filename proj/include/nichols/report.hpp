#pragma once
// Verification reports: a verdict plus the list of violated instances.

#include <string>
#include <vector>

#include <json.hpp>

namespace nichols {

struct Report {
  std::string check;
  std::vector<std::string> violations;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  explicit Report(std::string name = "") : check(std::move(name)) {}
  bool ok() const { return violations.empty(); }
  void fail(std::string v) { violations.push_back(std::move(v)); }
  void merge(const Report& other, const std::string& prefix = "");
  nlohmann::ordered_json to_json() const;
};

}  // namespace nichols
