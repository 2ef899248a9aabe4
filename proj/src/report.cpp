#include "nichols/report.hpp"

namespace nichols {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["ok"] = ok();
  j["violations"] = violations;
  if (!data.empty()) j["data"] = data;
  return j;
}

}  // namespace nichols
