#include "hassett/report_json.hpp"

namespace hassett {

ordered_json class_to_json(const DivisorClass& c) {
  ordered_json arr = ordered_json::array();
  for (const auto& [gen, coef] : c.terms()) {
    arr.push_back(ordered_json{{"generator", gen.str()}, {"coefficient", coef.str()}});
  }
  return arr;
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["identity"] = report.identity;
  j["genus"] = report.space.genus();
  ordered_json weights = ordered_json::array();
  for (const Rational& w : report.space.weights().weights()) weights.push_back(w.str());
  j["weights"] = weights;
  for (const auto& [key, value] : report.params) j[key] = value;
  j["passed"] = report.passed;
  j["difference"] = class_to_json(report.difference);
  j["difference_expression"] = report.difference.str();
  if (report.difference_right) {
    j["difference_right"] = class_to_json(*report.difference_right);
    j["difference_right_expression"] = report.difference_right->str();
  }
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

ordered_json suite_to_json(const SuiteResult& suite, std::optional<std::uint64_t> seed) {
  ordered_json j;
  j["schema_version"] = 1;
  if (seed) j["seed"] = *seed;
  ordered_json reports = ordered_json::array();
  for (const VerificationReport& r : suite.reports) reports.push_back(report_to_json(r));
  j["reports"] = std::move(reports);
  j["passed"] = suite.passed;
  return j;
}

}  // namespace hassett
