#include "charfam/report.hpp"

#include <sstream>

#include "charfam/errors.hpp"

namespace charfam {

Outcome VerificationReport::summary() const {
  bool any_pass = false;
  for (const auto* list : {&hypotheses, &checks})
    for (const auto& s : *list) {
      if (s.verdict.outcome == Outcome::Fail) return Outcome::Fail;
      if (s.verdict.outcome == Outcome::Pass) any_pass = true;
    }
  return any_pass ? Outcome::Pass : Outcome::Inapplicable;
}

namespace {

nlohmann::ordered_json section_json(const CheckSection& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["anchor"] = s.anchor;
  j["verdict"] = outcome_name(s.verdict.outcome);
  j["witness"] = s.verdict.witness.empty() ? nlohmann::ordered_json(nullptr)
                                           : nlohmann::ordered_json(s.verdict.witness);
  j["details"] = s.verdict.details;
  j["time_ms"] = s.time_ms ? nlohmann::ordered_json(*s.time_ms) : nlohmann::ordered_json(nullptr);
  return j;
}

CheckSection section_from_json(const nlohmann::ordered_json& j) {
  CheckSection s;
  s.name = j.at("name").get<std::string>();
  s.anchor = j.at("anchor").get<std::string>();
  std::string v = j.at("verdict").get<std::string>();
  s.verdict.outcome = v == "pass"           ? Outcome::Pass
                      : v == "fail"         ? Outcome::Fail
                      : v == "inapplicable" ? Outcome::Inapplicable
                                            : throw ParseError("bad verdict '" + v + "'");
  if (!j.at("witness").is_null()) s.verdict.witness = j.at("witness").get<std::string>();
  s.verdict.details = j.at("details");
  if (!j.at("time_ms").is_null()) s.time_ms = j.at("time_ms").get<double>();
  return s;
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["group"] = {{"label", group_label}, {"order", group_order}, {"p", prime}};
  j["hypotheses"] = nlohmann::ordered_json::array();
  for (const auto& s : hypotheses) j["hypotheses"].push_back(section_json(s));
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& s : checks) j["checks"].push_back(section_json(s));
  j["summary"] = outcome_name(summary());
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema").get<int>() != kReportSchema) throw ParseError("unknown report schema");
  VerificationReport r;
  r.group_label = j.at("group").at("label").get<std::string>();
  r.group_order = j.at("group").at("order").get<int>();
  r.prime = j.at("group").at("p").get<int>();
  for (const auto& s : j.at("hypotheses")) r.hypotheses.push_back(section_from_json(s));
  for (const auto& s : j.at("checks")) r.checks.push_back(section_from_json(s));
  return r;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " report\n";
  os << "group " << group_label << "  order " << group_order;
  if (prime > 0) os << "  p " << prime;
  os << "\n";
  auto print = [&os](const char* kind, const CheckSection& s) {
    os << "  " << kind << " " << s.name << ": " << outcome_name(s.verdict.outcome);
    if (!s.verdict.witness.empty()) os << "  [" << s.verdict.witness << "]";
    if (s.time_ms) os << "  (" << *s.time_ms << " ms)";
    os << "\n";
  };
  for (const auto& s : hypotheses) print("hypothesis", s);
  for (const auto& s : checks) print("check", s);
  os << "summary: " << outcome_name(summary()) << "\n";
  return os.str();
}

}  // namespace charfam
