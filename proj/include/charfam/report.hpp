#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charfam/verdict.hpp"

namespace charfam {

inline constexpr const char* kToolName = "charfam";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct CheckSection {
  std::string name;    // stable identifier, e.g. "prop52i"
  std::string anchor;  // one-line statement of the claim being checked
  Verdict verdict;
  std::optional<double> time_ms;  // only populated when timing is requested
};

// Machine-readable verification report. Serialization is deterministic:
// ordered keys, no environment-dependent fields unless timings are enabled.
struct VerificationReport {
  std::string group_label;
  int group_order = 0;
  int prime = 0;  // 0 when the order is not a prime power
  std::vector<CheckSection> hypotheses;
  std::vector<CheckSection> checks;

  Outcome summary() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);

  // exit code: 0 all applicable checks pass, 1 some check failed
  int exit_code() const { return summary() == Outcome::Fail ? 1 : 0; }
};

}  // namespace charfam
