#pragma once

#include <string>

#include "json.hpp"

namespace charfam {

enum class Outcome { Pass, Fail, Inapplicable };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inapplicable: return "inapplicable";
  }
  return "?";
}

// Checks report mathematical outcomes as values, never as exceptions. A
// failing verdict carries the first counterexample in canonical order.
struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::string witness;  // empty on pass
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const { return outcome == Outcome::Pass; }
  static Verdict pass() { return Verdict{}; }
  static Verdict fail(std::string w) { return Verdict{Outcome::Fail, std::move(w), {}}; }
  static Verdict inapplicable(std::string w) {
    return Verdict{Outcome::Inapplicable, std::move(w), {}};
  }
};

}  // namespace charfam
