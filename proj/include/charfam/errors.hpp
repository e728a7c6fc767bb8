#pragma once

#include <stdexcept>
#include <string>

namespace charfam {

// Contract violations surface as exceptions; mathematical check outcomes
// never do (those are Verdict values, see verdict.hpp).

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTableError : Error {
  using Error::Error;
};

struct OrderCapError : Error {
  using Error::Error;
};

struct GroupMismatchError : Error {
  using Error::Error;
};

struct MixedOrderError : Error {
  using Error::Error;
};

struct NotRankOneError : Error {
  using Error::Error;
};

struct LiftFailureError : Error {
  using Error::Error;
};

struct NotCharacterError : Error {
  using Error::Error;
};

struct HypothesisViolationError : Error {
  HypothesisViolationError(const std::string& hypothesis, const std::string& what)
      : Error(what), hypothesis(hypothesis) {}
  std::string hypothesis;
};

struct NoSuchQError : Error {
  using Error::Error;
};

struct EvenPrimeError : Error {
  using Error::Error;
};

struct BadShapeError : Error {
  using Error::Error;
};

struct NotOneDimensionalError : Error {
  using Error::Error;
};

struct NotClosedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace charfam
