#pragma once

#include <stdexcept>
#include <string>

namespace ramiq {

enum class ErrorKind {
  InvalidInput,
  NotRational,
  ConductorOverflow,
  NotAGroup,
  UnsupportedOrder,
  GroupMismatch,
  NotASubgroup,
  NotCyclic,
  SupportViolation,
  NotRationalMultiplicity,
  TableRequired,
  InvalidTable,
  InvalidStratum,
  EmptyHZ,
  MissingAmbientChi,
  HypothesisViolation,
  UnknownExample,
  ParseError,
  InternalCheck,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// RAMIQ_DEBUG_ASSERT=1 turns on the expensive double-computation checks
// (theta recursion vs direct form, tau uniqueness, closed-form deltas).
bool debug_asserts_enabled();

}  // namespace ramiq
