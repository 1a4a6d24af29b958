#pragma once

#include <stdexcept>
#include <string>

namespace walkreg {

/// Bad user input: malformed files, out-of-range parameters, unknown names.
/// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven statement failed on concrete data, or two independent routes to
/// the same quantity disagree. Either way the implementation is wrong
/// somewhere, so the failure carries a witness dump. CLI exit code 2.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(const std::string& what, std::string witness_json = "{}")
      : std::runtime_error(what), witness_(std::move(witness_json)) {}

  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

/// A bounded search ran out of its node budget. The answer is "unknown",
/// not "no". CLI exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace walkreg
