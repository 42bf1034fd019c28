#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace bigpoly {

enum class ErrorKind {
  kDescriptorMismatch,
  kDivisionByZero,
  kCharZero,
  kNotAPthPower,
  kNotApplicable,
  kInvalidDescriptor,
  kParse,
  kRingMismatch,
  kNotHomogeneous,
  kZeroInput,
  kFieldTooSmall,
  kUnsupportedField,
  kIndexOutOfRange,
  kDegreeTooLow,
  kCharTwo,
  kNotQuadric,
  kBudgetExceeded,
  kUnitIdeal,
  kCharacteristicMismatch,
  kGenericNotRegular,
  kNotFound,
  kMaxIterations,
  kInvariantViolated,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown when a configured resource guard is hit. Carries whatever
/// bound interval was established before giving up, when meaningful.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message,
                          std::optional<int> lower = std::nullopt,
                          std::optional<int> upper = std::nullopt)
      : Error(ErrorKind::kBudgetExceeded, message), lower_(lower), upper_(upper) {}

  std::optional<int> lower() const { return lower_; }
  std::optional<int> upper() const { return upper_; }

 private:
  std::optional<int> lower_;
  std::optional<int> upper_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace bigpoly
