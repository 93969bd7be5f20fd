#pragma once

#include <stdexcept>
#include <string>

namespace spcde {

// Error taxonomy. The CLI maps categories onto exit codes:
// config errors -> 2, data errors -> 3, fit failures -> 4.
enum class ErrorCategory { Config, Data, Fit };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

// Bad parameter values (K < 3, empty layers, tau outside (0,1), ...).
class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string& msg)
      : Error(ErrorCategory::Config, msg) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg)
      : Error(ErrorCategory::Config, msg) {}
};

// Mismatched vector/matrix dimensions.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg)
      : Error(ErrorCategory::Config, msg) {}
};

// Non-finite values where finite ones are required.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg)
      : Error(ErrorCategory::Fit, msg) {}
};

// Inputs that must share a grid/calendar but do not.
class AlignmentError : public Error {
 public:
  explicit AlignmentError(const std::string& msg)
      : Error(ErrorCategory::Data, msg) {}
};

// Malformed file content (reported with line numbers where known).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg)
      : Error(ErrorCategory::Data, msg) {}
};

// A dataset panel with missing (location, day) cells.
class CompletenessError : public Error {
 public:
  explicit CompletenessError(const std::string& msg)
      : Error(ErrorCategory::Data, msg) {}
};

// Values that violate dataset invariants (negative PRCP, bad source tag).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg)
      : Error(ErrorCategory::Data, msg) {}
};

// Inputs too degenerate to fit (constant responses, < 2 distinct values).
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& msg)
      : Error(ErrorCategory::Fit, msg) {}
};

// Correlation requested on a constant series.
class UndefinedCorrelationError : public Error {
 public:
  explicit UndefinedCorrelationError(const std::string& msg)
      : Error(ErrorCategory::Data, msg) {}
};

}  // namespace spcde
