#ifndef PCONCAVE_ERROR_HPP
#define PCONCAVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pconcave {

/// Failure categories. The CLI maps each one to its own exit status.
enum class ErrorCode {
  InvalidInput = 2,         // malformed values: bad rank, bad Cartan matrix, root not in system
  Precondition = 3,         // operation called outside its domain
  MalformedJson = 4,
  OutOfBounds = 5,          // documented CLI limits exceeded
  InfeasibleDegeneration = 6,
  NumericFailure = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::MalformedJson: return "malformed_json";
    case ErrorCode::OutOfBounds: return "out_of_bounds";
    case ErrorCode::InfeasibleDegeneration: return "infeasible_degeneration";
    case ErrorCode::NumericFailure: return "numeric_failure";
  }
  return "unknown";
}

}  // namespace pconcave

#endif  // PCONCAVE_ERROR_HPP
