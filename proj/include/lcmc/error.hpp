#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcmc {

enum class ErrorKind {
  DegenerateRadii,
  NotSpacelikeSolvable,
  NonPositiveRadius,
  QuadratureFailure,
  SpacelikeViolation,
  OrientationError,
  RootBracketFailure,
  NotMonotone,
  ConvergenceFailure,
  InvalidArgument,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateRadii: return "DegenerateRadii";
    case ErrorKind::NotSpacelikeSolvable: return "NotSpacelikeSolvable";
    case ErrorKind::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::SpacelikeViolation: return "SpacelikeViolation";
    case ErrorKind::OrientationError: return "OrientationError";
    case ErrorKind::RootBracketFailure: return "RootBracketFailure";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lcmc
