#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cellman {

enum class ErrorKind {
  NotALattice,
  NotRanked,
  NotComparable,
  InvalidParameter,
  CapacityExceeded,
  NotProper,
  BlockedShift,
  PreconditionFailed,
  InfeasibleSize,
  DegenerateDiagram,
  ParseError,
  ValidationError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotRanked: return "NotRanked";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::BlockedShift: return "BlockedShift";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InfeasibleSize: return "InfeasibleSize";
    case ErrorKind::DegenerateDiagram: return "DegenerateDiagram";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cellman
