#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grouprep {

enum class ErrorKind {
  InvalidParameter,
  RelationInconsistency,
  OrderOverflow,
  BoundExceeded,
  ParentMismatch,
  PrimeDoesNotDivideOrder,
  DomainError,
  CertificateMismatch,
  NotCoprime,
  ArityMismatch,
  ProfileNotInTable,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::RelationInconsistency: return "RelationInconsistency";
    case ErrorKind::OrderOverflow: return "OrderOverflow";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::CertificateMismatch: return "CertificateMismatch";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ProfileNotInTable: return "ProfileNotInTable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace grouprep
