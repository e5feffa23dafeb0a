#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quantakit {

enum class ErrKind {
  NotAPartialOrder,
  NotALattice,
  ObjectMismatch,
  BoundaryMismatch,
  NotASquare,
  NotContinuous,
  FamilyInvalid,
  SizeGuardExceeded,
  UnknownName,
  ParseError,
  ValidationError,
  UnresolvedReference,
  CharacterizationMismatch,  // bug sentinel, must be unreachable
  ContinuityFailure,         // bug sentinel, must be unreachable
  Internal,
};

const char* to_string(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

/// One violated law together with the witnessing tuple.
/// `law` is an anchor id such as "sec2.unit" or "eq.int-def".
struct LawViolation {
  std::string law;
  std::string witness;
};

using Report = std::vector<LawViolation>;

/// Thrown by eager constructors when a validation report is nonempty.
class ValidationFailure : public Error {
 public:
  ValidationFailure(Report report, const std::string& msg)
      : Error(ErrKind::ValidationError, msg), report_(std::move(report)) {}

  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace quantakit
