#ifndef NOBLE_ERROR_HPP
#define NOBLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace noble {

enum class ErrorKind {
  NotAssociative,
  NotRegular,
  InverseNotUnique,
  IdempotentsDontCommute,
  EquivalentFormsDisagree,
  MismatchedPointSets,
  SizeCapExceeded,
  ExplosionCap,
  EmptyGenerators,
  NotInjective,
  ZeroHasNoPrincipalFilter,
  NotClosedInverseSubsemigroup,
  ActionNotFunctional,
  NotTransitive,
  NotAGroup,
  NotASubgroup,
  ParseError,
  Inconclusive,
};

class NobleError : public std::runtime_error {
 public:
  NobleError(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  /// CLI exit code for this error class.
  int exit_code() const {
    switch (kind_) {
      case ErrorKind::ParseError:
        return 2;
      case ErrorKind::SizeCapExceeded:
      case ErrorKind::ExplosionCap:
        return 4;
      case ErrorKind::Inconclusive:
        return 5;
      default:
        return 3;  // validation / structural errors
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace noble

#endif
