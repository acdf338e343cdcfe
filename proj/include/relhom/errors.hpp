#pragma once

#include <stdexcept>
#include <string>

namespace relhom {

/// Caller broke a documented precondition (shape mismatch, foreign algebra, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Base for recoverable failures reported to users.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file, failed schema check, violated invariant at load time.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation's mathematical hypothesis does not hold for the given data.
class PreconditionFailure : public Error {
 public:
  using Error::Error;
};

/// A right approximation turned out not to be epic (or a left one not monic).
class AdmissibilityFailure : public PreconditionFailure {
 public:
  AdmissibilityFailure(const std::string& what, std::string offending)
      : PreconditionFailure(what), offending_(std::move(offending)) {}
  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

/// A requested degree needs a deeper resolution than was computed.
class DepthInsufficient : public Error {
 public:
  using Error::Error;
};

/// The instance is outside what can be decided at corpus scale.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace relhom
