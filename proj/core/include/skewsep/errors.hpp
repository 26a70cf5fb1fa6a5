#pragma once

#include <stdexcept>
#include <string>

namespace skewsep {

/// Caller broke an operation's precondition (shape mismatch, wrong parent,
/// non-monic divisor, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem-guaranteed identity failed at runtime. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input polynomial is outside the class the decision procedures cover.
class ScopeError : public std::domain_error {
 public:
  enum class Reason { kNotInR0, kCoefficientsNotFixed };

  ScopeError(Reason reason, const std::string& what)
      : std::domain_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

}  // namespace skewsep
