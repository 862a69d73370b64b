#pragma once

#include <stdexcept>
#include <string>

namespace monoir {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal text, corpus line or variable declaration.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different variable sets.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on its arguments does not hold
/// (unit ideal handed to a decomposition, non-embedded prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Generator-count or exponent limits were hit.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A sequence did not settle into polynomial (or set-stable) behaviour within
/// the scanned window.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

/// A candidate primary component could not be shown to occur in an
/// irredundant primary decomposition. Not a proof of non-membership.
class MembershipNotVerified : public Error {
 public:
  using Error::Error;
};

}  // namespace monoir
