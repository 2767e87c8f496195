#pragma once

#include <stdexcept>
#include <string>

namespace zagdom {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tree construction / validation.
struct EdgeCountMismatch : Error {
  using Error::Error;
};
struct Disconnected : Error {
  using Error::Error;
};
struct DuplicateEdge : Error {
  using Error::Error;
};
struct SelfLoop : Error {
  using Error::Error;
};
struct IdOutOfRange : Error {
  using Error::Error;
};

// Text formats.
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

// Domination.
struct InstanceTooLarge : Error {
  using Error::Error;
};
struct NotDominating : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};

// Families and bounds.
struct InfeasibleSpec : Error {
  using Error::Error;
};
struct InfeasibleGamma : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};

// Enumeration.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace zagdom
