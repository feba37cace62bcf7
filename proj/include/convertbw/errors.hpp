#pragma once

#include <stdexcept>
#include <string>

namespace convertbw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of zero") {}
};
struct BadParams : Error {
  using Error::Error;
};
struct GenerationFailed : Error {
  using Error::Error;
};
struct RegimeMismatch : Error {
  using Error::Error;
};
struct CaseConflict : Error {
  using Error::Error;
};
struct IdentityViolation : Error {
  using Error::Error;
};
struct SpaceTooLarge : Error {
  using Error::Error;
};
struct NoFeasiblePlan : Error {
  using Error::Error;
};
struct InternalCheckFailed : Error {
  using Error::Error;
};
struct BadGridSpec : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace convertbw
