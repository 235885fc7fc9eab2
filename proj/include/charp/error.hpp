#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charp {

enum class ErrorCode {
  RankOutOfRange,
  RankBoundExceeded,
  DatumMismatch,
  NotSimpleRoot,
  NotPrime,
  NonPositive,
  NotDominant,
  UnsupportedType,
  UnsupportedPrime,
  BadShape,
  DimensionMismatch,
  Parse,
};

std::string_view to_string(ErrorCode code);

// Precondition or input violation. The CLI maps these to usage errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when two computations that must agree do not. Always a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace charp
