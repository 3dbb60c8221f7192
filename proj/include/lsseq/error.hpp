#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsseq {

enum class ErrorCode {
  EmptyTuple,
  NegativeCoefficient,
  ZeroEndpoint,
  DegenerateAlphabet,
  RootConditionViolated,
  MultipleRoot,
  IllConditioned,
  NonPositiveIndex,
  InvalidExpansion,
  TooLarge,
  NotMember,
  NotElementary,
  EmptySet,
  OutOfRange,
  InvalidClassicalParams,
  UnknownFunction,
  InvalidArgument,
};

/// Stable identifier used in machine-readable output (e.g. "ZeroEndpoint").
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lsseq
