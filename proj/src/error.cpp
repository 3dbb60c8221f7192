#include "lsseq/error.hpp"

namespace lsseq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyTuple: return "EmptyTuple";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::ZeroEndpoint: return "ZeroEndpoint";
    case ErrorCode::DegenerateAlphabet: return "DegenerateAlphabet";
    case ErrorCode::RootConditionViolated: return "RootConditionViolated";
    case ErrorCode::MultipleRoot: return "MultipleRoot";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NonPositiveIndex: return "NonPositiveIndex";
    case ErrorCode::InvalidExpansion: return "InvalidExpansion";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotElementary: return "NotElementary";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidClassicalParams: return "InvalidClassicalParams";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace lsseq
