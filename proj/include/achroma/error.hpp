#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace achroma {

enum class ErrorCode {
  DuplicateLabel,
  UnknownEndpoint,
  LoopEdge,
  DuplicateEdge,
  DomainMismatch,
  NotSurjective,
  InvalidRotation,
  DisconnectedGraph,
  InvalidParameter,
  ShrinkNotAllowed,
  GenusTooLarge,
  BudgetExceeded,
  ParseError,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case ErrorCode::GenusTooLarge: return "GenusTooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace achroma
