#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsp4 {

enum class ErrorCode {
  ZeroConstantTerm,
  TruncationMismatch,
  MissingPrime,
  DomainError,
  ConstraintViolated,
  NumericallyDegenerate,
  KindMismatch,
  UnknownPrime,
  BadPrime,
  WeightMismatch,
  OddWeight,
  WeightTooSmall,
  NonFundamentalDiscriminant,
  PoleHit,
  InsufficientTruncation,
  ParseError,
  SchemaError,
  InvariantError,
  NotExact,
};

inline std::string_view error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::NumericallyDegenerate: return "NumericallyDegenerate";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UnknownPrime: return "UnknownPrime";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::OddWeight: return "OddWeight";
    case ErrorCode::WeightTooSmall: return "WeightTooSmall";
    case ErrorCode::NonFundamentalDiscriminant: return "NonFundamentalDiscriminant";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantError: return "InvariantError";
    case ErrorCode::NotExact: return "NotExact";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code is stable and is what the
/// CLI and the tests key on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gsp4
