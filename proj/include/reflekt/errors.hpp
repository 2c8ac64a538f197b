#pragma once

#include <stdexcept>
#include <string>

namespace reflekt {

enum class ErrorCode {
  DivisionByZero = 1,
  SpecializationPole,
  LegMismatch,
  ShapeMismatch,
  Singular,
  SolverInconsistent,
  SolverDegenerate,
  DatumMismatch,
  InvalidDatum,
  RelationFailure,
  UnsupportedTwist,
  AxiomFailure,
  ConfigError,
  IOFailure,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecializationPole: return "SpecializationPole";
    case ErrorCode::LegMismatch: return "LegMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SolverInconsistent: return "SolverInconsistent";
    case ErrorCode::SolverDegenerate: return "SolverDegenerate";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::RelationFailure: return "RelationFailure";
    case ErrorCode::UnsupportedTwist: return "UnsupportedTwist";
    case ErrorCode::AxiomFailure: return "AxiomFailure";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IOFailure: return "IOFailure";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace reflekt
