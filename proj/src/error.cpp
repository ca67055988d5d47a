#include "cdg/error.hpp"

namespace cdg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NonPrimeLabel: return "NonPrimeLabel";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotDiameterThree: return "NotDiameterThree";
    case ErrorCode::BadBaseVertex: return "BadBaseVertex";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::InconsistentWitness: return "InconsistentWitness";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::EvenP: return "EvenP";
    case ErrorCode::PoolExhausted: return "PoolExhausted";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorCode::UnknownFilter: return "UnknownFilter";
  }
  return "Error";
}

}  // namespace cdg
