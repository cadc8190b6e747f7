#include "d2tk/error.hpp"

namespace d2tk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotSphere: return "NotSphere";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::BadSurgery: return "BadSurgery";
    case ErrorCode::CrossingChords: return "CrossingChords";
    case ErrorCode::Disconnects: return "Disconnects";
    case ErrorCode::UnsupportedDelta: return "UnsupportedDelta";
    case ErrorCode::PaletteExceeded: return "PaletteExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::BadRule: return "BadRule";
  }
  return "Unknown";
}

}  // namespace d2tk
