#include "movrec/error.hpp"

namespace movrec {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnreadableFile: return "UnreadableFile";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::DimensionZero: return "DimensionZero";
    case ErrorCode::EmptyDirectory: return "EmptyDirectory";
    case ErrorCode::InconsistentDimensions: return "InconsistentDimensions";
    case ErrorCode::NumberingGap: return "NumberingGap";
    case ErrorCode::BoxOutOfBounds: return "BoxOutOfBounds";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::CenterFrequencyTooHigh: return "CenterFrequencyTooHigh";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyResponseList: return "EmptyResponseList";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::TooFewClasses: return "TooFewClasses";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::EmptyCounts: return "EmptyCounts";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::NoGroundTruth: return "NoGroundTruth";
    case ErrorCode::ModelVersionMismatch: return "ModelVersionMismatch";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace movrec
