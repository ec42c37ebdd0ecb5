#ifndef MOVREC_ERROR_HPP_
#define MOVREC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace movrec {

enum class ErrorCode {
  UnreadableFile,
  UnsupportedFormat,
  DimensionZero,
  EmptyDirectory,
  InconsistentDimensions,
  NumberingGap,
  BoxOutOfBounds,
  InvalidParams,
  CenterFrequencyTooHigh,
  DimensionMismatch,
  EmptyResponseList,
  TooFewSamples,
  DegenerateData,
  ZeroVector,
  TooFewClasses,
  InvalidThreshold,
  EmptyLabel,
  EmptyCounts,
  EmptyList,
  NoGroundTruth,
  ModelVersionMismatch,
  UnknownScenario,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace movrec

#endif  // MOVREC_ERROR_HPP_
