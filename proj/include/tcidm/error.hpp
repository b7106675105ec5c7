#pragma once

#include <stdexcept>
#include <string>

namespace tcidm {

enum class ErrorCode {
    // geometry
    DegenerateConfiguration,
    LengthMismatch,
    // depth alignment
    InsufficientOverlap,
    DegenerateDepth,
    NonPositiveScale,
    EmptySequence,
    // track lifting / filtering
    FrameCountMismatch,
    IntrinsicsMissing,
    TooFewTracks,
    TooFewVisibleFrames,
    // pose recovery
    InsufficientVisibility,
    WindowTooLarge,
    // action heads
    DimensionMismatch,
    EmptyDataset,
    // oracle / pipeline
    SpecInvalid,
    HorizonMismatch,
    UnknownFormat,
    IoError,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/// Every recoverable failure surfaces as one of these; the code identifies
/// the contract that was violated, the message carries context (frame index,
/// file path, sizes).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InsufficientOverlap: return "InsufficientOverlap";
        case ErrorCode::DegenerateDepth: return "DegenerateDepth";
        case ErrorCode::NonPositiveScale: return "NonPositiveScale";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::FrameCountMismatch: return "FrameCountMismatch";
        case ErrorCode::IntrinsicsMissing: return "IntrinsicsMissing";
        case ErrorCode::TooFewTracks: return "TooFewTracks";
        case ErrorCode::TooFewVisibleFrames: return "TooFewVisibleFrames";
        case ErrorCode::InsufficientVisibility: return "InsufficientVisibility";
        case ErrorCode::WindowTooLarge: return "WindowTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::EmptyDataset: return "EmptyDataset";
        case ErrorCode::SpecInvalid: return "SpecInvalid";
        case ErrorCode::HorizonMismatch: return "HorizonMismatch";
        case ErrorCode::UnknownFormat: return "UnknownFormat";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace tcidm
