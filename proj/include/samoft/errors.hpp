#pragma once

#include <stdexcept>
#include <string>

namespace samoft {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry / cue errors
struct EmptyMask : Error { using Error::Error; };
struct EmptyPixelSet : Error { using Error::Error; };
struct DegeneratePixelSet : Error { using Error::Error; };
struct DegenerateFeature : Error { using Error::Error; };

// Tracker errors
struct OutOfOrderFrame : Error { using Error::Error; };
struct MissingFlowWhenPixelCuesEnabled : Error { using Error::Error; };

// File / config errors. Parsers carry the offending line in the message.
struct ParseError : Error { using Error::Error; };
struct NonPositiveSize : ParseError { using ParseError::ParseError; };
struct RunSumMismatch : ParseError { using ParseError::ParseError; };
struct SizeMismatch : ParseError { using ParseError::ParseError; };
struct BadMagic : ParseError { using ParseError::ParseError; };
struct TruncatedFile : ParseError { using ParseError::ParseError; };
struct DimMismatch : ParseError { using ParseError::ParseError; };
struct NotUnitNorm : ParseError { using ParseError::ParseError; };
struct UnknownKey : ParseError { using ParseError::ParseError; };
struct BadValue : ParseError { using ParseError::ParseError; };

struct IoError : Error { using Error::Error; };

// Synthetic generator / metrics errors
struct SpecInfeasible : Error { using Error::Error; };
struct EmptyGroundTruth : Error { using Error::Error; };

} // namespace samoft
