#pragma once

#include <stdexcept>

namespace sscc {

// Base class for everything this library throws on bad input or blown limits.
struct SsccError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FEN placement field could not be parsed against the configured board.
struct InvalidFen : SsccError {
    using SsccError::SsccError;
};

// Algebraic square notation malformed or outside the configured board.
struct InvalidSquare : SsccError {
    using SsccError::SsccError;
};

// Chain detection was asked to start from an unoccupied square; the
// last-moved piece must be standing on its destination.
struct StartSquareEmpty : SsccError {
    using SsccError::SsccError;
};

// The brute-force path enumerator exceeded its path cap; the caller should
// fall back to the max-flow oracle for that position.
struct EnumerationOverflow : SsccError {
    using SsccError::SsccError;
};

// DetectorConfig field out of its documented range.
struct ConfigError : SsccError {
    using SsccError::SsccError;
};

} // namespace sscc
