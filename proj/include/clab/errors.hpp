#pragma once

#include <stdexcept>
#include <string>

namespace clab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration or invalid argument values (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input file, names the offending location (CLI exit code 2).
struct ParseError : Error {
    using Error::Error;
};

// Tensor/image dimension mismatch.
struct ShapeError : Error {
    using Error::Error;
};

// Non-finite loss or gradient during optimization.
struct NumericError : Error {
    using Error::Error;
};

// Misuse of a SpeedTracker (double record, unknown id, incomplete record).
struct TrackingError : Error {
    using Error::Error;
};

// Selection preconditions violated (empty class pool, malformed distribution).
struct SamplingError : Error {
    using Error::Error;
};

// Test labels outside the known class sets.
struct EvalError : Error {
    using Error::Error;
};

// Correlation undefined (zero variance or too few points).
struct UndefinedCorrelationError : Error {
    using Error::Error;
};

// Filesystem failure (CLI exit code 4).
struct IoError : Error {
    using Error::Error;
};

}  // namespace clab
