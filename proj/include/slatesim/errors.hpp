#pragma once

#include <stdexcept>
#include <string>

namespace slatesim {

// Base class for all library errors. The CLI maps ConfigError/SchemaViolation
// to exit code 1 and everything else to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Slate validation failures. Both abort the simulator step.
struct DuplicateItem : Error {
    using Error::Error;
};
struct UnknownDocument : Error {
    using Error::Error;
};

// Conditional choice model produced a negative (or non-normalizable) weight.
struct InvalidScore : Error {
    using Error::Error;
};

struct CorpusTooSmall : Error {
    using Error::Error;
};

// Slate enumeration exceeded the configured cap; the environment is too
// large for a tabular baseline.
struct ActionSpaceOverflow : Error {
    using Error::Error;
};

struct NoChildren : Error {
    using Error::Error;
};

struct CorruptCheckpoint : Error {
    using Error::Error;
};
struct VersionMismatch : Error {
    using Error::Error;
};

// Experiment config failed validation; message carries the JSON path.
struct ConfigError : Error {
    using Error::Error;
};

// Episode log failed re-validation; message carries the line number.
struct SchemaViolation : Error {
    using Error::Error;
};

struct MissingBaseline : Error {
    using Error::Error;
};

}  // namespace slatesim
