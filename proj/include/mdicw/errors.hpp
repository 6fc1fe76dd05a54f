#pragma once

#include <stdexcept>
#include <string>

namespace mdicw {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidState : Error { using Error::Error; };
struct InvalidEffect : Error { using Error::Error; };
struct InvalidBasis : Error { using Error::Error; };

struct DegeneratePovm : Error { using Error::Error; };
struct InfeasibleProbabilities : Error { using Error::Error; };

struct EmptyRecord : Error { using Error::Error; };
struct MissingRecord : Error { using Error::Error; };
struct InvalidIntensities : Error { using Error::Error; };
struct InfeasibleIntervals : Error { using Error::Error; };

struct InfeasibleRegion : Error { using Error::Error; };
struct UnknownState : Error { using Error::Error; };
struct OptimizationFailed : Error { using Error::Error; };
struct SeedLengthError : Error { using Error::Error; };

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

struct UsageError : Error { using Error::Error; };

}  // namespace mdicw
