#pragma once

#include <stdexcept>
#include <string>

namespace afschur {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionNotExact : Error {
    using Error::Error;
};

struct PeriodMismatch : Error {
    using Error::Error;
};

struct RankMismatch : Error {
    using Error::Error;
};

struct SigmaMismatch : Error {
    using Error::Error;
};

struct NotMinimalRep : Error {
    using Error::Error;
};

struct BadRanks : Error {
    using Error::Error;
};

struct NotUpperTriangular : Error {
    using Error::Error;
};

struct ProfileMismatch : Error {
    using Error::Error;
};

struct CoordinateExtractionFailed : Error {
    using Error::Error;
};

struct TriangularityViolation : Error {
    using Error::Error;
};

struct SolveFailed : Error {
    using Error::Error;
};

struct NotDecomposable : Error {
    using Error::Error;
};

struct ResourceBound : Error {
    using Error::Error;
};

struct UnknownCheck : Error {
    using Error::Error;
};

}  // namespace afschur
