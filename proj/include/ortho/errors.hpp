#pragma once

#include <stdexcept>

namespace ortho {

// Library-wide error hierarchy. Callers that care about a specific failure
// catch the concrete type; everything derives from Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankDeficientError : Error { using Error::Error; };
struct SingularBasisError : Error { using Error::Error; };
struct NotConstructionAError : Error { using Error::Error; };
struct BadIndexError : Error { using Error::Error; };
struct BadDimensionError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct VerificationError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace ortho
