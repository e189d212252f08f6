#pragma once

#include <stdexcept>
#include <string>

namespace splitq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal-bug signals: the underlying math guarantees these never fire
// on valid inputs.
struct NonZeroRemainder : Error { using Error::Error; };
struct LaurentLeak : Error { using Error::Error; };

// Input validation.
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct OddSize : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotRealizable : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Enumeration cost exceeded the caller-supplied budget.
struct BudgetExceeded : Error { using Error::Error; };

} // namespace splitq
