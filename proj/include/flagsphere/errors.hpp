#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagsphere {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error { using Error::Error; };
struct NotAFace : Error { using Error::Error; };
struct NotAnEdge : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct NotPalindromic : Error { using Error::Error; };
struct JNotEquator : Error { using Error::Error; };
struct ComponentCountNotTwo : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };

// Syntax error in the construction DSL; offset is the byte position in the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (at byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

}  // namespace flagsphere
