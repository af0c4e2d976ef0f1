#ifndef RANKFORGE_ERROR_HPP
#define RANKFORGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rankforge {

// Base class for everything this library throws on purpose. Callers that do
// not care about the precise failure can catch this one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scalar-level failures.
struct ZeroDenominator final : Error { using Error::Error; };
struct DivisionByZero final : Error { using Error::Error; };
struct FieldMismatch final : Error { using Error::Error; };
struct NotPrime final : Error { using Error::Error; };

// Parsing failures. `position` is a 0-based offset into the input text.
struct SyntaxError final : Error {
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};
struct CoefficientError final : Error { using Error::Error; };

// Lattice / chain failures.
struct EmptyMultiset final : Error { using Error::Error; };
struct NotAChain final : Error { using Error::Error; };

// Identity-generation failures.
struct NotCoprime final : Error { using Error::Error; };
struct ZeroPolynomial final : Error { using Error::Error; };
struct LengthMismatch final : Error { using Error::Error; };

// Matrix failures.
struct NotSquare final : Error { using Error::Error; };
struct SizeMismatch final : Error { using Error::Error; };
struct SamplerExhausted final : Error { using Error::Error; };
struct BadDimension final : Error { using Error::Error; };

// Free-algebra failures.
struct ModeMismatch final : Error { using Error::Error; };
struct CharTwoUnsupported final : Error { using Error::Error; };

// Block-algebra failures.
struct ShapeMismatch final : Error { using Error::Error; };
struct NotAProjection final : Error { using Error::Error; };
struct SumMismatch final : Error { using Error::Error; };
struct NotIdempotent final : Error { using Error::Error; };

} // namespace rankforge

#endif
