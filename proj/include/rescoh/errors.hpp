#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rescoh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RESCOH_DEFINE_ERROR(Name)                     \
    class Name : public Error {                       \
    public:                                           \
        explicit Name(const std::string& what)        \
            : Error(std::string(#Name ": ") + what) {} \
    };

RESCOH_DEFINE_ERROR(ZeroInverse)
RESCOH_DEFINE_ERROR(NotAPrime)
RESCOH_DEFINE_ERROR(NotAComplex)
RESCOH_DEFINE_ERROR(DimensionMismatch)
RESCOH_DEFINE_ERROR(EmptySequence)
RESCOH_DEFINE_ERROR(InvalidStructure)
RESCOH_DEFINE_ERROR(NotRestrictable)
RESCOH_DEFINE_ERROR(VerificationFailed)
RESCOH_DEFINE_ERROR(TooLarge)
RESCOH_DEFINE_ERROR(IndexOutOfRange)
RESCOH_DEFINE_ERROR(MixedAlgebras)
RESCOH_DEFINE_ERROR(UnsupportedPrime)
RESCOH_DEFINE_ERROR(NotAbelian)
RESCOH_DEFINE_ERROR(DegreeTooHigh)
RESCOH_DEFINE_ERROR(NotACocycle)
RESCOH_DEFINE_ERROR(NotStronglyAbelian)
RESCOH_DEFINE_ERROR(NonPrimeModulus)
RESCOH_DEFINE_ERROR(DuplicateLabel)
RESCOH_DEFINE_ERROR(UnresolvedReference)

#undef RESCOH_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& expected)
        : Error("SyntaxError: line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

}  // namespace rescoh
