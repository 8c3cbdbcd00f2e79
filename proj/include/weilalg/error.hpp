#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weilalg {

enum class Errc {
    ZeroPolynomial,
    NotSquarefree,
    NotCoprime,
    BadConstantTerm,
    NotMonic,
    KTooLarge,
    DimensionTooLarge,
    ZeroInput,
    ZeroConstantTerm,
    PrecisionExhausted,
    NotIrreducible,
    NotWeil,
    WeightMismatch,
    NotEffectiveInput,
    OddDegree,
    BaseMismatch,
    ValidationFailed,
    RangeError,
    IndexDivisibilityError,
    OddProduct,
    CertificationFailed,
    InvalidArgument,
    ParseError,
    IOError,
};

std::string_view errc_name(Errc code) noexcept;

/// Base exception for every domain failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

enum class NotWeilReason {
    ConstantTermValuation,
    NotTotallyReal,
    RootBound,
    BadDenominator,
};

std::string_view reason_name(NotWeilReason r) noexcept;

class NotWeilError : public Error {
public:
    NotWeilError(NotWeilReason reason, const std::string& detail)
        : Error(Errc::NotWeil, std::string(reason_name(reason)) + ": " + detail), reason_(reason) {}

    NotWeilReason reason() const noexcept { return reason_; }

private:
    NotWeilReason reason_;
};

/// Raised by CRT-style constructions; carries the indices of the first
/// pair of moduli sharing a factor.
class NotCoprimeError : public Error {
public:
    NotCoprimeError(std::size_t first, std::size_t second)
        : Error(Errc::NotCoprime, "moduli " + std::to_string(first) + " and " +
                                      std::to_string(second) + " share a factor"),
          first_(first), second_(second) {}

    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& detail)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + detail),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace weilalg
