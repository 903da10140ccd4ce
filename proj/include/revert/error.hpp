#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revert
{

enum class ErrorCode {
    // numeric kernel
    DivisionByZero,
    Overflow,
    NotANumber,
    // series
    EmptyCoefficients,
    MixedVariants,
    CenterMismatch,
    OrderExhausted,
    ZeroConstantTerm,
    CompositionMismatch,
    // expression front-end
    SyntaxError,
    UnknownFunction,
    NonIntegerExponent,
    PoleAtCenter,
    NonRationalExpansion,
    DomainError,
    // inversion
    DerivativeVanishesAtCenter,
    InsufficientOrder,
    InsufficientData,
    InvalidArgument,
};

// Stable identifier used in machine-readable output.
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &message, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), code_(code), position_(position)
    {
    }

    ErrorCode code() const noexcept
    {
        return code_;
    }

    // Byte offset into the parsed text; only set for parser errors.
    std::optional<std::size_t> position() const noexcept
    {
        return position_;
    }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

} // namespace revert
