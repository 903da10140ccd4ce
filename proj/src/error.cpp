#include <revert/error.hpp>

namespace revert
{

std::string_view code_name(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::DivisionByZero:
            return "DivisionByZero";
        case ErrorCode::Overflow:
            return "Overflow";
        case ErrorCode::NotANumber:
            return "NotANumber";
        case ErrorCode::EmptyCoefficients:
            return "EmptyCoefficients";
        case ErrorCode::MixedVariants:
            return "MixedVariants";
        case ErrorCode::CenterMismatch:
            return "CenterMismatch";
        case ErrorCode::OrderExhausted:
            return "OrderExhausted";
        case ErrorCode::ZeroConstantTerm:
            return "ZeroConstantTerm";
        case ErrorCode::CompositionMismatch:
            return "CompositionMismatch";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::UnknownFunction:
            return "UnknownFunction";
        case ErrorCode::NonIntegerExponent:
            return "NonIntegerExponent";
        case ErrorCode::PoleAtCenter:
            return "PoleAtCenter";
        case ErrorCode::NonRationalExpansion:
            return "NonRationalExpansion";
        case ErrorCode::DomainError:
            return "DomainError";
        case ErrorCode::DerivativeVanishesAtCenter:
            return "DerivativeVanishesAtCenter";
        case ErrorCode::InsufficientOrder:
            return "InsufficientOrder";
        case ErrorCode::InsufficientData:
            return "InsufficientData";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace revert
