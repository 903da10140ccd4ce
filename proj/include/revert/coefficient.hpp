#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <revert/rational.hpp>

namespace revert
{

enum class NumericKind { Exact, Float };

// A series entry: either an exact rational or a binary64 value. Arithmetic
// between the two variants is refused with MixedVariants; a float result of
// NaN is refused with NotANumber.
class Coefficient
{
public:
    Coefficient() = default;
    Coefficient(Rational value) : value_(std::move(value)) {}
    // Throws NotANumber.
    explicit Coefficient(double value);

    // The integer n in the given representation.
    static Coefficient from_integer(long n, NumericKind kind);
    static Coefficient from_integer(const Integer &n, NumericKind kind);
    static Coefficient from_rational(const Rational &r, NumericKind kind);

    NumericKind kind() const noexcept
    {
        return std::holds_alternative<Rational>(value_) ? NumericKind::Exact : NumericKind::Float;
    }
    bool is_exact() const noexcept
    {
        return kind() == NumericKind::Exact;
    }

    // Precondition: the matching variant is held (InvalidArgument otherwise).
    const Rational &rational() const;
    double float_value() const;

    // Rationals are converted with round-to-nearest-even (may throw Overflow).
    double to_double() const;

    bool is_zero() const;
    int sign() const;

    Coefficient operator-() const;
    friend Coefficient operator+(const Coefficient &a, const Coefficient &b);
    friend Coefficient operator-(const Coefficient &a, const Coefficient &b);
    friend Coefficient operator*(const Coefficient &a, const Coefficient &b);
    // Throws DivisionByZero for a zero divisor in either variant.
    friend Coefficient operator/(const Coefficient &a, const Coefficient &b);

    Coefficient &operator+=(const Coefficient &b)
    {
        return *this = *this + b;
    }
    Coefficient &operator-=(const Coefficient &b)
    {
        return *this = *this - b;
    }
    Coefficient &operator*=(const Coefficient &b)
    {
        return *this = *this * b;
    }
    Coefficient &operator/=(const Coefficient &b)
    {
        return *this = *this / b;
    }

    // Same variant and same value. Values of different variants never compare
    // equal.
    friend bool operator==(const Coefficient &a, const Coefficient &b) = default;

    // Rationals as "num/den"; floats as the shortest round-trip decimal.
    std::string to_string() const;
    // Rationals as "p" or "p/q"; floats as to_string().
    std::string to_display() const;

private:
    std::variant<Rational, double> value_;
};

std::ostream &operator<<(std::ostream &os, const Coefficient &c);

// Zero and one of the same variant as `like`.
Coefficient zero_like(const Coefficient &like);
Coefficient one_like(const Coefficient &like);

// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

} // namespace revert
