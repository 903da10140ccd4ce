#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace revert
{

using Integer = mpz_class;

// Exact rational number backed by GMP. Always stored reduced with a positive
// denominator; zero is 0/1.
class Rational
{
public:
    Rational() = default;

    template <typename T>
        requires std::is_integral_v<T>
    Rational(T value) : value_(to_integer(value))
    {
    }

    Rational(const Integer &value) : value_(value) {}

    // Throws DivisionByZero when den == 0.
    Rational(const Integer &num, const Integer &den);

    // Accepts "p", "p/q" and finite decimals ("-0.25"), surrounding
    // whitespace allowed. Throws InvalidArgument on anything else.
    static Rational parse(std::string_view text);

    Integer numerator() const
    {
        return value_.get_num();
    }
    Integer denominator() const
    {
        return value_.get_den();
    }

    int sign() const noexcept
    {
        return sgn(value_);
    }
    bool is_zero() const noexcept
    {
        return sign() == 0;
    }
    bool is_integer() const
    {
        return value_.get_den() == 1;
    }

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    // Throws DivisionByZero.
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

    // Canonical serialized form "num/den", e.g. "-5/14", "3/1", "0/1".
    std::string to_string() const;

    // Human form: integers without the "/1".
    std::string to_display() const;

    const mpq_class &raw() const noexcept
    {
        return value_;
    }

private:
    template <typename T>
    static Integer to_integer(T value)
    {
        if constexpr (std::is_signed_v<T>) {
            Integer r;
            mpz_set_si(r.get_mpz_t(), static_cast<long>(value));
            return r;
        } else {
            Integer r;
            mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(value));
            return r;
        }
    }

    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational abs(const Rational &r);

// Integer power; negative exponents require a nonzero base (DivisionByZero).
Rational pow(const Rational &base, long exponent);

// Nearest binary64, ties to even. Throws Overflow when the rounded magnitude
// exceeds the largest finite double. Values below the subnormal range round
// to (signed) zero.
double to_double(const Rational &r);

// Natural logarithm of |r|, finite for any nonzero r regardless of size.
// Throws DomainError for zero.
double log_abs(const Rational &r);

Integer factorial(unsigned long n);

} // namespace revert
