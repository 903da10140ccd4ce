#include <revert/coefficient.hpp>
#include <revert/error.hpp>

#include <charconv>
#include <cmath>
#include <ostream>

namespace revert
{

namespace
{

double checked(double value)
{
    if (std::isnan(value)) {
        throw Error(ErrorCode::NotANumber, "float coefficient arithmetic produced NaN");
    }
    return value;
}

[[noreturn]] void mixed()
{
    throw Error(ErrorCode::MixedVariants, "cannot combine exact and float coefficients");
}

template <typename ExactOp, typename FloatOp>
Coefficient binary(const Coefficient &a, const Coefficient &b, ExactOp exact, FloatOp flt)
{
    if (a.kind() != b.kind()) {
        mixed();
    }
    if (a.is_exact()) {
        return Coefficient(exact(a.rational(), b.rational()));
    }
    return Coefficient(checked(flt(a.float_value(), b.float_value())));
}

} // namespace

Coefficient::Coefficient(double value) : value_(checked(value)) {}

Coefficient Coefficient::from_integer(long n, NumericKind kind)
{
    return kind == NumericKind::Exact ? Coefficient(Rational(n)) : Coefficient(static_cast<double>(n));
}

Coefficient Coefficient::from_integer(const Integer &n, NumericKind kind)
{
    return from_rational(Rational(n), kind);
}

Coefficient Coefficient::from_rational(const Rational &r, NumericKind kind)
{
    return kind == NumericKind::Exact ? Coefficient(r) : Coefficient(revert::to_double(r));
}

const Rational &Coefficient::rational() const
{
    if (const auto *r = std::get_if<Rational>(&value_)) {
        return *r;
    }
    throw Error(ErrorCode::InvalidArgument, "coefficient is not exact");
}

double Coefficient::float_value() const
{
    if (const auto *d = std::get_if<double>(&value_)) {
        return *d;
    }
    throw Error(ErrorCode::InvalidArgument, "coefficient is not a float");
}

double Coefficient::to_double() const
{
    return is_exact() ? revert::to_double(rational()) : float_value();
}

bool Coefficient::is_zero() const
{
    return sign() == 0;
}

int Coefficient::sign() const
{
    if (is_exact()) {
        return rational().sign();
    }
    const double d = float_value();
    return (d > 0) - (d < 0);
}

Coefficient Coefficient::operator-() const
{
    return is_exact() ? Coefficient(-rational()) : Coefficient(-float_value());
}

Coefficient operator+(const Coefficient &a, const Coefficient &b)
{
    return binary(
        a, b, [](const Rational &x, const Rational &y) { return x + y; }, [](double x, double y) { return x + y; });
}

Coefficient operator-(const Coefficient &a, const Coefficient &b)
{
    return binary(
        a, b, [](const Rational &x, const Rational &y) { return x - y; }, [](double x, double y) { return x - y; });
}

Coefficient operator*(const Coefficient &a, const Coefficient &b)
{
    return binary(
        a, b, [](const Rational &x, const Rational &y) { return x * y; }, [](double x, double y) { return x * y; });
}

Coefficient operator/(const Coefficient &a, const Coefficient &b)
{
    if (b.kind() == a.kind() && b.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "coefficient division by zero");
    }
    return binary(
        a, b, [](const Rational &x, const Rational &y) { return x / y; }, [](double x, double y) { return x / y; });
}

std::string Coefficient::to_string() const
{
    return is_exact() ? rational().to_string() : format_double(float_value());
}

std::string Coefficient::to_display() const
{
    return is_exact() ? rational().to_display() : format_double(float_value());
}

std::ostream &operator<<(std::ostream &os, const Coefficient &c)
{
    return os << c.to_display();
}

Coefficient zero_like(const Coefficient &like)
{
    return Coefficient::from_integer(0L, like.kind());
}

Coefficient one_like(const Coefficient &like)
{
    return Coefficient::from_integer(1L, like.kind());
}

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

} // namespace revert
