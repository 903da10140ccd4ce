#include <revert/error.hpp>
#include <revert/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>

namespace revert
{

namespace
{

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_digits(std::string_view s)
{
    return Integer(std::string(s), 10);
}

} // namespace

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto bad = [&] { return Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'"); };

    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const std::string_view original = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational result;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw bad();
        }
        const Integer d = parse_digits(den);
        if (d == 0) {
            throw Error(ErrorCode::DivisionByZero, "rational '" + std::string(original) + "' has zero denominator");
        }
        result = Rational(parse_digits(num), d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) {
            throw bad();
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(parse_digits(whole) * scale + parse_digits(frac), scale);
    } else {
        if (!all_digits(text)) {
            throw bad();
        }
        result = Rational(parse_digits(text));
    }
    return negative ? -result : result;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational &Rational::operator+=(const Rational &other)
{
    value_ += other.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    value_ -= other.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    value_ *= other.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "rational division by zero");
    }
    value_ /= other.value_;
    return *this;
}

std::string Rational::to_string() const
{
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_display() const
{
    return is_integer() ? value_.get_num().get_str() : to_string();
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_display();
}

Rational abs(const Rational &r)
{
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero()) {
            throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
        }
        return Rational(1) / pow(base, -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

double to_double(const Rational &r)
{
    if (r.is_zero()) {
        return 0.0;
    }
    const bool negative = r.sign() < 0;
    Integer num = r.numerator();
    if (negative) {
        num = -num;
    }
    Integer den = r.denominator();

    // |r| lies in (2^(e-1), 2^(e+1)).
    const long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2))
                   - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    if (e - 1 >= 1024) {
        throw Error(ErrorCode::Overflow, "rational " + r.to_string() + " exceeds the double range");
    }
    if (e + 1 <= -1076) {
        return negative ? -0.0 : 0.0;
    }

    auto scaled_quotient = [&](long shift, Integer &q, Integer &rem) {
        Integer n = num;
        Integer d = den;
        if (shift >= 0) {
            mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        } else {
            mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
        }
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        return d;
    };

    // Pick the shift so the integer quotient carries exactly 53 significant
    // bits, or fewer when the result is subnormal.
    long shift = 53 - e;
    Integer q;
    Integer rem;
    Integer d = scaled_quotient(shift, q, rem);
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 53) {
        --shift;
        d = scaled_quotient(shift, q, rem);
    }
    if (shift > 1074) {
        shift = 1074;
        d = scaled_quotient(shift, q, rem);
    }

    const int half = cmp(Integer(2 * rem), d);
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) {
        ++q;
    }
    const double result = std::ldexp(q.get_d(), static_cast<int>(-shift));
    if (std::isinf(result)) {
        throw Error(ErrorCode::Overflow, "rational " + r.to_string() + " exceeds the double range");
    }
    return negative ? -result : result;
}

double log_abs(const Rational &r)
{
    if (r.is_zero()) {
        throw Error(ErrorCode::DomainError, "logarithm of zero");
    }
    auto log_integer = [](const Integer &v) {
        long exp2 = 0;
        const double mant = std::fabs(mpz_get_d_2exp(&exp2, v.get_mpz_t()));
        return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
    };
    return log_integer(r.numerator()) - log_integer(r.denominator());
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace revert
