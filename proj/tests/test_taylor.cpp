#include <doctest.h>

#include <cmath>

#include <revert/error.hpp>
#include <revert/parser.hpp>
#include <revert/taylor.hpp>

#include "support/helpers.hpp"

using namespace revert;
using oracle::q;
using testing_support::poly_of;

namespace
{

TruncatedSeries expand(std::string_view text, long center, std::size_t order, NumericKind mode = NumericKind::Exact)
{
    return taylor_series(parse(text), Rational(center), order, mode);
}

ErrorCode expand_error(std::string_view text, long center, NumericKind mode = NumericKind::Exact)
{
    try {
        expand(text, center, 4, mode);
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an expansion error for " << text);
    return ErrorCode::InvalidArgument;
}

oracle::Poly truncate(oracle::Poly p, std::size_t order)
{
    p.resize(order + 1);
    return p;
}

} // namespace

TEST_CASE("known expansions")
{
    CHECK(poly_of(expand("exp(z)", 0, 4)) == oracle::Poly{1, 1, q(1, 2), q(1, 6), q(1, 24)});
    CHECK(poly_of(expand("sin(z)", 0, 4)) == oracle::Poly{0, 1, 0, q(-1, 6), 0});
    CHECK(poly_of(expand("cos(z)", 0, 4)) == oracle::Poly{1, 0, q(-1, 2), 0, q(1, 24)});
    CHECK(poly_of(expand("1/(1-z)", 0, 3)) == oracle::Poly{1, 1, 1, 1});
    CHECK(poly_of(expand("tan(z)", 0, 7)) == oracle::Poly{0, 1, 0, q(1, 3), 0, q(2, 15), 0, q(17, 315)});
    CHECK(poly_of(expand("log(1+z)", 0, 9)) == oracle::log1p(9));
    CHECK(poly_of(expand("z*exp(z)", 0, 3)) == oracle::Poly{0, 1, 1, q(1, 2)});
    CHECK(poly_of(expand("sqrt(1+z)", 0, 3)) == oracle::Poly{1, q(1, 2), q(-1, 8), q(1, 16)});
    CHECK(poly_of(expand("sqrt(4+z)", 0, 2)) == oracle::Poly{2, q(1, 4), q(-1, 64)});
    // 1/z^2 about 1: sum (-1)^k (k+1) w^k
    CHECK(poly_of(expand("z^-2", 1, 4)) == oracle::Poly{1, -2, 3, -4, 5});
    CHECK(poly_of(expand("z^2-2*z", 3, 3)) == oracle::Poly{3, 4, 1, 0});
    CHECK(poly_of(expand("0.5*z + 1/4", 2, 1)) == oracle::Poly{q(5, 4), q(1, 2)});
    CHECK(expand("z", 7, 0).order() == 0);
}

TEST_CASE("expansion errors")
{
    CHECK(expand_error("log(z)", 0) == ErrorCode::PoleAtCenter);
    CHECK(expand_error("sqrt(z)", 0) == ErrorCode::PoleAtCenter);
    CHECK(expand_error("1/z", 0) == ErrorCode::PoleAtCenter);
    CHECK(expand_error("z^-3", 0) == ErrorCode::PoleAtCenter);
    CHECK(expand_error("1/(z-2)", 2) == ErrorCode::PoleAtCenter);
    CHECK(expand_error("1/0", 0) == ErrorCode::PoleAtCenter);
    CHECK(expand_error("exp(z)", 1) == ErrorCode::NonRationalExpansion);
    CHECK(expand_error("sin(z)", 1) == ErrorCode::NonRationalExpansion);
    CHECK(expand_error("log(z)", 2) == ErrorCode::NonRationalExpansion);
    CHECK(expand_error("sqrt(z)", 2) == ErrorCode::NonRationalExpansion);
    CHECK(expand_error("log(z)", -1) == ErrorCode::DomainError);
    CHECK(expand_error("sqrt(z)", -4) == ErrorCode::DomainError);
    CHECK(expand_error("log(z)", -1, NumericKind::Float) == ErrorCode::DomainError);
    CHECK(expand_error("log(z)", 0, NumericKind::Float) == ErrorCode::PoleAtCenter);
}

TEST_CASE("exact sqrt of perfect squares")
{
    CHECK(poly_of(expand("sqrt(z)", 4, 2)) == oracle::Poly{2, q(1, 4), q(-1, 64)});
    CHECK(poly_of(taylor_series(parse("sqrt(z)"), Rational(Integer(9), Integer(4)), 1))
          == oracle::Poly{q(3, 2), q(1, 3)});
}

TEST_CASE("float mode")
{
    const auto e = expand("exp(z)", 1, 5, NumericKind::Float);
    CHECK(e.kind() == NumericKind::Float);
    double fact = 1;
    for (std::size_t k = 0; k <= 5; ++k) {
        fact *= k == 0 ? 1 : static_cast<double>(k);
        CHECK(e[k].float_value() == doctest::Approx(std::exp(1.0) / fact).epsilon(1e-14));
    }
    const auto l = expand("log(z)", 2, 3, NumericKind::Float);
    CHECK(l[0].float_value() == doctest::Approx(std::log(2.0)));
    CHECK(l[1].float_value() == doctest::Approx(0.5));
    CHECK(l[2].float_value() == doctest::Approx(-0.125));

    // Float mode agrees with exact mode wherever both apply.
    for (const auto *text : {"tan(z)", "z*exp(z)", "sqrt(1+z)/(2-z)", "cos(z)^(-2)", "log(1+z^2)"}) {
        CAPTURE(text);
        const auto exact = expand(text, 0, 10);
        const auto flt = expand(text, 0, 10, NumericKind::Float);
        for (std::size_t k = 0; k <= 10; ++k) {
            CHECK(flt[k].float_value() == doctest::Approx(exact[k].to_double()).epsilon(1e-13));
        }
    }
}

TEST_CASE("node recurrences satisfy their defining identities")
{
    const std::size_t K = 12;
    for (const auto *inner_text : {"z", "z + z^2/3", "sin(z) - 2*z", "z*exp(z)", "tan(z)/(1-z)"}) {
        CAPTURE(inner_text);
        const auto inner = parse(inner_text);
        const auto i = taylor_series(inner, Rational(0), K);
        const auto di = derivative(i);

        const auto s_exp = taylor_series(Expression::call(Function::Exp, inner), Rational(0), K);
        CHECK(derivative(s_exp) == s_exp.truncated(K - 1) * di);

        const auto s_sin = taylor_series(Expression::call(Function::Sin, inner), Rational(0), K);
        const auto s_cos = taylor_series(Expression::call(Function::Cos, inner), Rational(0), K);
        CHECK(poly_of(s_sin * s_sin + s_cos * s_cos) == truncate(oracle::Poly{1}, K));
        CHECK(derivative(s_sin) == s_cos.truncated(K - 1) * di);

        const auto one_plus = Expression::binary(BinaryOp::Add, Expression::constant(Rational(1)), inner);
        const auto s_log = taylor_series(Expression::call(Function::Log, one_plus), Rational(0), K);
        const auto a = taylor_series(one_plus, Rational(0), K);
        CHECK(derivative(s_log) * a.truncated(K - 1) == derivative(a));

        const auto s_sqrt = taylor_series(Expression::call(Function::Sqrt, one_plus), Rational(0), K);
        CHECK(s_sqrt * s_sqrt == a);

        const auto s_tan = taylor_series(Expression::call(Function::Tan, inner), Rational(0), K);
        CHECK(s_tan * s_cos == s_sin);
    }
}

TEST_CASE("truncating a longer expansion equals a shorter expansion")
{
    for (const auto *text : {"exp(z)-1", "tan(z)", "z*exp(z)", "sqrt(1+z)*log(1+z)", "1/(1+z^2)", "cos(z)^(-2)"}) {
        CAPTURE(text);
        const auto f = parse(text);
        const auto full = taylor_series(f, Rational(0), 15);
        for (std::size_t k : {0u, 1u, 5u, 14u}) {
            CHECK(full.truncated(k) == taylor_series(f, Rational(0), k));
        }
    }
}
