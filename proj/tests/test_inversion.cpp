#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include <revert/error.hpp>
#include <revert/inversion.hpp>
#include <revert/parser.hpp>
#include <revert/taylor.hpp>

#include "support/corpus.hpp"
#include "support/helpers.hpp"

using namespace revert;
using oracle::q;
using testing_support::poly_of;
using testing_support::rat;
using testing_support::series_of;

namespace
{

TruncatedSeries forward(std::string_view text, long center, std::size_t order,
                        NumericKind mode = NumericKind::Exact)
{
    return taylor_series(parse(text), Rational(center), order, mode);
}

Error error_of(auto &&fn)
{
    try {
        fn();
    } catch (const Error &e) {
        return e;
    }
    FAIL("expected an Error");
    return Error(ErrorCode::InvalidArgument, "");
}

// Inverse coefficients by undetermined coefficients on phi(w) = f(z0+w) - u0,
// with z0 put back as the constant term.
oracle::Poly reference_inverse(const TruncatedSeries &f, std::size_t n)
{
    auto b = oracle::revert_by_undetermined_coefficients(poly_of(f), n);
    b[0] = testing_support::to_q(f.center().rational());
    return b;
}

} // namespace

TEST_CASE("check_first_derivative")
{
    CHECK(check_first_derivative(forward("z+z^2", 0, 3)) == rat(1));
    CHECK(check_first_derivative(forward("2*z+3", 0, 3)) == rat(2));
    const auto e = error_of([] { return check_first_derivative(forward("z^2", 0, 3)); });
    CHECK(e.code() == ErrorCode::DerivativeVanishesAtCenter);
    CHECK(std::string(e.what()).find("translation to a nearby point") != std::string::npos);
    CHECK(error_of([] { return check_first_derivative(forward("z", 0, 0)); }).code() == ErrorCode::InsufficientOrder);
}

TEST_CASE("new formula examples")
{
    CHECK(poly_of(invert_new_formula(forward("z", 0, 4), 4).series) == oracle::Poly{0, 1, 0, 0, 0});

    const auto linear = invert_new_formula(forward("2*z+3", 0, 3), 3);
    CHECK(linear.u0 == rat(3));
    CHECK(linear.z0 == rat(0));
    CHECK(linear.series.center() == rat(3));
    CHECK(poly_of(linear.series) == oracle::Poly{0, q(1, 2), 0, 0});

    const auto catalan = oracle::signed_catalan(5);
    CHECK(catalan == oracle::Poly{0, 1, -1, 2, -5, 14});
    CHECK(poly_of(invert_new_formula(forward("z+z^2", 0, 5), 5).series) == catalan);

    const auto lambert = oracle::lambert_w(5);
    CHECK(lambert == oracle::Poly{0, 1, -1, q(3, 2), q(-8, 3), q(125, 24)});
    CHECK(poly_of(invert_new_formula(forward("z*exp(z)", 0, 5), 5).series) == lambert);

    CHECK(error_of([] { return invert_new_formula(forward("z+z^2", 0, 3), 5); }).code()
          == ErrorCode::InsufficientOrder);
    CHECK(error_of([] { return invert_new_formula(forward("z", 0, 3), 0); }).code() == ErrorCode::InvalidArgument);
    CHECK(error_of([] { return invert_new_formula(forward("z^2", 0, 3), 3); }).code()
          == ErrorCode::DerivativeVanishesAtCenter);
}

TEST_CASE("Lagrange-Burmann examples")
{
    CHECK(poly_of(invert_lagrange(forward("z+z^2", 0, 5), 5).series) == oracle::signed_catalan(5));
    CHECK(poly_of(invert_lagrange(forward("exp(z)-1", 0, 5), 5).series)
          == oracle::Poly{0, 1, q(-1, 2), q(1, 3), q(-1, 4), q(1, 5)});
    CHECK(poly_of(invert_lagrange(forward("z", 0, 2), 2).series) == oracle::Poly{0, 1, 0});
    CHECK(error_of([] { return invert_lagrange(forward("z+z^2", 0, 3), 4); }).code() == ErrorCode::InsufficientOrder);
    CHECK(error_of([] { return invert_lagrange(forward("1+z^2", 0, 3), 3); }).code()
          == ErrorCode::DerivativeVanishesAtCenter);
}

TEST_CASE("Newton reversion examples")
{
    const auto f = forward("z+z^2", 0, 5);
    const auto g = invert_newton(f, 5);
    CHECK(poly_of(g.series) == oracle::signed_catalan(5));
    CHECK_FALSE(roundtrip_failure(g, f).has_value());

    const auto s = forward("sin(z)", 0, 5);
    const auto arcsin = invert_newton(s, 5);
    CHECK(oracle::arcsin(5) == oracle::Poly{0, 1, 0, q(1, 6), 0, q(3, 40)});
    CHECK(poly_of(arcsin.series) == oracle::arcsin(5));
    CHECK_FALSE(roundtrip_failure(arcsin, s).has_value());

    CHECK(poly_of(invert_newton(forward("z", 0, 6), 6).series) == oracle::Poly{0, 1, 0, 0, 0, 0, 0});
    CHECK(poly_of(invert_newton(forward("z", 0, 1), 1).series) == oracle::Poly{0, 1});
    CHECK(error_of([] { return invert_newton(forward("z^3", 0, 3), 3); }).code()
          == ErrorCode::DerivativeVanishesAtCenter);
}

TEST_CASE("closed forms to higher order")
{
    CHECK(poly_of(invert_new_formula(forward("exp(z)-1", 0, 12), 12).series) == oracle::log1p(12));
    CHECK(poly_of(invert_new_formula(forward("z*exp(z)", 0, 10), 10).series) == oracle::lambert_w(10));
    CHECK(poly_of(invert_new_formula(forward("z+z^2", 0, 10), 10).series) == oracle::signed_catalan(10));
    CHECK(poly_of(invert_lagrange(forward("sin(z)", 0, 11), 11).series) == oracle::arcsin(11));
}

TEST_CASE("backends agree with undetermined coefficients over the corpus")
{
    const std::size_t N = 10;
    for (const auto &c : corpus::inversion) {
        CAPTURE(c.expr);
        const auto f = forward(c.expr, c.center, N);
        const auto expected = reference_inverse(f, N);
        for (auto m : all_methods) {
            CAPTURE(method_name(m));
            const auto g = invert(f, N, m);
            CHECK(poly_of(g.series) == expected);
            CHECK(g.method == m);
            CHECK(g.series[0] == g.z0);
            CHECK(g.u0 == f.constant_term());
            CHECK(g.series.center() == g.u0);
            CHECK(g.series[1] * g.f_prime_at_z0 == rat(1));
            CHECK_FALSE(g.radius_estimate.has_value());
        }
    }
}

TEST_CASE("random polynomials: three-way agreement")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 40; ++i) {
        auto p = testing_support::random_poly(rng, 8, 6);
        if (p[1] == 0) {
            p[1] = oracle::q(-3, 5);
        }
        const long center = std::uniform_int_distribution<long>(-3, 3)(rng);
        const auto f = series_of(p, center);
        const auto expected = reference_inverse(f, 8);
        for (auto m : all_methods) {
            CAPTURE(method_name(m));
            const auto g = invert(f, 8, m);
            CHECK(poly_of(g.series) == expected);
            CHECK_FALSE(roundtrip_failure(g, f).has_value());
        }
    }
}

TEST_CASE("second-order identity")
{
    for (const auto &c : corpus::inversion) {
        CAPTURE(c.expr);
        const auto f = forward(c.expr, c.center, 6);
        const auto f1 = f[1].rational();
        const auto f2 = Rational(2) * f[2].rational();
        const auto expected = -f2 / (Rational(2) * pow(f1, 3));
        for (auto m : all_methods) {
            CHECK(invert(f, 6, m).series[2].rational() == expected);
        }
    }
}

TEST_CASE("operator chain order bookkeeping")
{
    const auto f = forward("z*exp(z)", 0, 11);
    for (std::size_t n : {1u, 4u, 11u}) {
        const auto chain = operator_chain(f, n);
        REQUIRE(chain.size() == n);
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(chain[k - 1].order() == f.order() - k);
        }
    }
    // T_1 = 1/f', T_2 = (1/f') (1/f')'
    const auto h = reciprocal(derivative(f));
    const auto chain = operator_chain(f, 2);
    CHECK(chain[0] == h);
    CHECK(chain[1] == h * derivative(h));
}

TEST_CASE("order requirement is exact")
{
    for (auto m : all_methods) {
        CAPTURE(method_name(m));
        for (std::size_t n : {1u, 2u, 7u}) {
            const auto f = forward("tan(z)", 0, n);
            CHECK(invert(f, n, m).series.order() == n);
            if (n > 1) {
                const auto shorter = f.truncated(n - 1);
                CHECK(error_of([&] { return invert(shorter, n, m); }).code() == ErrorCode::InsufficientOrder);
            }
        }
    }
}

TEST_CASE("translated center recovers the closed-form inverse")
{
    // z^2 - 2z about 3 inverts to 1 + sqrt(1 + u) about u0 = 3.
    const std::size_t N = 14;
    const auto f_float = forward("z^2-2*z", 3, N, NumericKind::Float);
    const auto f_exact = forward("z^2-2*z", 3, N);
    CHECK(check_first_derivative(f_exact) == rat(4));
    for (auto m : all_methods) {
        CAPTURE(method_name(m));
        const auto g_float = invert(f_float, N, m);
        const auto g_exact = invert(f_exact, N, m);
        CHECK(g_float.u0.float_value() == 3.0);
        for (double du = -0.1; du <= 0.1 + 1e-12; du += 0.025) {
            const double u = 3.0 + du;
            const double z = 1.0 + std::sqrt(1.0 + u);
            CHECK(std::fabs(eval_float(g_float.series, u) - z) <= 1e-9);
            CHECK(std::fabs(eval_float(g_exact.series, u) - z) <= 1e-9);
        }
    }
}

TEST_CASE("compare_methods")
{
    const auto f = forward("z+z^2", 0, 8);
    const std::set<MethodKind> all(std::begin(all_methods), std::end(all_methods));
    const auto report = compare_methods(f, 8, all);
    CHECK(report.agreement);
    CHECK_FALSE(report.first_divergence.has_value());
    CHECK_FALSE(report.max_abs_diff.has_value());
    REQUIRE(report.results.size() == 3);
    CHECK(report.results[0].method == MethodKind::NewFormula);
    CHECK(report.results[1].method == MethodKind::LagrangeBurmann);
    CHECK(report.results[2].method == MethodKind::NewtonReversion);
    CHECK(report.order == 8);

    CHECK(compare_methods(forward("z*exp(z)", 0, 8), 8, all).agreement);

    const auto e = error_of([&] { return compare_methods(f, 8, {MethodKind::NewFormula}); });
    CHECK(e.code() == ErrorCode::InvalidArgument);

    const auto tagged = error_of([] {
        return compare_methods(forward("z^2", 0, 4), 4, {MethodKind::LagrangeBurmann, MethodKind::NewtonReversion});
    });
    CHECK(tagged.code() == ErrorCode::DerivativeVanishesAtCenter);
    CHECK(std::string(tagged.what()).rfind("lb: ", 0) == 0);
}

TEST_CASE("compare_methods is symmetric and deterministic")
{
    const auto f = forward("tan(z)", 0, 9);
    const std::set<MethodKind> a{MethodKind::NewtonReversion, MethodKind::NewFormula};
    const std::set<MethodKind> b{MethodKind::NewFormula, MethodKind::NewtonReversion};
    const auto ra = compare_methods(f, 9, a, true);
    const auto rb = compare_methods(f, 9, b, false);
    REQUIRE(ra.results.size() == rb.results.size());
    for (std::size_t i = 0; i < ra.results.size(); ++i) {
        CHECK(ra.results[i].method == rb.results[i].method);
        CHECK(ra.results[i].coeffs == rb.results[i].coeffs);
    }
    CHECK(ra.agreement == rb.agreement);
    for (int i = 0; i < 5; ++i) {
        const auto again = compare_methods(f, 9, a, true);
        CHECK(again.results[1].coeffs == ra.results[1].coeffs);
    }
}

TEST_CASE("float mode comparison records the largest difference")
{
    const auto f = forward("z*exp(z)", 0, 10, NumericKind::Float);
    const std::set<MethodKind> all(std::begin(all_methods), std::end(all_methods));
    const auto report = compare_methods(f, 10, all);
    CHECK(report.agreement);
    REQUIRE(report.max_abs_diff.has_value());
    CHECK(*report.max_abs_diff < 1e-9);
    const auto exact = oracle::lambert_w(10);
    for (const auto &r : report.results) {
        for (std::size_t k = 0; k <= 10; ++k) {
            CHECK(r.coeffs[k].float_value() == doctest::Approx(exact[k].get_d()).epsilon(1e-12));
        }
    }
}

TEST_CASE("method names")
{
    for (auto m : all_methods) {
        CHECK(parse_method(method_name(m)) == m);
    }
    CHECK(error_of([] { return parse_method("all"); }).code() == ErrorCode::InvalidArgument);
}
