#include <revert/error.hpp>
#include <revert/inversion.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

namespace revert
{

namespace
{

constexpr const char *translation_hint =
    "the first derivative vanishes at the expansion point, so the function is not locally invertible there; "
    "a translation to a nearby point should be made (re-expand about a different center)";

void require_order(const TruncatedSeries &f, std::size_t order)
{
    if (order == 0) {
        throw Error(ErrorCode::InvalidArgument, "at least one inverse coefficient must be requested");
    }
    if (f.order() < order) {
        throw Error(ErrorCode::InsufficientOrder, std::to_string(order) + " inverse coefficients need the forward "
                                                      "series to order >= " + std::to_string(order) + ", got order "
                                                      + std::to_string(f.order()));
    }
}

InversionResult assemble(MethodKind method, const TruncatedSeries &f, const Coefficient &f_prime,
                         std::vector<Coefficient> coeffs)
{
    return InversionResult{method,
                           f.center(),
                           f.constant_term(),
                           TruncatedSeries(f.constant_term(), std::move(coeffs)),
                           f_prime,
                           std::nullopt};
}

Coefficient divide_by_integer(const Coefficient &c, const Integer &n)
{
    return c / Coefficient::from_integer(n, c.kind());
}

// Coefficients [from, to] of s as a series of order to - from.
TruncatedSeries slice(const TruncatedSeries &s, std::size_t from, std::size_t to)
{
    return TruncatedSeries(s.center(), std::vector<Coefficient>(s.coeffs().begin() + static_cast<std::ptrdiff_t>(from),
                                                                s.coeffs().begin() + static_cast<std::ptrdiff_t>(to) + 1));
}

TruncatedSeries padded(const TruncatedSeries &s, std::size_t order)
{
    std::vector<Coefficient> c(s.coeffs().begin(), s.coeffs().end());
    c.resize(order + 1, zero_like(s.center()));
    return TruncatedSeries(s.center(), std::move(c));
}

bool float_close(double a, double b, double scale)
{
    return std::fabs(a - b) <= float_agreement_tolerance * std::max({1.0, std::fabs(a), std::fabs(b), scale});
}

} // namespace

std::string_view method_name(MethodKind method) noexcept
{
    switch (method) {
        case MethodKind::NewFormula:
            return "new";
        case MethodKind::LagrangeBurmann:
            return "lb";
        case MethodKind::NewtonReversion:
            return "newton";
    }
    return "?";
}

MethodKind parse_method(std::string_view name)
{
    for (auto m : all_methods) {
        if (method_name(m) == name) {
            return m;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "' (expected new, lb or newton)");
}

Coefficient check_first_derivative(const TruncatedSeries &f)
{
    if (f.order() < 1) {
        throw Error(ErrorCode::InsufficientOrder, "the first derivative needs a forward series of order >= 1");
    }
    if (f[1].is_zero()) {
        throw Error(ErrorCode::DerivativeVanishesAtCenter,
                    "f'(" + f.center().to_display() + ") = 0: " + translation_hint);
    }
    return f[1];
}

std::vector<TruncatedSeries> operator_chain(const TruncatedSeries &f, std::size_t n)
{
    require_order(f, n);
    check_first_derivative(f);
    const auto h = reciprocal(derivative(f));
    std::vector<TruncatedSeries> chain;
    chain.reserve(n);
    chain.push_back(h);
    for (std::size_t k = 2; k <= n; ++k) {
        chain.push_back(h * derivative(chain.back()));
    }
    return chain;
}

InversionResult invert_new_formula(const TruncatedSeries &f, std::size_t order)
{
    require_order(f, order);
    const auto f_prime = check_first_derivative(f);
    const auto chain = operator_chain(f, order);

    std::vector<Coefficient> coeffs{f.center()};
    coeffs.reserve(order + 1);
    Integer fact = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        fact *= static_cast<unsigned long>(n);
        // Evaluating at z0 is taking the constant term.
        coeffs.push_back(divide_by_integer(chain[n - 1].constant_term(), fact));
    }
    return assemble(MethodKind::NewFormula, f, f_prime, std::move(coeffs));
}

InversionResult invert_lagrange(const TruncatedSeries &f, std::size_t order)
{
    require_order(f, order);
    const auto f_prime = check_first_derivative(f);

    // phi(w) / w with phi(w) = f(z0 + w) - u0, then w / phi(w).
    const auto psi = slice(f, 1, order);
    const auto r = reciprocal(psi.truncated(order - 1));

    std::vector<Coefficient> coeffs{f.center()};
    coeffs.reserve(order + 1);
    auto power = r;
    for (std::size_t n = 1; n <= order; ++n) {
        if (n > 1) {
            power = power * r;
        }
        coeffs.push_back(divide_by_integer(power[n - 1], Integer(static_cast<unsigned long>(n))));
    }
    return assemble(MethodKind::LagrangeBurmann, f, f_prime, std::move(coeffs));
}

InversionResult invert_newton(const TruncatedSeries &f, std::size_t order)
{
    require_order(f, order);
    const auto f_prime = check_first_derivative(f);
    const auto &u0 = f.constant_term();
    const auto fp = derivative(f);

    // g is trusted to order `known`; each step doubles it.
    auto g = TruncatedSeries(u0, {f.center(), one_like(u0) / f_prime});
    std::size_t known = 1;
    while (known < order) {
        const auto target = std::min(2 * known, order);
        const auto extended = padded(g, target);
        // f(g(u)) - u vanishes below degree known + 1.
        const auto residual = compose(f, extended) - identity_series(u0, target);
        const auto slope = compose(fp, extended.truncated(target - known));
        const auto step = slice(residual, known, target) * reciprocal(slope);

        std::vector<Coefficient> next(extended.coeffs().begin(), extended.coeffs().end());
        for (std::size_t k = known; k <= target; ++k) {
            next[k] -= step[k - known];
        }
        g = TruncatedSeries(u0, std::move(next));
        known = target;
    }
    return InversionResult{MethodKind::NewtonReversion, f.center(), u0, g, f_prime, std::nullopt};
}

InversionResult invert(const TruncatedSeries &f, std::size_t order, MethodKind method)
{
    switch (method) {
        case MethodKind::NewFormula:
            return invert_new_formula(f, order);
        case MethodKind::LagrangeBurmann:
            return invert_lagrange(f, order);
        case MethodKind::NewtonReversion:
            return invert_newton(f, order);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown method");
}

ComparisonReport compare_methods(const TruncatedSeries &f, std::size_t order, const std::set<MethodKind> &methods,
                                 bool parallel)
{
    if (methods.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "comparison needs at least two methods");
    }

    auto run = [&f, order](MethodKind m) {
        try {
            return invert(f, order, m);
        } catch (const Error &e) {
            throw Error(e.code(), std::string(method_name(m)) + ": " + e.what(), e.position());
        }
    };

    std::vector<InversionResult> results;
    if (parallel) {
        std::vector<std::future<InversionResult>> pending;
        for (auto m : methods) {
            pending.push_back(std::async(std::launch::async, run, m));
        }
        for (auto &p : pending) {
            results.push_back(p.get());
        }
    } else {
        for (auto m : methods) {
            results.push_back(run(m));
        }
    }

    ComparisonReport report{order, {}, true, std::nullopt, std::nullopt};
    for (const auto &r : results) {
        report.results.push_back({r.method, std::vector<Coefficient>(r.series.coeffs().begin(), r.series.coeffs().end())});
    }

    const bool exact = f.kind() == NumericKind::Exact;
    double max_diff = 0.0;
    for (std::size_t k = 0; k <= order; ++k) {
        bool same = true;
        for (std::size_t i = 0; i < results.size(); ++i) {
            for (std::size_t j = i + 1; j < results.size(); ++j) {
                const auto &a = report.results[i].coeffs[k];
                const auto &b = report.results[j].coeffs[k];
                if (exact) {
                    same = same && a == b;
                } else {
                    const double x = a.float_value();
                    const double y = b.float_value();
                    max_diff = std::max(max_diff, std::fabs(x - y));
                    same = same && float_close(x, y, 0.0);
                }
            }
        }
        if (!same && !report.first_divergence) {
            report.first_divergence = k;
        }
    }
    report.agreement = !report.first_divergence.has_value();
    if (!exact) {
        report.max_abs_diff = max_diff;
    }
    return report;
}

std::optional<std::size_t> roundtrip_failure(const InversionResult &g, const TruncatedSeries &f)
{
    const auto composed = compose(g.series, f);
    const auto n = composed.order();
    const auto expected = identity_series(f.center(), n);
    if (f.kind() == NumericKind::Exact) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (composed[k] != expected[k]) {
                return k;
            }
        }
        return std::nullopt;
    }

    // Scale the float tolerance by the same composition on absolute values,
    // which bounds the size of the terms that cancel in each coefficient.
    auto magnitudes = [](const TruncatedSeries &s, bool drop_constant) {
        std::vector<Coefficient> c;
        for (std::size_t k = 0; k <= s.order(); ++k) {
            c.emplace_back(drop_constant && k == 0 ? 0.0 : std::fabs(s[k].float_value()));
        }
        return TruncatedSeries(Coefficient(0.0), std::move(c));
    };
    if (!float_close(composed[0].float_value(), expected[0].float_value(), std::fabs(g.series[0].float_value()))) {
        return 0;
    }
    const auto bound = compose(magnitudes(g.series, false), magnitudes(f, true));
    for (std::size_t k = 1; k <= n; ++k) {
        if (!float_close(composed[k].float_value(), expected[k].float_value(), bound[k].float_value())) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace revert
