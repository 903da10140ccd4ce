#include <revert/error.hpp>
#include <revert/series.hpp>

#include <algorithm>
#include <ostream>

namespace revert
{

namespace
{

void require_same_center(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.center() != b.center()) {
        throw Error(ErrorCode::CenterMismatch,
                    "series centers differ: " + a.center().to_display() + " vs " + b.center().to_display());
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(Coefficient center, std::vector<Coefficient> coeffs)
    : center_(std::move(center)), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw Error(ErrorCode::EmptyCoefficients, "a series needs at least one coefficient");
    }
    const auto kind = center_.kind();
    if (std::any_of(coeffs_.begin(), coeffs_.end(), [kind](const Coefficient &c) { return c.kind() != kind; })) {
        throw Error(ErrorCode::MixedVariants, "series mixes exact and float coefficients");
    }
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw Error(ErrorCode::InvalidArgument, "cannot truncate a series of order " + std::to_string(order())
                                                    + " to the higher order " + std::to_string(new_order));
    }
    return TruncatedSeries(center_, std::vector<Coefficient>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncatedSeries identity_series(const Coefficient &center, std::size_t order)
{
    std::vector<Coefficient> c(order + 1, zero_like(center));
    c[0] = center;
    if (order >= 1) {
        c[1] = one_like(center);
    }
    return TruncatedSeries(center, std::move(c));
}

TruncatedSeries constant_series(const Coefficient &center, const Coefficient &value, std::size_t order)
{
    std::vector<Coefficient> c(order + 1, zero_like(center));
    c[0] = value;
    return TruncatedSeries(center, std::move(c));
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_center(a, b);
    const auto n = std::min(a.order(), b.order());
    std::vector<Coefficient> c;
    c.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c.push_back(a[k] + b[k]);
    }
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_center(a, b);
    const auto n = std::min(a.order(), b.order());
    std::vector<Coefficient> c;
    c.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c.push_back(a[k] - b[k]);
    }
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_center(a, b);
    const auto n = std::min(a.order(), b.order());
    std::vector<Coefficient> c(n + 1, zero_like(a.center()));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries scale(const TruncatedSeries &a, const Coefficient &factor)
{
    std::vector<Coefficient> c;
    c.reserve(a.order() + 1);
    for (const auto &x : a.coeffs()) {
        c.push_back(x * factor);
    }
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries negate(const TruncatedSeries &a)
{
    std::vector<Coefficient> c;
    c.reserve(a.order() + 1);
    for (const auto &x : a.coeffs()) {
        c.push_back(-x);
    }
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries derivative(const TruncatedSeries &a)
{
    if (a.order() == 0) {
        throw Error(ErrorCode::OrderExhausted, "cannot differentiate a series of order 0");
    }
    const auto kind = a.kind();
    std::vector<Coefficient> c;
    c.reserve(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        c.push_back(Coefficient::from_integer(static_cast<long>(k), kind) * a[k]);
    }
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries &a)
{
    if (a.constant_term().is_zero()) {
        throw Error(ErrorCode::ZeroConstantTerm, "series with zero constant term has no reciprocal");
    }
    const auto n = a.order();
    const auto inv0 = one_like(a.center()) / a[0];
    std::vector<Coefficient> b;
    b.reserve(n + 1);
    b.push_back(inv0);
    for (std::size_t k = 1; k <= n; ++k) {
        auto acc = zero_like(a.center());
        for (std::size_t j = 1; j <= k; ++j) {
            acc += a[j] * b[k - j];
        }
        b.push_back(-(acc * inv0));
    }
    return TruncatedSeries(a.center(), std::move(b));
}

TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner)
{
    if (inner.constant_term() != outer.center()) {
        throw Error(ErrorCode::CompositionMismatch, "inner constant term " + inner.constant_term().to_display()
                                                        + " does not match outer center "
                                                        + outer.center().to_display());
    }
    const auto n = std::min(outer.order(), inner.order());
    // Shifted inner has zero constant term, so (inner - c)^k starts at degree k
    // and outer's unknown terms above n cannot reach degree n.
    const auto shifted = sub(inner, constant_series(inner.center(), outer.center(), inner.order())).truncated(n);

    auto result = constant_series(inner.center(), outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        result = mul(result, shifted);
        result = add(result, constant_series(inner.center(), outer[k], n));
    }
    return result;
}

double eval_float(const TruncatedSeries &a, double x)
{
    const double dx = x - a.center().to_double();
    double acc = 0.0;
    for (std::size_t k = a.order() + 1; k-- > 0;) {
        acc = acc * dx + a[k].to_double();
    }
    return acc;
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    os << "[";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        os << (k ? ", " : "") << s[k];
    }
    return os << "] @ " << s.center() << " (order " << s.order() << ")";
}

} // namespace revert
