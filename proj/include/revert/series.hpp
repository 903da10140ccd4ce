#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include <revert/coefficient.hpp>

namespace revert
{

// Truncated power series sum_{k=0}^{order} c_k (x - center)^k. Only the
// coefficients up to `order` are known; everything above is unknown, not
// zero. Binary operations therefore truncate to the smaller order.
class TruncatedSeries
{
public:
    // Throws EmptyCoefficients, MixedVariants (the center counts as well).
    TruncatedSeries(Coefficient center, std::vector<Coefficient> coeffs);

    const Coefficient &center() const noexcept
    {
        return center_;
    }
    std::span<const Coefficient> coeffs() const noexcept
    {
        return coeffs_;
    }
    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    const Coefficient &operator[](std::size_t k) const
    {
        return coeffs_.at(k);
    }
    const Coefficient &constant_term() const noexcept
    {
        return coeffs_.front();
    }
    NumericKind kind() const noexcept
    {
        return center_.kind();
    }

    // Drop coefficients above `new_order`. InvalidArgument if new_order > order().
    TruncatedSeries truncated(std::size_t new_order) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    Coefficient center_;
    std::vector<Coefficient> coeffs_;
};

// center + 1*(x - center), i.e. the variable itself, at the given order.
TruncatedSeries identity_series(const Coefficient &center, std::size_t order);

// The constant `value` at the given order.
TruncatedSeries constant_series(const Coefficient &center, const Coefficient &value, std::size_t order);

// Both throw CenterMismatch; result order is the minimum of the two.
TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b);

// Cauchy product truncated at min order. Throws CenterMismatch.
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

TruncatedSeries scale(const TruncatedSeries &a, const Coefficient &factor);
TruncatedSeries negate(const TruncatedSeries &a);

// Termwise derivative; consumes one order. Throws OrderExhausted at order 0.
TruncatedSeries derivative(const TruncatedSeries &a);

// Multiplicative inverse at the same order. Throws ZeroConstantTerm.
TruncatedSeries reciprocal(const TruncatedSeries &a);

// outer(inner(x)). Requires inner's constant term to equal outer's center
// (CompositionMismatch otherwise); the result is centered at inner's center
// with order min(outer.order, inner.order).
TruncatedSeries compose(const TruncatedSeries &outer, const TruncatedSeries &inner);

// Horner evaluation of the truncated polynomial at the absolute point x,
// i.e. in powers of (x - center).
double eval_float(const TruncatedSeries &a, double x);

inline TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return mul(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries &a)
{
    return negate(a);
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

} // namespace revert
