#pragma once

#include <cstddef>

#include <revert/coefficient.hpp>
#include <revert/expression.hpp>
#include <revert/series.hpp>

namespace revert
{

// Taylor coefficients of `f` about `center` up to degree `order`, computed by
// propagating truncated series through the expression tree.
//
// In exact mode every elementary function must have a rational expansion:
// exp, sin, cos and tan need an argument vanishing at the center, log needs
// an argument equal to 1 there, sqrt an argument whose value there is the
// square of a nonzero rational. Anything else raises NonRationalExpansion;
// float mode has no such restriction.
//
// Throws PoleAtCenter for division by a series vanishing at the center,
// negative powers of such a series, log/sqrt of an argument vanishing at the
// center, and tan where cos vanishes. Throws DomainError for log/sqrt of a
// negative value.
TruncatedSeries taylor_series(const Expression &f, const Rational &center, std::size_t order,
                              NumericKind mode = NumericKind::Exact);

} // namespace revert
