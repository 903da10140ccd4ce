#pragma once

#include <cstddef>

#include <revert/series.hpp>

namespace revert
{

inline constexpr std::size_t default_radius_window = 16;

// Root-test estimate of the radius of convergence: the median of
// |c_n|^(-1/n) over the nonzero coefficients among the last `window` ones
// (indices order-window+1 .. order). Zero coefficients are skipped, so
// series with vanishing even or odd terms are handled.
//
// Throws InvalidArgument for window < 4, InsufficientData when the series is
// shorter than the window or fewer than 4 of the window's coefficients are
// nonzero.
double estimate_radius(const TruncatedSeries &series, std::size_t window = default_radius_window);

} // namespace revert
