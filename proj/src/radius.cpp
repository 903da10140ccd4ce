#include <revert/error.hpp>
#include <revert/radius.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace revert
{

double estimate_radius(const TruncatedSeries &series, std::size_t window)
{
    if (window < 4) {
        throw Error(ErrorCode::InvalidArgument, "radius window must be at least 4, got " + std::to_string(window));
    }
    if (series.order() < window) {
        throw Error(ErrorCode::InsufficientData, "radius window " + std::to_string(window)
                                                     + " exceeds the series order " + std::to_string(series.order()));
    }

    std::vector<double> roots;
    for (std::size_t n = series.order() - window + 1; n <= series.order(); ++n) {
        const auto &c = series[n];
        if (c.is_zero()) {
            continue;
        }
        // Work with logarithms so huge exact coefficients never overflow.
        const double log_c = c.is_exact() ? log_abs(c.rational()) : std::log(std::fabs(c.float_value()));
        roots.push_back(std::exp(-log_c / static_cast<double>(n)));
    }
    if (roots.size() < 4) {
        throw Error(ErrorCode::InsufficientData, "only " + std::to_string(roots.size())
                                                     + " nonzero coefficients in the radius window; at least 4 needed");
    }

    std::sort(roots.begin(), roots.end());
    const auto mid = roots.size() / 2;
    return roots.size() % 2 == 1 ? roots[mid] : 0.5 * (roots[mid - 1] + roots[mid]);
}

} // namespace revert
