#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include <revert/coefficient.hpp>
#include <revert/inversion.hpp>
#include <revert/series.hpp>

namespace revert
{

using Json = nlohmann::ordered_json;

// Coefficient strings: exact values as "num/den" (always with a slash),
// floats as the shortest round-trip decimal (never with a slash).
Coefficient parse_coefficient(std::string_view text);

// {"center": str, "order": K, "coeffs": [str...]}
Json to_json(const TruncatedSeries &s);
// Throws InvalidArgument on schema violations, plus the TruncatedSeries
// constructor errors.
TruncatedSeries series_from_json(const Json &j);

// {"method": str, "z0": str, "u0": str, "order": K, "coeffs": [str...],
//  "f_prime_at_z0": str, "radius_estimate": float|null}
Json to_json(const InversionResult &r);
InversionResult inversion_from_json(const Json &j);

// {"order": K, "methods": [str...], "coeffs": {method: [str...]},
//  "agreement": bool, "first_divergence": int|null, "max_abs_diff": float|null}
Json to_json(const ComparisonReport &r);

} // namespace revert
