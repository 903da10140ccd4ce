#include <revert/error.hpp>
#include <revert/serialize.hpp>

#include <charconv>
#include <string>

namespace revert
{

namespace
{

Json coefficient_array(std::span<const Coefficient> coeffs)
{
    Json arr = Json::array();
    for (const auto &c : coeffs) {
        arr.push_back(c.to_string());
    }
    return arr;
}

std::vector<Coefficient> coefficients_from(const Json &arr)
{
    if (!arr.is_array()) {
        throw Error(ErrorCode::InvalidArgument, "\"coeffs\" must be an array of strings");
    }
    std::vector<Coefficient> out;
    for (const auto &item : arr) {
        if (!item.is_string()) {
            throw Error(ErrorCode::InvalidArgument, "\"coeffs\" must be an array of strings");
        }
        out.push_back(parse_coefficient(item.get<std::string>()));
    }
    return out;
}

const Json &field(const Json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw Error(ErrorCode::InvalidArgument, std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

std::string string_field(const Json &j, const char *name)
{
    const auto &v = field(j, name);
    if (!v.is_string()) {
        throw Error(ErrorCode::InvalidArgument, std::string("field \"") + name + "\" must be a string");
    }
    return v.get<std::string>();
}

std::size_t order_field(const Json &j, std::size_t coeff_count)
{
    const auto &v = field(j, "order");
    if (!v.is_number_unsigned() || v.get<std::size_t>() + 1 != coeff_count) {
        throw Error(ErrorCode::InvalidArgument, "\"order\" must equal the number of coefficients minus one");
    }
    return v.get<std::size_t>();
}

} // namespace

Coefficient parse_coefficient(std::string_view text)
{
    if (text.find('/') != std::string_view::npos) {
        return Coefficient(Rational::parse(text));
    }
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw Error(ErrorCode::InvalidArgument, "malformed coefficient '" + std::string(text) + "'");
    }
    return Coefficient(value);
}

Json to_json(const TruncatedSeries &s)
{
    Json j;
    j["center"] = s.center().to_string();
    j["order"] = s.order();
    j["coeffs"] = coefficient_array(s.coeffs());
    return j;
}

TruncatedSeries series_from_json(const Json &j)
{
    auto coeffs = coefficients_from(field(j, "coeffs"));
    order_field(j, coeffs.size());
    return TruncatedSeries(parse_coefficient(string_field(j, "center")), std::move(coeffs));
}

Json to_json(const InversionResult &r)
{
    Json j;
    j["method"] = std::string(method_name(r.method));
    j["z0"] = r.z0.to_string();
    j["u0"] = r.u0.to_string();
    j["order"] = r.series.order();
    j["coeffs"] = coefficient_array(r.series.coeffs());
    j["f_prime_at_z0"] = r.f_prime_at_z0.to_string();
    j["radius_estimate"] = r.radius_estimate ? Json(*r.radius_estimate) : Json(nullptr);
    return j;
}

InversionResult inversion_from_json(const Json &j)
{
    const auto method = parse_method(string_field(j, "method"));
    auto z0 = parse_coefficient(string_field(j, "z0"));
    auto u0 = parse_coefficient(string_field(j, "u0"));
    auto coeffs = coefficients_from(field(j, "coeffs"));
    order_field(j, coeffs.size());
    auto f_prime = parse_coefficient(string_field(j, "f_prime_at_z0"));
    std::optional<double> radius;
    if (const auto &v = field(j, "radius_estimate"); v.is_number()) {
        radius = v.get<double>();
    } else if (!v.is_null()) {
        throw Error(ErrorCode::InvalidArgument, "\"radius_estimate\" must be a number or null");
    }
    if (coeffs.front() != z0) {
        throw Error(ErrorCode::InvalidArgument, "constant coefficient must equal z0");
    }
    if (f_prime.is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "f_prime_at_z0 must be nonzero");
    }
    TruncatedSeries series(u0, std::move(coeffs));
    return InversionResult{method, std::move(z0), std::move(u0), std::move(series), std::move(f_prime), radius};
}

Json to_json(const ComparisonReport &r)
{
    Json j;
    j["order"] = r.order;
    Json methods = Json::array();
    Json coeffs = Json::object();
    for (const auto &m : r.results) {
        methods.push_back(std::string(method_name(m.method)));
        coeffs[std::string(method_name(m.method))] = coefficient_array(m.coeffs);
    }
    j["methods"] = std::move(methods);
    j["coeffs"] = std::move(coeffs);
    j["agreement"] = r.agreement;
    j["first_divergence"] = r.first_divergence ? Json(*r.first_divergence) : Json(nullptr);
    j["max_abs_diff"] = r.max_abs_diff ? Json(*r.max_abs_diff) : Json(nullptr);
    return j;
}

} // namespace revert
