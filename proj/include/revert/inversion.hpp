#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include <revert/coefficient.hpp>
#include <revert/series.hpp>

namespace revert
{

enum class MethodKind {
    NewFormula,      // repeated (1/f') d/dz applied to 1/f'
    LagrangeBurmann, // coefficient extraction from (w / phi(w))^n
    NewtonReversion, // Newton iteration on f(g(u)) = u; the oracle
};

inline constexpr MethodKind all_methods[] = {MethodKind::NewFormula, MethodKind::LagrangeBurmann,
                                             MethodKind::NewtonReversion};

// "new", "lb", "newton".
std::string_view method_name(MethodKind method) noexcept;
// Accepts the short names above. Throws InvalidArgument.
MethodKind parse_method(std::string_view name);

// Series of the inverse function g about u0 = f(z0), in powers of (u - u0).
struct InversionResult {
    MethodKind method;
    Coefficient z0;
    Coefficient u0;
    // Centered at u0 with constant term z0.
    TruncatedSeries series;
    Coefficient f_prime_at_z0;
    std::optional<double> radius_estimate;
};

// Returns f'(z0), the first-order coefficient of the forward series. Throws
// InsufficientOrder for an order-0 series and DerivativeVanishesAtCenter,
// with a hint to move the expansion point, when it is zero.
Coefficient check_first_derivative(const TruncatedSeries &f);

// Each backend returns the first `order` coefficients of the inverse of the
// forward series `f` (centered at z0). They need f to be known to at least
// `order` (InsufficientOrder otherwise) and f'(z0) != 0.
InversionResult invert_new_formula(const TruncatedSeries &f, std::size_t order);
InversionResult invert_lagrange(const TruncatedSeries &f, std::size_t order);
InversionResult invert_newton(const TruncatedSeries &f, std::size_t order);

InversionResult invert(const TruncatedSeries &f, std::size_t order, MethodKind method);

// Intermediate operator series T_1..T_n of the new formula, where
// T_1 = 1/f' and T_k = (1/f') * d/dz T_{k-1}. T_k has order f.order() - k.
std::vector<TruncatedSeries> operator_chain(const TruncatedSeries &f, std::size_t n);

struct MethodCoefficients {
    MethodKind method;
    std::vector<Coefficient> coeffs;
};

struct ComparisonReport {
    std::size_t order;
    // In canonical method order, independent of the requested order.
    std::vector<MethodCoefficients> results;
    bool agreement;
    std::optional<std::size_t> first_divergence;
    // Float mode only.
    std::optional<double> max_abs_diff;
};

// Relative tolerance used to declare float coefficients equal.
inline constexpr double float_agreement_tolerance = 1e-9;

// Runs every requested backend (concurrently when `parallel` is set) and
// compares their coefficient vectors: exact equality for rationals, relative
// tolerance for floats. Needs at least two methods (InvalidArgument). Backend
// errors are rethrown with the method name prefixed.
ComparisonReport compare_methods(const TruncatedSeries &f, std::size_t order, const std::set<MethodKind> &methods,
                                 bool parallel = true);

// Index of the first coefficient where composing g with f differs from the
// identity z0 + (z - z0), or nullopt when g(f(z)) = z to the shared order.
// Float series use a relative tolerance.
std::optional<std::size_t> roundtrip_failure(const InversionResult &g, const TruncatedSeries &f);

} // namespace revert
