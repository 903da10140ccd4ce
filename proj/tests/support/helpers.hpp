#pragma once

#include <random>
#include <vector>

#include <revert/coefficient.hpp>
#include <revert/series.hpp>

#include "oracle.hpp"

namespace testing_support
{

inline revert::Rational to_rational(const oracle::Q &q)
{
    return revert::Rational(q.get_num(), q.get_den());
}

inline oracle::Q to_q(const revert::Rational &r)
{
    return r.raw();
}

inline revert::Coefficient rat(long num, long den = 1)
{
    return revert::Coefficient(revert::Rational(revert::Integer(num), revert::Integer(den)));
}

inline std::vector<revert::Coefficient> coeffs_of(const oracle::Poly &p)
{
    std::vector<revert::Coefficient> out;
    for (const auto &c : p) {
        out.emplace_back(to_rational(c));
    }
    return out;
}

inline revert::TruncatedSeries series_of(const oracle::Poly &p, long center = 0)
{
    return revert::TruncatedSeries(rat(center), coeffs_of(p));
}

inline oracle::Poly poly_of(const revert::TruncatedSeries &s)
{
    oracle::Poly out;
    for (const auto &c : s.coeffs()) {
        out.push_back(to_q(c.rational()));
    }
    return out;
}

inline oracle::Poly random_poly(std::mt19937_64 &rng, std::size_t order, long bound = 9)
{
    oracle::Poly p;
    for (std::size_t k = 0; k <= order; ++k) {
        p.push_back(oracle::random_fraction(rng, bound));
    }
    return p;
}

} // namespace testing_support
