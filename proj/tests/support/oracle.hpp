#pragma once

// Independent reference computations for the test suites. Everything here
// works on plain vectors of GMP rationals and shares no code with the
// library's series or inversion routines.

#include <cstddef>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle
{

using Q = mpq_class;
using Poly = std::vector<Q>;

inline Q q(long num, long den = 1)
{
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline mpz_class factorial(unsigned long n)
{
    mpz_class r = 1;
    for (unsigned long k = 2; k <= n; ++k) {
        r *= k;
    }
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Schoolbook product truncated to degree n.
inline Poly convolve(const Poly &a, const Poly &b, std::size_t n)
{
    Poly c(n + 1, Q(0));
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

inline Poly antiderivative(const Poly &a)
{
    Poly r{Q(0)};
    for (std::size_t k = 0; k < a.size(); ++k) {
        r.push_back(a[k] / Q(static_cast<long>(k + 1)));
    }
    return r;
}

// Reversion by undetermined coefficients. `phi` holds phi_1..phi_n at
// indices 1..n (phi[0] is ignored). Returns b_0..b_n with b_0 = 0 such that
// phi(b(v)) = v + O(v^(n+1)). Each b_k is fixed by requiring the v^k
// coefficient of sum_j phi_j b(v)^j to match.
inline Poly revert_by_undetermined_coefficients(const Poly &phi, std::size_t n)
{
    Poly b(n + 1, Q(0));
    for (std::size_t k = 1; k <= n; ++k) {
        b[k] = 0;
        Q coeff = 0;
        Poly power{Q(1)};
        for (std::size_t j = 1; j <= k && j < phi.size(); ++j) {
            power = convolve(power, b, k);
            coeff += phi[j] * power[k];
        }
        const Q target = (k == 1) ? Q(1) : Q(0);
        b[k] = (target - coeff) / phi[1];
    }
    return b;
}

// (-1)^(n+1) C_(n-1): inverse of z + z^2.
inline Poly signed_catalan(std::size_t n)
{
    Poly r{Q(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        Q c(binomial(2 * (k - 1), k - 1), mpz_class(static_cast<unsigned long>(k)));
        c.canonicalize();
        r.push_back(k % 2 == 1 ? c : Q(-c));
    }
    return r;
}

// (-k)^(k-1) / k!: inverse of z e^z (Lambert W).
inline Poly lambert_w(std::size_t n)
{
    Poly r{Q(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(static_cast<unsigned long>(k)).get_mpz_t(), k - 1);
        if ((k - 1) % 2 == 1) {
            p = -p;
        }
        Q c(p, factorial(k));
        c.canonicalize();
        r.push_back(c);
    }
    return r;
}

// (-1)^(k+1) / k: log(1 + u).
inline Poly log1p(std::size_t n)
{
    Poly r{Q(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        r.push_back(q(k % 2 == 1 ? 1 : -1, static_cast<long>(k)));
    }
    return r;
}

// arcsin(u): (2m)! / (4^m (m!)^2 (2m+1)) at odd degree 2m+1.
inline Poly arcsin(std::size_t n)
{
    Poly r(n + 1, Q(0));
    for (std::size_t k = 1; k <= n; k += 2) {
        const auto m = (k - 1) / 2;
        mpz_class four_m;
        mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
        Q c(factorial(2 * m), four_m * factorial(m) * factorial(m) * mpz_class(static_cast<unsigned long>(k)));
        c.canonicalize();
        r[k] = c;
    }
    return r;
}

// Taylor coefficients of exp(z) at 0.
inline Poly exp_series(std::size_t n)
{
    Poly r;
    for (std::size_t k = 0; k <= n; ++k) {
        Q c(mpz_class(1), factorial(k));
        r.push_back(c);
    }
    return r;
}

// Random small fraction with |num| <= bound, 1 <= den <= bound.
inline Q random_fraction(std::mt19937_64 &rng, long bound)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return q(num(rng), den(rng));
}

} // namespace oracle
