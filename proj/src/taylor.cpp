#include <revert/error.hpp>
#include <revert/taylor.hpp>

#include <cmath>
#include <optional>
#include <utility>

namespace revert
{

namespace
{

std::optional<Rational> exact_sqrt(const Rational &r)
{
    const auto num = r.numerator();
    const auto den = r.denominator();
    if (r.sign() < 0 || !mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Integer sn;
    Integer sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

class Expander
{
public:
    Expander(const Rational &center, std::size_t order, NumericKind mode)
        : center_(Coefficient::from_rational(center, mode)), order_(order), mode_(mode)
    {
    }

    TruncatedSeries expand(const Expression &e) const
    {
        return std::visit([this](const auto &n) { return visit(n); }, e.node());
    }

private:
    TruncatedSeries visit(const Expression::Const &n) const
    {
        return constant_series(center_, Coefficient::from_rational(n.value, mode_), order_);
    }

    TruncatedSeries visit(const Expression::Var &) const
    {
        return identity_series(center_, order_);
    }

    TruncatedSeries visit(const Expression::Neg &n) const
    {
        return negate(expand(n.operand));
    }

    TruncatedSeries visit(const Expression::Binary &n) const
    {
        const auto lhs = expand(n.lhs);
        const auto rhs = expand(n.rhs);
        switch (n.op) {
            case BinaryOp::Add:
                return lhs + rhs;
            case BinaryOp::Sub:
                return lhs - rhs;
            case BinaryOp::Mul:
                return lhs * rhs;
            case BinaryOp::Div:
                return lhs * inverse(rhs, "division by an expression vanishing");
        }
        throw Error(ErrorCode::InvalidArgument, "unknown binary operator");
    }

    TruncatedSeries visit(const Expression::IntPow &n) const
    {
        auto base = expand(n.base);
        if (n.exponent < 0) {
            base = inverse(base, "negative power of an expression vanishing");
        }
        auto k = n.exponent < 0 ? -static_cast<unsigned long>(n.exponent) : static_cast<unsigned long>(n.exponent);
        auto result = constant_series(center_, one_like(center_), order_);
        while (k != 0) {
            if (k & 1U) {
                result = result * base;
            }
            k >>= 1U;
            if (k != 0) {
                base = base * base;
            }
        }
        return result;
    }

    TruncatedSeries visit(const Expression::Call &n) const
    {
        const auto arg = expand(n.arg);
        switch (n.fn) {
            case Function::Exp:
                return exp_series(arg);
            case Function::Log:
                return log_series(arg);
            case Function::Sin:
                return sin_cos_series(arg, "sin").first;
            case Function::Cos:
                return sin_cos_series(arg, "cos").second;
            case Function::Tan: {
                auto [s, c] = sin_cos_series(arg, "tan");
                return s * inverse(c, "tan pole: cos vanishing");
            }
            case Function::Sqrt:
                return sqrt_series(arg);
        }
        throw Error(ErrorCode::InvalidArgument, "unknown function");
    }

    TruncatedSeries inverse(const TruncatedSeries &s, const char *what) const
    {
        if (s.constant_term().is_zero()) {
            throw Error(ErrorCode::PoleAtCenter, std::string(what) + " at center " + center_.to_display());
        }
        return reciprocal(s);
    }

    Coefficient integer(std::size_t k) const
    {
        return Coefficient::from_integer(static_cast<long>(k), mode_);
    }

    // exp, sin and cos stay rational only around an argument value of 0.
    Coefficient transcendental_value(const TruncatedSeries &arg, const char *name, double (*f)(double)) const
    {
        const auto &a0 = arg.constant_term();
        if (mode_ == NumericKind::Float) {
            return Coefficient(f(a0.float_value()));
        }
        if (!a0.is_zero()) {
            throw Error(ErrorCode::NonRationalExpansion, std::string(name) + " of " + a0.to_display() + " at center "
                                                             + center_.to_display()
                                                             + " is not rational; use float mode");
        }
        return Coefficient(Rational(static_cast<long>(f(0.0))));
    }

    // s' = s a'  =>  k s_k = sum_{j=1..k} j a_j s_{k-j}
    TruncatedSeries exp_series(const TruncatedSeries &a) const
    {
        std::vector<Coefficient> s;
        s.reserve(order_ + 1);
        s.push_back(transcendental_value(a, "exp", [](double x) { return std::exp(x); }));
        for (std::size_t k = 1; k <= order_; ++k) {
            auto acc = zero_like(center_);
            for (std::size_t j = 1; j <= k; ++j) {
                acc += integer(j) * a[j] * s[k - j];
            }
            s.push_back(acc / integer(k));
        }
        return TruncatedSeries(center_, std::move(s));
    }

    // s' = c a', c' = -s a'
    std::pair<TruncatedSeries, TruncatedSeries> sin_cos_series(const TruncatedSeries &a, const char *name) const
    {
        std::vector<Coefficient> s;
        std::vector<Coefficient> c;
        s.reserve(order_ + 1);
        c.reserve(order_ + 1);
        s.push_back(transcendental_value(a, name, [](double x) { return std::sin(x); }));
        c.push_back(transcendental_value(a, name, [](double x) { return std::cos(x); }));
        for (std::size_t k = 1; k <= order_; ++k) {
            auto sk = zero_like(center_);
            auto ck = zero_like(center_);
            for (std::size_t j = 1; j <= k; ++j) {
                const auto ja = integer(j) * a[j];
                sk += ja * c[k - j];
                ck -= ja * s[k - j];
            }
            s.push_back(sk / integer(k));
            c.push_back(ck / integer(k));
        }
        return {TruncatedSeries(center_, std::move(s)), TruncatedSeries(center_, std::move(c))};
    }

    void require_positive(const Coefficient &a0, const char *name) const
    {
        if (a0.is_zero()) {
            throw Error(ErrorCode::PoleAtCenter,
                        std::string(name) + " argument vanishes at center " + center_.to_display());
        }
        if (a0.sign() < 0) {
            throw Error(ErrorCode::DomainError, std::string(name) + " of the negative value " + a0.to_display()
                                                    + " at center " + center_.to_display());
        }
    }

    // s' a = a'  =>  k a_0 s_k = k a_k - sum_{j=1..k-1} j s_j a_{k-j}
    TruncatedSeries log_series(const TruncatedSeries &a) const
    {
        const auto &a0 = a.constant_term();
        require_positive(a0, "log");
        std::vector<Coefficient> s;
        s.reserve(order_ + 1);
        if (mode_ == NumericKind::Float) {
            s.emplace_back(std::log(a0.float_value()));
        } else if (a0.rational() == Rational(1)) {
            s.emplace_back(Rational(0));
        } else {
            throw Error(ErrorCode::NonRationalExpansion, "log of " + a0.to_display() + " at center "
                                                             + center_.to_display()
                                                             + " is not rational; use float mode");
        }
        for (std::size_t k = 1; k <= order_; ++k) {
            auto acc = integer(k) * a[k];
            for (std::size_t j = 1; j < k; ++j) {
                acc -= integer(j) * s[j] * a[k - j];
            }
            s.push_back(acc / (integer(k) * a0));
        }
        return TruncatedSeries(center_, std::move(s));
    }

    // s^2 = a  =>  2 s_0 s_k = a_k - sum_{j=1..k-1} s_j s_{k-j}
    TruncatedSeries sqrt_series(const TruncatedSeries &a) const
    {
        const auto &a0 = a.constant_term();
        require_positive(a0, "sqrt");
        std::vector<Coefficient> s;
        s.reserve(order_ + 1);
        if (mode_ == NumericKind::Float) {
            s.emplace_back(std::sqrt(a0.float_value()));
        } else if (auto root = exact_sqrt(a0.rational())) {
            s.emplace_back(std::move(*root));
        } else {
            throw Error(ErrorCode::NonRationalExpansion, "sqrt of " + a0.to_display() + " at center "
                                                             + center_.to_display()
                                                             + " is not rational; use float mode");
        }
        const auto two_s0 = integer(2) * s[0];
        for (std::size_t k = 1; k <= order_; ++k) {
            auto acc = a[k];
            for (std::size_t j = 1; j < k; ++j) {
                acc -= s[j] * s[k - j];
            }
            s.push_back(acc / two_s0);
        }
        return TruncatedSeries(center_, std::move(s));
    }

    Coefficient center_;
    std::size_t order_;
    NumericKind mode_;
};

} // namespace

TruncatedSeries taylor_series(const Expression &f, const Rational &center, std::size_t order, NumericKind mode)
{
    return Expander(center, order, mode).expand(f);
}

} // namespace revert
