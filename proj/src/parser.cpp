#include <revert/error.hpp>
#include <revert/parser.hpp>

#include <array>
#include <cctype>
#include <limits>
#include <optional>
#include <utility>

namespace revert
{

namespace
{

constexpr long max_exponent = std::numeric_limits<int>::max();

constexpr std::array<std::pair<std::string_view, Function>, 6> functions{{
    {"exp", Function::Exp},
    {"log", Function::Log},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"sqrt", Function::Sqrt},
}};

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_alpha(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expression parse_all()
    {
        auto e = expr();
        skip_ws();
        if (!at_end()) {
            throw unexpected();
        }
        return e;
    }

private:
    Expression expr()
    {
        auto lhs = term();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                const auto op = get() == '+' ? BinaryOp::Add : BinaryOp::Sub;
                lhs = Expression::binary(op, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Expression term()
    {
        auto lhs = factor();
        while (true) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                const auto op = get() == '*' ? BinaryOp::Mul : BinaryOp::Div;
                lhs = Expression::binary(op, std::move(lhs), factor(op == BinaryOp::Div));
            } else {
                return lhs;
            }
        }
    }

    // `divisor` is set for the right operand of '/', where "p/q" must not be
    // read as one literal.
    Expression factor(bool divisor = false)
    {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return Expression::negate(factor(divisor));
        }
        auto b = base(divisor);
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return Expression::power(std::move(b), exponent());
        }
        return b;
    }

    // Signed integer, optionally parenthesized, with right-associative
    // chaining ("2^3" inside an exponent is folded to 8).
    long exponent()
    {
        skip_ws();
        const auto start = pos_;
        long value = 0;
        if (peek() == '(') {
            ++pos_;
            const auto inner = expr();
            skip_ws();
            if (peek() != ')') {
                throw unexpected("expected ')'");
            }
            ++pos_;
            value = integer_value(inner, start);
        } else {
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
                skip_ws();
            }
            if (is_digit(peek())) {
                const auto digits_start = pos_;
                while (is_digit(peek())) {
                    ++pos_;
                }
                if (peek() == '.') {
                    throw Error(ErrorCode::NonIntegerExponent,
                                "exponent at position " + std::to_string(start) + " is not an integer (use sqrt)",
                                start);
                }
                value = checked_exponent(text_.substr(digits_start, pos_ - digits_start), start);
            } else if (is_alpha(peek())) {
                throw Error(ErrorCode::NonIntegerExponent,
                            "exponent at position " + std::to_string(start) + " must be an integer literal", start);
            } else {
                throw unexpected("expected an integer exponent");
            }
            value = negative ? -value : value;
        }
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            const auto rhs = exponent();
            value = fold_power(value, rhs, start);
        }
        return value;
    }

    Expression base(bool divisor = false)
    {
        skip_ws();
        if (at_end()) {
            throw unexpected();
        }
        const char c = peek();
        if (is_digit(c)) {
            return Expression::constant(number(!divisor));
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            skip_ws();
            if (peek() != ')') {
                throw unexpected("expected ')'");
            }
            ++pos_;
            return e;
        }
        if (is_alpha(c)) {
            const auto start = pos_;
            while (is_alpha(peek()) || is_digit(peek())) {
                ++pos_;
            }
            const auto name = text_.substr(start, pos_ - start);
            if (name == "z") {
                return Expression::variable();
            }
            std::optional<Function> fn;
            for (const auto &[fname, f] : functions) {
                if (fname == name) {
                    fn = f;
                }
            }
            skip_ws();
            if (!fn) {
                if (peek() == '(') {
                    throw Error(ErrorCode::UnknownFunction, "unknown function '" + std::string(name) + "'", start);
                }
                throw Error(ErrorCode::SyntaxError,
                            "unknown identifier '" + std::string(name) + "' at position " + std::to_string(start),
                            start);
            }
            if (peek() != '(') {
                throw unexpected("expected '(' after " + std::string(name));
            }
            ++pos_;
            auto arg = expr();
            skip_ws();
            if (peek() != ')') {
                throw unexpected("expected ')'");
            }
            ++pos_;
            return Expression::call(*fn, std::move(arg));
        }
        throw unexpected();
    }

    Rational number(bool allow_fraction)
    {
        const auto start = pos_;
        while (is_digit(peek())) {
            ++pos_;
        }
        const auto whole = text_.substr(start, pos_ - start);
        if (peek() == '.') {
            ++pos_;
            const auto frac_start = pos_;
            while (is_digit(peek())) {
                ++pos_;
            }
            if (pos_ == frac_start) {
                throw unexpected("expected digits after '.'");
            }
            return Rational::parse(text_.substr(start, pos_ - start));
        }

        // integer '/' positive-integer forms one literal when that reads the
        // same as a division would; otherwise the '/' is left for term().
        const auto after_whole = pos_;
        skip_ws();
        if (allow_fraction && peek() == '/') {
            ++pos_;
            skip_ws();
            const auto den_start = pos_;
            while (is_digit(peek())) {
                ++pos_;
            }
            const auto den = text_.substr(den_start, pos_ - den_start);
            const auto after_den = pos_;
            skip_ws();
            const bool powered = peek() == '^';
            pos_ = after_den;
            if (!den.empty() && peek() != '.' && !powered) {
                Integer d(std::string(den), 10);
                if (d != 0) {
                    return Rational(Integer(std::string(whole), 10), d);
                }
            }
        }
        pos_ = after_whole;
        return Rational(Integer(std::string(whole), 10));
    }

    long integer_value(const Expression &e, std::size_t start) const
    {
        const Expression *node = &e;
        bool negative = false;
        if (const auto *neg = std::get_if<Expression::Neg>(&node->node())) {
            negative = true;
            node = &neg->operand;
        }
        const auto *c = std::get_if<Expression::Const>(&node->node());
        if (c == nullptr || !c->value.is_integer()) {
            throw Error(ErrorCode::NonIntegerExponent,
                        "exponent at position " + std::to_string(start) + " is not an integer (use sqrt)", start);
        }
        const auto num = c->value.numerator();
        if (abs(num) > max_exponent) {
            throw Error(ErrorCode::SyntaxError, "exponent at position " + std::to_string(start) + " is too large",
                        start);
        }
        const long v = num.get_si();
        return negative ? -v : v;
    }

    long checked_exponent(std::string_view digits, std::size_t start) const
    {
        const Integer v(std::string(digits), 10);
        if (v > max_exponent) {
            throw Error(ErrorCode::SyntaxError, "exponent at position " + std::to_string(start) + " is too large",
                        start);
        }
        return v.get_si();
    }

    long fold_power(long base, long exp, std::size_t start) const
    {
        if (exp < 0) {
            throw Error(ErrorCode::NonIntegerExponent,
                        "exponent at position " + std::to_string(start) + " is not an integer", start);
        }
        Integer r;
        mpz_set_si(r.get_mpz_t(), base);
        if (abs(r) > 1 && exp > 64) {
            throw Error(ErrorCode::SyntaxError, "exponent at position " + std::to_string(start) + " is too large",
                        start);
        }
        mpz_pow_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(exp));
        if (abs(r) > max_exponent) {
            throw Error(ErrorCode::SyntaxError, "exponent at position " + std::to_string(start) + " is too large",
                        start);
        }
        return r.get_si();
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const
    {
        return pos_ >= text_.size();
    }

    char peek() const
    {
        return at_end() ? '\0' : text_[pos_];
    }

    char get()
    {
        return text_[pos_++];
    }

    Error unexpected(const std::string &what = {}) const
    {
        std::string msg = "syntax error at position " + std::to_string(pos_) + ": ";
        if (!what.empty()) {
            msg += what;
            msg += at_end() ? ", found end of input" : std::string(", found '") + text_[pos_] + "'";
        } else {
            msg += at_end() ? "unexpected end of input" : std::string("unexpected '") + text_[pos_] + "'";
        }
        return Error(ErrorCode::SyntaxError, msg, pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Expression parse(std::string_view text)
{
    return Parser(text).parse_all();
}

} // namespace revert
