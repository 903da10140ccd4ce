#include <revert/expression.hpp>

#include <ostream>

namespace revert
{

std::string_view function_name(Function fn) noexcept
{
    switch (fn) {
        case Function::Exp:
            return "exp";
        case Function::Log:
            return "log";
        case Function::Sin:
            return "sin";
        case Function::Cos:
            return "cos";
        case Function::Tan:
            return "tan";
        case Function::Sqrt:
            return "sqrt";
    }
    return "?";
}

Expression::Expression(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Expression Expression::constant(Rational value)
{
    return Expression(Const{std::move(value)});
}

Expression Expression::variable()
{
    return Expression(Var{});
}

Expression Expression::negate(Expression operand)
{
    return Expression(Neg{std::move(operand)});
}

Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs)
{
    return Expression(Binary{op, std::move(lhs), std::move(rhs)});
}

Expression Expression::power(Expression base, long exponent)
{
    return Expression(IntPow{std::move(base), exponent});
}

Expression Expression::call(Function fn, Expression arg)
{
    return Expression(Call{fn, std::move(arg)});
}

bool operator==(const Expression &a, const Expression &b)
{
    if (a.node_ == b.node_) {
        return true;
    }
    const auto &x = a.node();
    const auto &y = b.node();
    if (x.index() != y.index()) {
        return false;
    }
    return std::visit(
        [&y](const auto &lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto &rhs = std::get<T>(y);
            if constexpr (std::is_same_v<T, Expression::Const>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Expression::Var>) {
                return true;
            } else if constexpr (std::is_same_v<T, Expression::Neg>) {
                return lhs.operand == rhs.operand;
            } else if constexpr (std::is_same_v<T, Expression::Binary>) {
                return lhs.op == rhs.op && lhs.lhs == rhs.lhs && lhs.rhs == rhs.rhs;
            } else if constexpr (std::is_same_v<T, Expression::IntPow>) {
                return lhs.exponent == rhs.exponent && lhs.base == rhs.base;
            } else {
                return lhs.fn == rhs.fn && lhs.arg == rhs.arg;
            }
        },
        x);
}

namespace
{

char op_char(BinaryOp op)
{
    switch (op) {
        case BinaryOp::Add:
            return '+';
        case BinaryOp::Sub:
            return '-';
        case BinaryOp::Mul:
            return '*';
        case BinaryOp::Div:
            return '/';
    }
    return '?';
}

std::string print_const(const Rational &value, bool top)
{
    if (value.sign() < 0) {
        return top ? value.to_display() : "(" + value.to_display() + ")";
    }
    return value.to_display();
}

// Binary nodes are always parenthesized below the top level, so printing
// never depends on operator precedence. A right operand of '/' that starts
// with a digit is parenthesized so "2 / (3)" is not read back as the literal
// 2/3.
std::string print(const Expression &e, bool top)
{
    return std::visit(
        [top](const auto &n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Expression::Const>) {
                return print_const(n.value, top);
            } else if constexpr (std::is_same_v<T, Expression::Var>) {
                return "z";
            } else if constexpr (std::is_same_v<T, Expression::Neg>) {
                const auto s = "-" + print(n.operand, false);
                return top ? s : "(" + s + ")";
            } else if constexpr (std::is_same_v<T, Expression::Binary>) {
                auto rhs = print(n.rhs, false);
                if (n.op == BinaryOp::Div && !rhs.empty() && rhs.front() >= '0' && rhs.front() <= '9') {
                    rhs = "(" + rhs + ")";
                }
                const auto s = print(n.lhs, false) + " " + op_char(n.op) + " " + rhs;
                return top ? s : "(" + s + ")";
            } else if constexpr (std::is_same_v<T, Expression::IntPow>) {
                const auto &b = n.base.node();
                const bool atom = std::holds_alternative<Expression::Var>(b) || std::holds_alternative<Expression::Call>(b)
                                  || (std::holds_alternative<Expression::Const>(b)
                                      && std::get<Expression::Const>(b).value.is_integer()
                                      && std::get<Expression::Const>(b).value.sign() >= 0);
                const auto base = atom ? print(n.base, false) : "(" + print(n.base, true) + ")";
                const auto exponent = n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")" : std::to_string(n.exponent);
                return base + "^" + exponent;
            } else {
                return std::string(function_name(n.fn)) + "(" + print(n.arg, true) + ")";
            }
        },
        e.node());
}

} // namespace

std::string Expression::to_string() const
{
    return print(*this, true);
}

std::ostream &operator<<(std::ostream &os, const Expression &e)
{
    return os << e.to_string();
}

} // namespace revert
