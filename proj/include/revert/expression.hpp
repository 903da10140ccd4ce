#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include <revert/rational.hpp>

namespace revert
{

enum class BinaryOp { Add, Sub, Mul, Div };
enum class Function { Exp, Log, Sin, Cos, Tan, Sqrt };

std::string_view function_name(Function fn) noexcept;

// Immutable expression tree of one variable `z`. Subtrees are shared, so
// copying an Expression is cheap.
class Expression
{
public:
    struct Const;
    struct Var;
    struct Neg;
    struct Binary;
    struct IntPow;
    struct Call;
    using Node = std::variant<Const, Var, Neg, Binary, IntPow, Call>;

    static Expression constant(Rational value);
    static Expression variable();
    static Expression negate(Expression operand);
    static Expression binary(BinaryOp op, Expression lhs, Expression rhs);
    static Expression power(Expression base, long exponent);
    static Expression call(Function fn, Expression arg);

    const Node &node() const noexcept;

    // Structural equality.
    friend bool operator==(const Expression &a, const Expression &b);

    // Text that parses back to a structurally identical tree.
    std::string to_string() const;

private:
    explicit Expression(Node node);

    std::shared_ptr<const Node> node_;
};

struct Expression::Const {
    Rational value;
};
struct Expression::Var {
};
struct Expression::Neg {
    Expression operand;
};
struct Expression::Binary {
    BinaryOp op;
    Expression lhs;
    Expression rhs;
};
struct Expression::IntPow {
    Expression base;
    long exponent;
};
struct Expression::Call {
    Function fn;
    Expression arg;
};

inline const Expression::Node &Expression::node() const noexcept
{
    return *node_;
}

std::ostream &operator<<(std::ostream &os, const Expression &e);

} // namespace revert
