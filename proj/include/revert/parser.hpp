#pragma once

#include <string_view>

#include <revert/expression.hpp>

namespace revert
{

// Grammar (whitespace is insignificant):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' integer)?
//   base   := number | 'z' | func '(' expr ')' | '(' expr ')'
//   func   := 'exp' | 'log' | 'sin' | 'cos' | 'tan' | 'sqrt'
//   number := integer | integer '/' positive-integer | decimal
//
// '^' is right-associative and takes a (possibly negative, possibly
// parenthesized) integer. Decimals are read exactly, so "0.25" is 1/4.
// A numeral followed by '/' and a nonzero numeral is read as one rational
// literal unless that would change the value: not when it is itself the
// right operand of '/' ("z/2/3" is (z/2)/3) and not when the denominator is
// raised to a power ("2/3^2" is 2/(3^2)).
//
// Throws Error with SyntaxError (position set to the offending byte offset),
// UnknownFunction or NonIntegerExponent.
Expression parse(std::string_view text);

} // namespace revert
