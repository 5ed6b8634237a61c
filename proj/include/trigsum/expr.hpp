#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "trigsum/rational.hpp"

namespace trigsum {

// AST for the sum DSL:
//
//   expr     := term (("+"|"-") term)*
//   term     := unary (("*"|"/") unary)*
//   unary    := "-" unary | postfix
//   postfix  := atom ("^" int)?
//   atom     := rational | "pi" | ident | "sin" "(" expr ")"
//             | "cos" "(" expr ")"
//             | "sum" "(" ident "=" expr ".." expr "," expr ")"
//             | "(" expr ")"
//   rational := int ("/" int)?
//
// Whitespace-insensitive; operators left-associative; "^" binds tighter
// than unary minus. Trees are immutable and shared.

enum class ExprKind {
    Rational,
    Pi,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Pow,
    Sin,
    Cos,
    Sum,
};

struct TrigExpr;
using ExprPtr = std::shared_ptr<const TrigExpr>;

struct TrigExpr {
    ExprKind kind;
    BigRational value;            // Rational
    std::string name;             // Var name or Sum index
    long exponent = 0;            // Pow
    std::vector<ExprPtr> children; // binary: {l, r}; unary: {x}; Sum: {lo, hi, body}
};

ExprPtr make_rational(const BigRational& value);
ExprPtr make_integer(long value);
ExprPtr make_pi();
ExprPtr make_var(const std::string& name);
ExprPtr make_add(ExprPtr l, ExprPtr r);
ExprPtr make_sub(ExprPtr l, ExprPtr r);
ExprPtr make_mul(ExprPtr l, ExprPtr r);
ExprPtr make_div(ExprPtr l, ExprPtr r);
ExprPtr make_neg(ExprPtr x);
ExprPtr make_pow(ExprPtr base, long exponent);
ExprPtr make_sin(ExprPtr arg);
ExprPtr make_cos(ExprPtr arg);
ExprPtr make_sum(const std::string& index, ExprPtr lo, ExprPtr hi, ExprPtr body);

// Throws SourceError with byte offset / line / column on any violation.
ExprPtr parse(std::string_view text);

// parse(render(e)) is structurally identical to e.
std::string render(const ExprPtr& e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

std::set<std::string> free_vars(const ExprPtr& e);

// Capture-avoiding replacement of free variables by rational literals.
// A binding whose name matches a Sum index leaves the bound occurrences
// alone (the index shadows it inside the body).
ExprPtr substitute(const ExprPtr& e, const std::map<std::string, BigRational>& bindings);

} // namespace trigsum
