#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cdgeo/scalar.hpp"

namespace cdgeo {

// exact: sqrt (and the Theta/Psi macros built on it) are rejected at parse time.
// sampled: sqrt nodes are kept and resolved once every radicand evaluates to
// the square of a rational.
enum class ParseMode { Exact, Sampled };

struct ParseOptions {
    ParseMode mode = ParseMode::Exact;
    // When positive, e1..e<basis_dim> denote basis vectors and the expression
    // must be linear in them.
    int basis_dim = 0;
    // Position of the expression inside a larger text, for error reporting.
    int line = 0;
    int column_offset = 0;
};

// A linear combination sum_k coefficient[k] * e_{k+1} with Scalar coefficients.
using LinearForm = std::vector<Scalar>;

// Parsed expression tree. Immutable and cheap to copy.
//
// Grammar: integers, identifiers [A-Za-z][A-Za-z0-9_]*, binary + - * /,
// unary -, `^` with a non-negative integer literal, parentheses, and the
// functions sqrt, Theta(X) = (1 + sqrt(1 - 4*X))/2, Psi(X) = 1 - Theta(X).
class Expression {
public:
    struct Node;

    Expression() = default;

    const std::string& text() const { return text_; }
    bool has_sqrt() const;
    // Free identifiers, excluding basis symbols.
    std::set<std::string> variables() const;
    // Radicand subexpressions of every sqrt, innermost first.
    std::vector<Expression> radicands() const;

    // Evaluates with the given values; unassigned identifiers stay symbolic.
    // A sqrt whose radicand is not the square of a rational throws
    // ArithmeticError.
    Scalar evaluate(const Assignment& values = {}) const;
    // Same, for expressions parsed with basis_dim > 0.
    LinearForm evaluate_linear(const Assignment& values = {}) const;

private:
    friend Expression parse_expression(std::string_view, const std::set<std::string>&, const ParseOptions&);
    Expression(std::shared_ptr<const Node> root, std::string text, int basis_dim)
        : root_(std::move(root)), text_(std::move(text)), basis_dim_(basis_dim) {}

    std::shared_ptr<const Node> root_;
    std::string text_;
    int basis_dim_ = 0;
};

// Throws ParseError on syntax errors, unknown identifiers, or sqrt in exact mode.
Expression parse_expression(std::string_view text, const std::set<std::string>& allowed_vars,
                            const ParseOptions& options = {});

// Exact-mode shortcut.
Scalar parse_scalar(std::string_view text, const std::set<std::string>& allowed_vars);

// Square root of a rational square; throws ArithmeticError otherwise.
Rational rational_sqrt(const Rational& value);

bool is_basis_symbol(std::string_view name);
bool is_reserved_name(std::string_view name);

}  // namespace cdgeo
