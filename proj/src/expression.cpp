#include "cdgeo/expression.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "cdgeo/error.hpp"

namespace cdgeo {

enum class NodeKind { Number, Variable, Basis, Negate, Add, Sub, Mul, Div, Pow, Sqrt };

struct Expression::Node {
    NodeKind kind;
    Rational number;
    std::string name;
    int value = 0;  // basis index (0-based) or exponent
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make_number(Rational v) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = NodeKind::Number;
    n->number = std::move(v);
    return n;
}

NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr make_unary(NodeKind kind, NodePtr a, int value = 0) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->lhs = std::move(a);
    n->value = value;
    return n;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int column;  // 1-based within the expression
};

class Parser {
public:
    Parser(std::string_view text, const std::set<std::string>& allowed, const ParseOptions& options)
        : text_(text), allowed_(allowed), options_(options) {
        tokenize();
    }

    NodePtr parse() {
        NodePtr root = expression();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'", peek().column);
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message, int column) const {
        throw ParseError(message, options_.line, column + options_.column_offset);
    }

    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            int column = static_cast<int>(i) + 1;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
                if (j < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[j])) || text_[j] == '('))
                    fail("implicit multiplication is not allowed", static_cast<int>(j) + 1);
                tokens_.push_back({Tok::Number, std::string(text_.substr(i, j - i)), column});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
                tokens_.push_back({Tok::Ident, std::string(text_.substr(i, j - i)), column});
                i = j;
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '/': kind = Tok::Slash; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                default: fail(std::string("unexpected character '") + c + "'", column);
            }
            tokens_.push_back({kind, std::string(1, c), column});
            ++i;
        }
        tokens_.push_back({Tok::End, "end of input", static_cast<int>(text_.size()) + 1});
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    void expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what + ", found '" + peek().text + "'", peek().column);
        ++pos_;
    }

    NodePtr expression() {
        NodePtr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            NodeKind kind = next().kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
            lhs = make_binary(kind, lhs, term());
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            NodeKind kind = next().kind == Tok::Star ? NodeKind::Mul : NodeKind::Div;
            lhs = make_binary(kind, lhs, unary());
        }
        return lhs;
    }

    NodePtr unary() {
        if (peek().kind == Tok::Minus) {
            next();
            return make_unary(NodeKind::Negate, unary());
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (peek().kind == Tok::Caret) {
            next();
            const Token& exp = peek();
            if (exp.kind != Tok::Number) fail("exponent must be a non-negative integer literal", exp.column);
            next();
            if (exp.text.size() > 5 || std::stoi(exp.text) > 10000) fail("exponent too large", exp.column);
            base = make_unary(NodeKind::Pow, base, std::stoi(exp.text));
            if (peek().kind == Tok::Caret) fail("chained '^' needs parentheses", peek().column);
        }
        return base;
    }

    NodePtr call(const Token& fn) {
        expect(Tok::LParen, "'('");
        NodePtr arg = expression();
        expect(Tok::RParen, "')'");
        if (options_.mode == ParseMode::Exact) fail("sqrt not allowed in exact mode", fn.column);
        if (fn.text == "sqrt") return make_unary(NodeKind::Sqrt, arg);
        // Theta(X) = (1 + sqrt(1 - 4X)) / 2, Psi(X) = 1 - Theta(X).
        NodePtr root = make_unary(NodeKind::Sqrt, make_binary(NodeKind::Sub, make_number(1),
                                                              make_binary(NodeKind::Mul, make_number(4), arg)));
        NodePtr theta = make_binary(NodeKind::Div, make_binary(NodeKind::Add, make_number(1), root), make_number(2));
        if (fn.text == "Theta") return theta;
        return make_binary(NodeKind::Sub, make_number(1), theta);
    }

    NodePtr primary() {
        const Token& tok = next();
        switch (tok.kind) {
            case Tok::Number: return make_number(Rational(Integer(tok.text)));
            case Tok::LParen: {
                NodePtr inner = expression();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident: {
                if (tok.text == "sqrt" || tok.text == "Theta" || tok.text == "Psi") return call(tok);
                if (peek().kind == Tok::LParen) fail("unknown function '" + tok.text + "'", tok.column);
                if (options_.basis_dim > 0 && is_basis_symbol(tok.text) && tok.text[0] == 'e') {
                    int index = std::stoi(tok.text.substr(1));
                    if (index < 1 || index > options_.basis_dim) fail("index out of range: " + tok.text, tok.column);
                    auto n = std::make_shared<Expression::Node>();
                    n->kind = NodeKind::Basis;
                    n->value = index - 1;
                    n->name = tok.text;
                    return n;
                }
                if (!allowed_.count(tok.text)) fail("unknown variable '" + tok.text + "'", tok.column);
                auto n = std::make_shared<Expression::Node>();
                n->kind = NodeKind::Variable;
                n->name = tok.text;
                return n;
            }
            case Tok::End: fail("unexpected end of input", tok.column);
            default: fail("unexpected '" + tok.text + "'", tok.column);
        }
    }

    std::string_view text_;
    const std::set<std::string>& allowed_;
    ParseOptions options_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

struct Value {
    Scalar constant;
    std::map<int, Scalar> basis;

    bool linear() const { return !basis.empty(); }
};

Value add(Value a, const Value& b, bool subtract) {
    a.constant = subtract ? a.constant - b.constant : a.constant + b.constant;
    for (const auto& [k, c] : b.basis) {
        Scalar sum = subtract ? a.basis[k] - c : a.basis[k] + c;
        if (sum.is_zero())
            a.basis.erase(k);
        else
            a.basis[k] = std::move(sum);
    }
    return a;
}

Value scale(const Value& v, const Scalar& s) {
    Value r{v.constant * s, {}};
    if (s.is_zero()) return r;
    for (const auto& [k, c] : v.basis) r.basis[k] = c * s;
    return r;
}

class Evaluator {
public:
    explicit Evaluator(const Assignment& values) : values_(values) {}

    Value eval(const Expression::Node& n) const {
        switch (n.kind) {
            case NodeKind::Number: return {Scalar(n.number), {}};
            case NodeKind::Variable: {
                auto it = values_.find(n.name);
                return {it != values_.end() ? it->second : Scalar::variable(n.name), {}};
            }
            case NodeKind::Basis: return {Scalar(), {{n.value, Scalar(1)}}};
            case NodeKind::Negate: return scale(eval(*n.lhs), Scalar(-1));
            case NodeKind::Add: return add(eval(*n.lhs), eval(*n.rhs), false);
            case NodeKind::Sub: return add(eval(*n.lhs), eval(*n.rhs), true);
            case NodeKind::Mul: {
                Value a = eval(*n.lhs), b = eval(*n.rhs);
                if (a.linear() && b.linear()) throw ArithmeticError("product of two basis elements in a linear expression");
                return a.linear() ? scale(a, b.constant) : scale(b, a.constant);
            }
            case NodeKind::Div: {
                Value a = eval(*n.lhs), b = eval(*n.rhs);
                if (b.linear()) throw ArithmeticError("division by a basis element");
                return scale(a, b.constant.inverse());
            }
            case NodeKind::Pow: {
                Value a = eval(*n.lhs);
                if (n.value == 1) return a;
                if (a.linear()) throw ArithmeticError("power of a basis element");
                return {a.constant.pow(n.value), {}};
            }
            case NodeKind::Sqrt: {
                Value a = eval(*n.lhs);
                if (a.linear()) throw ArithmeticError("sqrt of a basis element");
                if (!a.constant.is_rational())
                    throw ArithmeticError("sqrt radicand " + a.constant.to_string() + " is not a rational constant");
                return {Scalar(rational_sqrt(a.constant.to_rational())), {}};
            }
        }
        return {};
    }

private:
    const Assignment& values_;
};

void walk(const Expression::Node& n, const std::function<void(const Expression::Node&)>& fn) {
    if (n.lhs) walk(*n.lhs, fn);
    if (n.rhs) walk(*n.rhs, fn);
    fn(n);
}

}  // namespace

bool is_basis_symbol(std::string_view name) {
    return name.size() >= 2 && (name[0] == 'e' || name[0] == 'E') && all_digits(name.substr(1));
}

bool is_reserved_name(std::string_view name) {
    return name == kDeformationVariable || name == "sqrt" || name == "Theta" || name == "Psi" || is_basis_symbol(name);
}

Rational rational_sqrt(const Rational& value) {
    if (sgn(value) < 0) throw ArithmeticError("sqrt radicand " + value.get_str() + " is not a rational square");
    Integer n = value.get_num(), d = value.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw ArithmeticError("sqrt radicand " + value.get_str() + " is not a rational square");
    Integer rn = sqrt(n), rd = sqrt(d);
    return Rational(rn, rd);
}

bool Expression::has_sqrt() const {
    bool found = false;
    if (root_) walk(*root_, [&](const Node& n) { found = found || n.kind == NodeKind::Sqrt; });
    return found;
}

std::set<std::string> Expression::variables() const {
    std::set<std::string> out;
    if (root_)
        walk(*root_, [&](const Node& n) {
            if (n.kind == NodeKind::Variable) out.insert(n.name);
        });
    return out;
}

std::vector<Expression> Expression::radicands() const {
    std::vector<Expression> out;
    if (root_)
        walk(*root_, [&](const Node& n) {
            if (n.kind == NodeKind::Sqrt) out.push_back(Expression(n.lhs, "radicand of " + text_, 0));
        });
    return out;
}

Scalar Expression::evaluate(const Assignment& values) const {
    if (!root_) return Scalar();
    Value v = Evaluator(values).eval(*root_);
    if (v.linear()) throw ArithmeticError("expected a scalar expression, found basis elements");
    return v.constant;
}

LinearForm Expression::evaluate_linear(const Assignment& values) const {
    LinearForm out(static_cast<std::size_t>(basis_dim_));
    if (!root_) return out;
    Value v = Evaluator(values).eval(*root_);
    if (!v.constant.is_zero()) throw ArithmeticError("expected a linear combination of basis elements");
    for (auto& [k, c] : v.basis) out[static_cast<std::size_t>(k)] = std::move(c);
    return out;
}

Expression parse_expression(std::string_view text, const std::set<std::string>& allowed_vars, const ParseOptions& options) {
    Parser parser(text, allowed_vars, options);
    return Expression(parser.parse(), std::string(text), options.basis_dim);
}

Scalar parse_scalar(std::string_view text, const std::set<std::string>& allowed_vars) {
    return parse_expression(text, allowed_vars).evaluate();
}

}  // namespace cdgeo
