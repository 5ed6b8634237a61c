#include "trigsum/expr.hpp"

#include <cctype>

#include "trigsum/error.hpp"

namespace trigsum {

namespace {

ExprPtr node(TrigExpr&& e) { return std::make_shared<const TrigExpr>(std::move(e)); }

} // namespace

ExprPtr make_rational(const BigRational& value) {
    return node({ExprKind::Rational, value, "", 0, {}});
}

ExprPtr make_integer(long value) { return make_rational(BigRational(value)); }

ExprPtr make_pi() { return node({ExprKind::Pi, 0, "", 0, {}}); }

ExprPtr make_var(const std::string& name) { return node({ExprKind::Var, 0, name, 0, {}}); }

ExprPtr make_add(ExprPtr l, ExprPtr r) {
    return node({ExprKind::Add, 0, "", 0, {std::move(l), std::move(r)}});
}

ExprPtr make_sub(ExprPtr l, ExprPtr r) {
    return node({ExprKind::Sub, 0, "", 0, {std::move(l), std::move(r)}});
}

ExprPtr make_mul(ExprPtr l, ExprPtr r) {
    return node({ExprKind::Mul, 0, "", 0, {std::move(l), std::move(r)}});
}

ExprPtr make_div(ExprPtr l, ExprPtr r) {
    return node({ExprKind::Div, 0, "", 0, {std::move(l), std::move(r)}});
}

ExprPtr make_neg(ExprPtr x) { return node({ExprKind::Neg, 0, "", 0, {std::move(x)}}); }

ExprPtr make_pow(ExprPtr base, long exponent) {
    return node({ExprKind::Pow, 0, "", exponent, {std::move(base)}});
}

ExprPtr make_sin(ExprPtr arg) { return node({ExprKind::Sin, 0, "", 0, {std::move(arg)}}); }

ExprPtr make_cos(ExprPtr arg) { return node({ExprKind::Cos, 0, "", 0, {std::move(arg)}}); }

ExprPtr make_sum(const std::string& index, ExprPtr lo, ExprPtr hi, ExprPtr body) {
    return node({ExprKind::Sum, 0, index, 0, {std::move(lo), std::move(hi), std::move(body)}});
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    End,
    Int,
    Ident,
    Pi,
    Sin,
    Cos,
    SumKw,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Equals,
    DotDot,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) { tokenize(); }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    Token next() {
        const Token& t = peek();
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const Token& at, const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at.offset && i < input_.size(); ++i) {
            if (input_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw SourceError(at.offset, line, col, msg);
    }

private:
    void tokenize() {
        std::size_t i = 0;
        while (i < input_.size()) {
            char c = input_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (i < input_.size() && std::isdigit(static_cast<unsigned char>(input_[i])))
                    digits += input_[i++];
                tokens_.push_back({Tok::Int, digits, start});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (i < input_.size() &&
                       (std::isalnum(static_cast<unsigned char>(input_[i])) || input_[i] == '_'))
                    word += input_[i++];
                Tok kind = Tok::Ident;
                if (word == "pi") kind = Tok::Pi;
                else if (word == "sin") kind = Tok::Sin;
                else if (word == "cos") kind = Tok::Cos;
                else if (word == "sum") kind = Tok::SumKw;
                tokens_.push_back({kind, word, start});
                continue;
            }
            if (c == '.' && i + 1 < input_.size() && input_[i + 1] == '.') {
                tokens_.push_back({Tok::DotDot, "..", start});
                i += 2;
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
                case ',': kind = Tok::Comma; break;
                case '=': kind = Tok::Equals; break;
                default: {
                    Token bad{Tok::End, std::string(1, c), start};
                    fail(bad, std::string("unexpected character '") + c + "'");
                }
            }
            tokens_.push_back({kind, std::string(1, c), start});
            ++i;
        }
        tokens_.push_back({Tok::End, "", input_.size()});
    }

    std::string_view input_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view input) : lex_(input) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) lex_.fail(t, "trailing input after expression");
        return e;
    }

private:
    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.next();
                e = make_add(e, parse_term());
            } else if (k == Tok::Minus) {
                lex_.next();
                e = make_sub(e, parse_term());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.next();
                e = make_mul(e, parse_unary());
            } else if (k == Tok::Slash) {
                lex_.next();
                e = make_div(e, parse_unary());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            return make_neg(parse_unary());
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr base = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.next();
            long e = parse_exponent();
            return make_pow(base, e);
        }
        return base;
    }

    long parse_exponent() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            neg = true;
        }
        Token t = lex_.peek();
        if (t.kind != Tok::Int) lex_.fail(t, "expected integer exponent after '^'");
        lex_.next();
        if (t.text.size() > 6) lex_.fail(t, "exponent out of range");
        long v = std::stol(t.text);
        return neg ? -v : v;
    }

    ExprPtr parse_atom() {
        Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Int: {
                lex_.next();
                // rational := int ("/" int)? -- two-token lookahead so that
                // "1/2" is one literal but "1/x" is a division.
                if (lex_.peek().kind == Tok::Slash && lex_.peek(1).kind == Tok::Int) {
                    lex_.next();
                    Token d = lex_.next();
                    BigInt den(d.text);
                    if (den == 0) lex_.fail(d, "zero denominator in rational literal");
                    return make_rational(make_rational_value(t.text, den));
                }
                return make_rational(BigRational(BigInt(t.text)));
            }
            case Tok::Pi:
                lex_.next();
                return make_pi();
            case Tok::Ident:
                lex_.next();
                return make_var(t.text);
            case Tok::Sin:
            case Tok::Cos: {
                lex_.next();
                expect(Tok::LParen, "expected '(' after function name");
                ExprPtr arg = parse_expr();
                expect(Tok::RParen, "expected ')'");
                return t.kind == Tok::Sin ? make_sin(arg) : make_cos(arg);
            }
            case Tok::SumKw: {
                lex_.next();
                expect(Tok::LParen, "expected '(' after 'sum'");
                Token idx = lex_.peek();
                if (idx.kind != Tok::Ident) lex_.fail(idx, "expected summation index name");
                lex_.next();
                expect(Tok::Equals, "expected '=' after summation index");
                ExprPtr lo = parse_expr();
                expect(Tok::DotDot, "expected '..' between summation bounds");
                ExprPtr hi = parse_expr();
                expect(Tok::Comma, "expected ',' before summation body");
                ExprPtr body = parse_expr();
                expect(Tok::RParen, "expected ')' closing 'sum'");
                return make_sum(idx.text, lo, hi, body);
            }
            case Tok::LParen: {
                lex_.next();
                ExprPtr e = parse_expr();
                expect(Tok::RParen, "expected ')'");
                return e;
            }
            default:
                lex_.fail(t, t.kind == Tok::End ? "unexpected end of input"
                                                : "unexpected token '" + t.text + "'");
        }
    }

    static BigRational make_rational_value(const std::string& num, const BigInt& den) {
        return BigRational(BigInt(num), den);
    }

    void expect(Tok kind, const std::string& msg) {
        Token t = lex_.peek();
        if (t.kind != kind) lex_.fail(t, msg);
        lex_.next();
    }

    Lexer lex_;
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Renderer
// ---------------------------------------------------------------------------

namespace {

// Precedence levels: 1 add/sub, 2 mul/div, 3 unary minus, 4 pow, 5 atom.
int precedence(const TrigExpr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        case ExprKind::Rational:
            if (e.value < 0) return 3;
            return is_integer(e.value) ? 5 : 2; // "p/q" re-lexes like a division
        default: return 5;
    }
}

std::string render_node(const ExprPtr& e);

std::string child(const ExprPtr& c, int min_prec) {
    std::string s = render_node(c);
    if (precedence(*c) < min_prec) return "(" + s + ")";
    return s;
}

bool ends_in_digit(const std::string& s) {
    return !s.empty() && std::isdigit(static_cast<unsigned char>(s.back()));
}

bool starts_with_digit(const std::string& s) {
    return !s.empty() && std::isdigit(static_cast<unsigned char>(s.front()));
}

std::string render_node(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::Rational:
            return e->value.str();
        case ExprKind::Pi:
            return "pi";
        case ExprKind::Var:
            return e->name;
        case ExprKind::Add:
            return child(e->children[0], 1) + "+" + child(e->children[1], 2);
        case ExprKind::Sub:
            return child(e->children[0], 1) + "-" + child(e->children[1], 2);
        case ExprKind::Mul:
            return child(e->children[0], 2) + "*" + child(e->children[1], 3);
        case ExprKind::Div: {
            std::string l = child(e->children[0], 2);
            std::string r = child(e->children[1], 3);
            // Guard against "INT / INT" re-lexing as one rational literal.
            if (ends_in_digit(l) && starts_with_digit(r)) r = "(" + r + ")";
            return l + "/" + r;
        }
        case ExprKind::Neg:
            return "-" + child(e->children[0], 3);
        case ExprKind::Pow: {
            std::string b = child(e->children[0], 5);
            return b + "^" + std::to_string(e->exponent);
        }
        case ExprKind::Sin:
            return "sin(" + render_node(e->children[0]) + ")";
        case ExprKind::Cos:
            return "cos(" + render_node(e->children[0]) + ")";
        case ExprKind::Sum:
            return "sum(" + e->name + "=" + render_node(e->children[0]) + ".." +
                   render_node(e->children[1]) + ", " + render_node(e->children[2]) + ")";
    }
    throw Error(Errc::InvalidArgument, "unknown expression node");
}

} // namespace

std::string render(const ExprPtr& e) { return render_node(e); }

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Rational:
            if (a->value != b->value) return false;
            break;
        case ExprKind::Var:
        case ExprKind::Sum:
            if (a->name != b->name) return false;
            break;
        case ExprKind::Pow:
            if (a->exponent != b->exponent) return false;
            break;
        default:
            break;
    }
    if (a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!structurally_equal(a->children[i], b->children[i])) return false;
    return true;
}

namespace {

void collect_free(const ExprPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (e->kind) {
        case ExprKind::Var:
            if (!bound.count(e->name)) out.insert(e->name);
            return;
        case ExprKind::Sum: {
            collect_free(e->children[0], bound, out);
            collect_free(e->children[1], bound, out);
            bool was_bound = bound.count(e->name) > 0;
            bound.insert(e->name);
            collect_free(e->children[2], bound, out);
            if (!was_bound) bound.erase(e->name);
            return;
        }
        default:
            for (const auto& c : e->children) collect_free(c, bound, out);
    }
}

} // namespace

std::set<std::string> free_vars(const ExprPtr& e) {
    std::set<std::string> bound, out;
    collect_free(e, bound, out);
    return out;
}

namespace {

ExprPtr substitute_rec(const ExprPtr& e, const std::map<std::string, BigRational>& bindings,
                       std::set<std::string>& shadowed) {
    switch (e->kind) {
        case ExprKind::Rational:
        case ExprKind::Pi:
            return e;
        case ExprKind::Var: {
            if (shadowed.count(e->name)) return e;
            auto it = bindings.find(e->name);
            if (it == bindings.end()) return e;
            return make_rational(it->second);
        }
        case ExprKind::Sum: {
            ExprPtr lo = substitute_rec(e->children[0], bindings, shadowed);
            ExprPtr hi = substitute_rec(e->children[1], bindings, shadowed);
            bool was_shadowed = shadowed.count(e->name) > 0;
            shadowed.insert(e->name);
            ExprPtr body = substitute_rec(e->children[2], bindings, shadowed);
            if (!was_shadowed) shadowed.erase(e->name);
            if (lo == e->children[0] && hi == e->children[1] && body == e->children[2]) return e;
            return make_sum(e->name, lo, hi, body);
        }
        default: {
            std::vector<ExprPtr> kids;
            kids.reserve(e->children.size());
            bool changed = false;
            for (const auto& c : e->children) {
                ExprPtr nc = substitute_rec(c, bindings, shadowed);
                changed = changed || nc != c;
                kids.push_back(nc);
            }
            if (!changed) return e;
            TrigExpr out{e->kind, e->value, e->name, e->exponent, std::move(kids)};
            return std::make_shared<const TrigExpr>(std::move(out));
        }
    }
}

} // namespace

ExprPtr substitute(const ExprPtr& e, const std::map<std::string, BigRational>& bindings) {
    std::set<std::string> shadowed;
    return substitute_rec(e, bindings, shadowed);
}

} // namespace trigsum
