#include "diagcube/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace diagcube {

namespace {

struct Token {
    enum class Kind { ident, integer, omega, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::Kind::end, "", line, col};
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                advance();
            }
            return {id == "omega" ? Token::Kind::omega : Token::Kind::ident, id, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                advance();
            }
            return {Token::Kind::integer, num, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::plus, "+", line, col};
            case '-': return {Token::Kind::minus, "-", line, col};
            case '*': return {Token::Kind::star, "*", line, col};
            case '/': return {Token::Kind::slash, "/", line, col};
            case '^': return {Token::Kind::caret, "^", line, col};
            case '(': return {Token::Kind::lparen, "(", line, col};
            case ')': return {Token::Kind::rparen, ")", line, col};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars)
        : lex_(src), vars_(vars) {
        cur_ = lex_.next();
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        if (cur_.kind != Token::Kind::end)
            throw parse_error("trailing input after expression", cur_.line, cur_.col);
        return e;
    }

private:
    void bump() { cur_ = lex_.next(); }

    static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (cur_.kind == Token::Kind::plus || cur_.kind == Token::Kind::minus) {
            bool add = cur_.kind == Token::Kind::plus;
            bump();
            ExprPtr rhs = term();
            ExprNode n;
            n.kind = add ? ExprNode::Kind::add : ExprNode::Kind::sub;
            n.a = lhs;
            n.b = rhs;
            lhs = node(std::move(n));
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (cur_.kind == Token::Kind::star || cur_.kind == Token::Kind::slash) {
            bool mul = cur_.kind == Token::Kind::star;
            int line = cur_.line, col = cur_.col;
            bump();
            ExprPtr rhs = factor();
            if (!mul && rhs->kind == ExprNode::Kind::lit && rhs->lit == 0)
                throw parse_error("zero denominator literal", line, col);
            ExprNode n;
            n.kind = mul ? ExprNode::Kind::mul : ExprNode::Kind::div;
            n.a = lhs;
            n.b = rhs;
            lhs = node(std::move(n));
        }
        return lhs;
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (cur_.kind == Token::Kind::caret) {
            bump();
            if (cur_.kind != Token::Kind::integer)
                throw parse_error("exponent must be a nonnegative integer", cur_.line, cur_.col);
            unsigned long e = std::stoul(cur_.text);
            bump();
            ExprNode n;
            n.kind = ExprNode::Kind::pow;
            n.a = b;
            n.exp = static_cast<unsigned>(e);
            return node(std::move(n));
        }
        return b;
    }

    ExprPtr base() {
        switch (cur_.kind) {
            case Token::Kind::ident: {
                if (std::find(vars_.begin(), vars_.end(), cur_.text) == vars_.end())
                    throw parse_error("undeclared variable '" + cur_.text + "'", cur_.line, cur_.col);
                ExprNode n;
                n.kind = ExprNode::Kind::var;
                n.name = cur_.text;
                bump();
                return node(std::move(n));
            }
            case Token::Kind::integer: {
                ExprNode n;
                n.kind = ExprNode::Kind::lit;
                n.lit = Rat(cur_.text);
                bump();
                return node(std::move(n));
            }
            case Token::Kind::omega: {
                bump();
                ExprNode n;
                n.kind = ExprNode::Kind::omega;
                return node(std::move(n));
            }
            case Token::Kind::lparen: {
                bump();
                ExprPtr e = expr();
                if (cur_.kind != Token::Kind::rparen)
                    throw parse_error("expected ')'", cur_.line, cur_.col);
                bump();
                return e;
            }
            case Token::Kind::minus: {
                bump();
                ExprPtr inner = base();
                ExprNode n;
                n.kind = ExprNode::Kind::neg;
                n.a = inner;
                return node(std::move(n));
            }
            case Token::Kind::end:
                throw parse_error("unexpected end of input", cur_.line, cur_.col);
            default:
                throw parse_error("unexpected token '" + cur_.text + "'", cur_.line, cur_.col);
        }
    }

    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& vars_;
};

int precedence(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::add:
        case ExprNode::Kind::sub: return 1;
        case ExprNode::Kind::mul:
        case ExprNode::Kind::div: return 2;
        case ExprNode::Kind::neg: return 3;
        case ExprNode::Kind::pow: return 4;
        default: return 5;
    }
}

void print_rec(const ExprPtr& e, std::ostringstream& os, int parent_prec, bool right_side) {
    int prec = precedence(e->kind);
    bool need_paren = prec < parent_prec || (prec == parent_prec && right_side);
    if (need_paren) os << "(";
    switch (e->kind) {
        case ExprNode::Kind::var: os << e->name; break;
        case ExprNode::Kind::lit:
            if (e->lit < 0) {
                // negative literals do not exist in the grammar; print as negation
                os << "-" << rat_to_string(-e->lit);
            } else {
                os << rat_to_string(e->lit);
            }
            break;
        case ExprNode::Kind::omega: os << "omega"; break;
        case ExprNode::Kind::add:
            print_rec(e->a, os, 1, false);
            os << " + ";
            print_rec(e->b, os, 1, true);
            break;
        case ExprNode::Kind::sub:
            print_rec(e->a, os, 1, false);
            os << " - ";
            print_rec(e->b, os, 1, true);
            break;
        case ExprNode::Kind::mul:
            print_rec(e->a, os, 2, false);
            os << "*";
            print_rec(e->b, os, 2, true);
            break;
        case ExprNode::Kind::div:
            print_rec(e->a, os, 2, false);
            os << "/";
            print_rec(e->b, os, 2, true);
            break;
        case ExprNode::Kind::pow:
            print_rec(e->a, os, 5, false); // powers bind tightest; base always atomic or wrapped
            os << "^" << e->exp;
            break;
        case ExprNode::Kind::neg:
            os << "-";
            print_rec(e->a, os, 3, true);
            break;
    }
    if (need_paren) os << ")";
}

} // namespace

ExprPtr parse_expr(const std::string& src, const std::vector<std::string>& vars) {
    return Parser(src, vars).parse();
}

std::string print_expr(const ExprPtr& e) {
    std::ostringstream os;
    print_rec(e, os, 0, false);
    return os.str();
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprNode::Kind::var: return a->name == b->name;
        case ExprNode::Kind::lit: return a->lit == b->lit;
        case ExprNode::Kind::omega: return true;
        case ExprNode::Kind::pow: return a->exp == b->exp && expr_equal(a->a, b->a);
        case ExprNode::Kind::neg: return expr_equal(a->a, b->a);
        default: return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
    }
}

std::vector<std::pair<std::string, ExprPtr>> parse_named_exprs(const std::string& text,
                                                               const std::vector<std::string>& vars) {
    std::vector<std::pair<std::string, ExprPtr>> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'name = expression'", lineno, 1);
        std::string name = line.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(),
                                  [](unsigned char c) { return std::isspace(c); }),
                   name.end());
        if (name.empty()) throw parse_error("missing name before '='", lineno, 1);
        out.emplace_back(name, parse_expr(line.substr(eq + 1), vars));
    }
    return out;
}

std::string cyclo_poly_to_expr(const SparsePoly<CycloRat>& p, const std::vector<std::string>& names) {
    return poly_to_string(p, names);
}

} // namespace diagcube
