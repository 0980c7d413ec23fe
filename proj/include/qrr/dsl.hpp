#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qrr/chebyshev.hpp"
#include "qrr/laurent.hpp"
#include "qrr/qfunctions.hpp"
#include "qrr/series.hpp"
#include "qrr/special_series.hpp"

namespace qrr::dsl {

// ---------------- tokens ----------------

struct Token {
    enum Kind {
        Ident, IntLit, LParen, RParen, Comma, Plus, Minus, Star, Slash, Caret, DotDot, End
    };
    Kind kind = End;
    std::string text;
    Integer value{0};
    int line = 1, col = 1;
};

class Lexer {
public:
    // base_line/base_col locate the snippet inside a larger file so that
    // diagnostics point at the original source.
    explicit Lexer(std::string src, int base_line = 1, int base_col = 1)
        : src_(std::move(src)), line_(base_line), col_(base_col) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= src_.size()) {
                t.kind = Token::End;
                out.push_back(t);
                break;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    digits += take();
                t.kind = Token::IntLit;
                t.text = digits;
                t.value = Integer(digits);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                        src_[pos_] == '_'))
                    name += take();
                t.kind = Token::Ident;
                t.text = name;
            } else {
                switch (c) {
                    case '(': t.kind = Token::LParen; break;
                    case ')': t.kind = Token::RParen; break;
                    case ',': t.kind = Token::Comma; break;
                    case '+': t.kind = Token::Plus; break;
                    case '-': t.kind = Token::Minus; break;
                    case '*': t.kind = Token::Star; break;
                    case '/': t.kind = Token::Slash; break;
                    case '^': t.kind = Token::Caret; break;
                    case '.':
                        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
                            t.kind = Token::DotDot;
                            take();
                            break;
                        }
                        throw SyntaxError("unexpected character '.'", line_, col_);
                    default:
                        throw SyntaxError(std::string("unexpected character '") + c + "'",
                                          line_, col_);
                }
                t.text = std::string(1, c);
                take();
                if (t.kind == Token::DotDot) t.text = "..";
            }
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    std::string src_;
    size_t pos_ = 0;
    int line_, col_;

    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }
};

// ---------------- AST ----------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Int, Var, Call, Sum, Prod, Add, Sub, Mul, Div, Pow, Neg } kind;
    Integer ival{0};
    std::string name;          // Var / Call name; Sum/Prod loop variable
    std::vector<ExprPtr> args; // Call args; Sum/Prod: {lo, hi?, body}; binary: {a, b}
    bool auto_bound = false;   // Sum/Prod with `auto` upper bound
    int line = 0, col = 0;
};

inline ExprPtr make_node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

// Builtin function names. An identifier followed by '(' is a call only when it
// is one of these; otherwise the parenthesis starts a juxtaposed factor
// (so `n (n+1)` is a product, not a call).
inline bool is_builtin(const std::string& name) {
    static const char* kNames[] = {"poch",   "qbinom",     "chebv",       "fib",
                                   "luc",    "floor",      "isqrt",       "cyc3",
                                   "appell", "appell_alt", "appell_cyc3", "substq",
                                   "negq"};
    for (const char* n : kNames)
        if (name == n) return true;
    return false;
}

// ---------------- parser ----------------
//
// expr    := term (('+'|'-') term)*
// term    := unary (('*'|'/'| juxtaposition) unary)*
// unary   := '-' unary | power
// power   := primary ('^' unary)?
// primary := int | ident | ident '(' args ')' | sum/prod '(' var ',' range ',' expr ')'
//          | '(' expr ')'
// range   := expr '..' (expr | 'auto')
class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr parse_full() {
        ExprPtr e = parse_expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }
    bool at(Token::Kind k) const { return peek().kind == k; }

    const Token& expect(Token::Kind k, const std::string& what) {
        if (!at(k))
            throw SyntaxError("expected " + what + ", found '" +
                                  (peek().kind == Token::End ? "end of input" : peek().text) +
                                  "'",
                              peek().line, peek().col);
        return next();
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (at(Token::Plus) || at(Token::Minus)) {
            const Token op = next();
            ExprPtr r = parse_term();
            Expr n;
            n.kind = (op.kind == Token::Plus) ? Expr::Add : Expr::Sub;
            n.args = {e, r};
            n.line = op.line;
            n.col = op.col;
            e = make_node(std::move(n));
        }
        return e;
    }

    bool starts_primary() const {
        return at(Token::IntLit) || at(Token::Ident) || at(Token::LParen);
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (true) {
            if (at(Token::Star) || at(Token::Slash)) {
                const Token op = next();
                ExprPtr r = parse_unary();
                Expr n;
                n.kind = (op.kind == Token::Star) ? Expr::Mul : Expr::Div;
                n.args = {e, r};
                n.line = op.line;
                n.col = op.col;
                e = make_node(std::move(n));
            } else if (starts_primary()) {  // juxtaposition
                const Token& at_tok = peek();
                ExprPtr r = parse_unary();
                Expr n;
                n.kind = Expr::Mul;
                n.args = {e, r};
                n.line = at_tok.line;
                n.col = at_tok.col;
                e = make_node(std::move(n));
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (at(Token::Minus)) {
            const Token op = next();
            Expr n;
            n.kind = Expr::Neg;
            n.args = {parse_unary()};
            n.line = op.line;
            n.col = op.col;
            return make_node(std::move(n));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_primary();
        if (at(Token::Caret)) {
            const Token op = next();
            Expr n;
            n.kind = Expr::Pow;
            n.args = {base, parse_unary()};
            n.line = op.line;
            n.col = op.col;
            return make_node(std::move(n));
        }
        return base;
    }

    ExprPtr parse_primary() {
        if (at(Token::IntLit)) {
            const Token t = next();
            Expr n;
            n.kind = Expr::Int;
            n.ival = t.value;
            n.line = t.line;
            n.col = t.col;
            return make_node(std::move(n));
        }
        if (at(Token::LParen)) {
            next();
            ExprPtr e = parse_expr();
            expect(Token::RParen, "')'");
            return e;
        }
        const Token t = expect(Token::Ident, "an expression");
        if ((t.text == "sum" || t.text == "prod") && at(Token::LParen)) {
            next();
            const Token var = expect(Token::Ident, "loop variable");
            expect(Token::Comma, "','");
            ExprPtr lo = parse_expr();
            expect(Token::DotDot, "'..'");
            Expr n;
            n.kind = (t.text == "sum") ? Expr::Sum : Expr::Prod;
            n.name = var.text;
            n.line = t.line;
            n.col = t.col;
            ExprPtr hi;
            if (at(Token::Ident) && peek().text == "auto") {
                next();
                n.auto_bound = true;
            } else {
                hi = parse_expr();
            }
            expect(Token::Comma, "','");
            ExprPtr body = parse_expr();
            expect(Token::RParen, "')'");
            n.args = {lo, hi, body};
            return make_node(std::move(n));
        }
        if (is_builtin(t.text) && at(Token::LParen)) {
            next();
            Expr n;
            n.kind = Expr::Call;
            n.name = t.text;
            n.line = t.line;
            n.col = t.col;
            if (!at(Token::RParen)) {
                n.args.push_back(parse_expr());
                while (at(Token::Comma)) {
                    next();
                    n.args.push_back(parse_expr());
                }
            }
            expect(Token::RParen, "')'");
            return make_node(std::move(n));
        }
        Expr n;
        n.kind = Expr::Var;
        n.name = t.text;
        n.line = t.line;
        n.col = t.col;
        return make_node(std::move(n));
    }
};

inline ExprPtr parse(const std::string& src, int base_line = 1, int base_col = 1) {
    return Parser(Lexer(src, base_line, base_col).run()).parse_full();
}

// ---------------- printer ----------------
// Precedence levels: add 1, mul 2, unary 3, pow 4, atom 5.

inline void print_to(const ExprPtr& e, std::string& out, int min_prec);

inline std::string print(const ExprPtr& e) {
    std::string out;
    print_to(e, out, 0);
    return out;
}

inline void print_to(const ExprPtr& e, std::string& out, int min_prec) {
    auto paren = [&](int prec, auto&& inner) {
        const bool need = prec < min_prec;
        if (need) out += "(";
        inner();
        if (need) out += ")";
    };
    switch (e->kind) {
        case Expr::Int:
            out += e->ival.get_str();
            break;
        case Expr::Var:
            out += e->name;
            break;
        case Expr::Call:
            out += e->name;
            out += "(";
            for (size_t i = 0; i < e->args.size(); ++i) {
                if (i) out += ", ";
                print_to(e->args[i], out, 0);
            }
            out += ")";
            break;
        case Expr::Sum:
        case Expr::Prod:
            out += (e->kind == Expr::Sum) ? "sum(" : "prod(";
            out += e->name;
            out += ", ";
            print_to(e->args[0], out, 0);
            out += "..";
            if (e->auto_bound)
                out += "auto";
            else
                print_to(e->args[1], out, 0);
            out += ", ";
            print_to(e->args[2], out, 0);
            out += ")";
            break;
        case Expr::Add:
            paren(1, [&] {
                print_to(e->args[0], out, 1);
                out += " + ";
                print_to(e->args[1], out, 2);
            });
            break;
        case Expr::Sub:
            paren(1, [&] {
                print_to(e->args[0], out, 1);
                out += " - ";
                print_to(e->args[1], out, 2);
            });
            break;
        case Expr::Mul:
            paren(2, [&] {
                print_to(e->args[0], out, 2);
                out += "*";
                print_to(e->args[1], out, 3);
            });
            break;
        case Expr::Div:
            paren(2, [&] {
                print_to(e->args[0], out, 2);
                out += "/";
                print_to(e->args[1], out, 3);
            });
            break;
        case Expr::Neg:
            paren(3, [&] {
                out += "-";
                print_to(e->args[0], out, 3);
            });
            break;
        case Expr::Pow:
            paren(4, [&] {
                print_to(e->args[0], out, 5);
                out += "^";
                print_to(e->args[1], out, 3);
            });
            break;
    }
}

// ---------------- evaluator ----------------

using Value = std::variant<Rational, detail::Laurent>;

struct EvalContext {
    int order = 0;
    std::optional<Rational> x;
    std::map<std::string, Rational> vars;  // bound loop variables

    // Intermediate values are truncated at this bound rather than at `order`:
    // a later factor (q^{-j^2} style) may shift coefficients downward, so a
    // margin above the target order is kept. If a stanza ever shifts by more
    // than the margin, validity tracking makes the final conversion fail
    // loudly instead of returning corrupted coefficients.
    long limit() const { return 2L * order + 64; }
};

namespace eval_detail {

inline bool is_scalar(const Value& v) { return std::holds_alternative<Rational>(v); }

inline const Rational& scalar_of(const Value& v, const ExprPtr& at) {
    if (!is_scalar(v))
        throw SyntaxError("expected a scalar value", at->line, at->col);
    return std::get<Rational>(v);
}

inline long long_of(const Value& v, const ExprPtr& at) {
    const Rational& r = scalar_of(v, at);
    if (r.get_den() != 1)
        throw SyntaxError("expected an integer value, found " + rational_str(r), at->line,
                          at->col);
    if (!r.get_num().fits_slong_p())
        throw SyntaxError("integer value out of range", at->line, at->col);
    return r.get_num().get_si();
}

inline detail::Laurent laurent_of(const Value& v) {
    if (is_scalar(v)) return detail::Laurent::from_rational(std::get<Rational>(v));
    return std::get<detail::Laurent>(v);
}

// Once a value has no negative exponents it can never push coefficients
// downward again by itself, so its own tail above the order is irrelevant
// to it; validity tracking still protects mixed products.
inline Value clamp(Value v, long limit) {
    if (!is_scalar(v)) {
        auto& l = std::get<detail::Laurent>(v);
        if (l.is_zero() || l.min_exponent() >= 0) l = l.with_valid(limit);
    }
    return v;
}

// structural check for `auto` bounds: the body must contain a power of q
// whose exponent is (at least) quadratic in the loop variable
inline bool mentions(const ExprPtr& e, const std::string& var) {
    if (e == nullptr) return false;
    if (e->kind == Expr::Var) return e->name == var;
    if ((e->kind == Expr::Sum || e->kind == Expr::Prod) && e->name == var) return false;
    for (const auto& a : e->args)
        if (mentions(a, var)) return true;
    return false;
}

inline bool quadratic_in(const ExprPtr& e, const std::string& var) {
    if (e == nullptr) return false;
    if (e->kind == Expr::Pow && e->args[0]->kind == Expr::Var && e->args[0]->name == var &&
        e->args[1]->kind == Expr::Int && e->args[1]->ival >= 2)
        return true;
    if (e->kind == Expr::Mul && mentions(e->args[0], var) && mentions(e->args[1], var))
        return true;
    for (const auto& a : e->args)
        if (quadratic_in(a, var)) return true;
    return false;
}

inline bool has_quadratic_q_power(const ExprPtr& e, const std::string& var) {
    if (e == nullptr) return false;
    if (e->kind == Expr::Pow && e->args[0]->kind == Expr::Var && e->args[0]->name == "q" &&
        quadratic_in(e->args[1], var))
        return true;
    if ((e->kind == Expr::Sum || e->kind == Expr::Prod) && e->name == var) return false;
    for (const auto& a : e->args)
        if (has_quadratic_q_power(a, var)) return true;
    return false;
}

struct Monomial {
    Rational coeff;
    long exponent;
};

// a Pochhammer parameter must evaluate to c * q^e (e may be negative here)
inline Monomial monomial_of(const Value& v, const ExprPtr& at) {
    if (is_scalar(v)) return {std::get<Rational>(v), 0};
    const auto& l = std::get<detail::Laurent>(v);
    if (l.is_zero()) return {Rational(0), 0};
    if (l.min_exponent() != l.max_exponent())
        throw SyntaxError("expected a monomial c*q^e", at->line, at->col);
    return {l.coeff(l.min_exponent()), l.min_exponent()};
}

}  // namespace eval_detail

inline Value eval_value(const ExprPtr& e, EvalContext& ctx);

inline Value eval_call(const ExprPtr& e, EvalContext& ctx) {
    using namespace eval_detail;
    const auto& name = e->name;
    const int order = ctx.order;
    auto arity = [&](size_t n) {
        if (e->args.size() != n)
            throw SyntaxError(name + " expects " + std::to_string(n) + " argument(s)",
                              e->line, e->col);
    };
    if (name == "poch") {
        arity(3);
        const Monomial a = monomial_of(eval_value(e->args[0], ctx), e->args[0]);
        const Monomial base = monomial_of(eval_value(e->args[1], ctx), e->args[1]);
        if (base.coeff != 1 || base.exponent < 1)
            throw SyntaxError("poch base must be a positive power of q", e->args[1]->line,
                              e->args[1]->col);
        if (e->args[2]->kind == Expr::Var && e->args[2]->name == "inf") {
            if (a.coeff == 1 && a.exponent == 0)
                return detail::Laurent::from_series(FormalSeries(order));  // (1;q)_inf = 0
            if (a.exponent < 1)
                throw SyntaxError("infinite poch requires the parameter to contain q",
                                  e->args[0]->line, e->args[0]->col);
            return detail::Laurent::from_series(pochhammer_infinite(
                SignedMonomial(a.coeff, a.exponent), base.exponent, order));
        }
        const long n = long_of(eval_value(e->args[2], ctx), e->args[2]);
        if (n < 0) throw NegativeLength(n);
        detail::Laurent r = detail::Laurent::from_rational(1);
        for (long j = 0; j < n; ++j) {
            const long ex = a.exponent + base.exponent * j;
            r = r * (detail::Laurent::from_rational(1) -
                     detail::Laurent::monomial(a.coeff, ex));
        }
        return clamp(std::move(r), ctx.limit());
    }
    if (name == "qbinom") {
        arity(3);
        const long n = long_of(eval_value(e->args[0], ctx), e->args[0]);
        const long k = long_of(eval_value(e->args[1], ctx), e->args[1]);
        const long l = long_of(eval_value(e->args[2], ctx), e->args[2]);
        return detail::Laurent::from_series(qbinomial(n, k, l, order));
    }
    if (name == "chebv") {
        arity(2);
        const Rational x = scalar_of(eval_value(e->args[0], ctx), e->args[0]);
        const long n = long_of(eval_value(e->args[1], ctx), e->args[1]);
        return cheb_v(x, n);
    }
    if (name == "fib") {
        arity(1);
        return Rational(Integer(fibonacci(long_of(eval_value(e->args[0], ctx), e->args[0]))));
    }
    if (name == "luc") {
        arity(1);
        return Rational(Integer(lucas(long_of(eval_value(e->args[0], ctx), e->args[0]))));
    }
    if (name == "floor") {
        arity(1);
        const Rational r = scalar_of(eval_value(e->args[0], ctx), e->args[0]);
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
        return Rational(q);
    }
    if (name == "isqrt") {
        arity(1);
        const long v = long_of(eval_value(e->args[0], ctx), e->args[0]);
        if (v < 0) throw SyntaxError("isqrt of a negative value", e->line, e->col);
        long r = 0;
        while ((r + 1) * (r + 1) <= v) ++r;
        return Rational(r);
    }
    if (name == "cyc3") {
        arity(1);
        const long j = long_of(eval_value(e->args[0], ctx), e->args[0]);
        return (((j % 3) + 3) % 3 == 0) ? Rational(1) : make_rational(-1, 2);
    }
    if (name == "appell" || name == "appell_alt" || name == "appell_cyc3") {
        arity(3);
        AppellLerchSpec spec{long_of(eval_value(e->args[0], ctx), e->args[0]),
                             long_of(eval_value(e->args[1], ctx), e->args[1]),
                             long_of(eval_value(e->args[2], ctx), e->args[2]),
                             name == "appell_alt"};
        if (name == "appell_cyc3") {
            FormalSeries s0 = appell_lerch_eval(spec, order, 3, 0);
            FormalSeries s1 = appell_lerch_eval(spec, order, 3, 1);
            FormalSeries s2 = appell_lerch_eval(spec, order, 3, 2);
            return detail::Laurent::from_series(cyclotomic_regroup(s0, s1, s2));
        }
        return detail::Laurent::from_series(appell_lerch_eval(spec, order));
    }
    if (name == "substq") {
        arity(2);
        const Value v = eval_value(e->args[0], ctx);
        const long k = long_of(eval_value(e->args[1], ctx), e->args[1]);
        if (k < 1) throw SyntaxError("substq exponent must be >= 1", e->line, e->col);
        if (is_scalar(v)) return v;
        return detail::Laurent::from_series(
            substitute_power(std::get<detail::Laurent>(v).to_series(order), k));
    }
    if (name == "negq") {
        arity(1);
        const Value v = eval_value(e->args[0], ctx);
        if (is_scalar(v)) return v;
        return detail::Laurent::from_series(
            substitute_negate(std::get<detail::Laurent>(v).to_series(order)));
    }
    throw UnknownIdentifier(name, e->line, e->col);
}

inline Value eval_value(const ExprPtr& e, EvalContext& ctx) {
    using namespace eval_detail;
    const int order = ctx.order;
    switch (e->kind) {
        case Expr::Int:
            return Rational(e->ival);
        case Expr::Var: {
            if (e->name == "q") return detail::Laurent::monomial(1, 1);
            if (e->name == "order") return Rational(order);
            if (auto it = ctx.vars.find(e->name); it != ctx.vars.end()) return it->second;
            if (e->name == "x") {
                if (!ctx.x) throw MissingX();
                return *ctx.x;
            }
            if (e->name == "inf" || e->name == "auto")
                throw SyntaxError("'" + e->name + "' is only valid as a bound", e->line,
                                  e->col);
            throw UnknownIdentifier(e->name, e->line, e->col);
        }
        case Expr::Call:
            return eval_call(e, ctx);
        case Expr::Neg: {
            Value v = eval_value(e->args[0], ctx);
            if (is_scalar(v)) return Rational(-std::get<Rational>(v));
            return -std::get<detail::Laurent>(v);
        }
        case Expr::Add:
        case Expr::Sub: {
            Value a = eval_value(e->args[0], ctx);
            Value b = eval_value(e->args[1], ctx);
            if (is_scalar(a) && is_scalar(b)) {
                const Rational& ra = std::get<Rational>(a);
                const Rational& rb = std::get<Rational>(b);
                return (e->kind == Expr::Add) ? Rational(ra + rb) : Rational(ra - rb);
            }
            detail::Laurent la = laurent_of(a), lb = laurent_of(b);
            return clamp((e->kind == Expr::Add) ? la + lb : la - lb, ctx.limit());
        }
        case Expr::Mul: {
            Value a = eval_value(e->args[0], ctx);
            Value b = eval_value(e->args[1], ctx);
            if (is_scalar(a) && is_scalar(b))
                return Rational(std::get<Rational>(a) * std::get<Rational>(b));
            if (is_scalar(a))
                return clamp(laurent_of(b).scaled(std::get<Rational>(a)), ctx.limit());
            if (is_scalar(b))
                return clamp(laurent_of(a).scaled(std::get<Rational>(b)), ctx.limit());
            return clamp(laurent_of(a) * laurent_of(b), ctx.limit());
        }
        case Expr::Div: {
            Value a = eval_value(e->args[0], ctx);
            Value b = eval_value(e->args[1], ctx);
            if (is_scalar(a) && is_scalar(b)) {
                const Rational& rb = std::get<Rational>(b);
                if (rb == 0) throw SyntaxError("division by zero", e->line, e->col);
                return Rational(std::get<Rational>(a) / rb);
            }
            if (is_scalar(b)) {
                const Rational& rb = std::get<Rational>(b);
                if (rb == 0) throw SyntaxError("division by zero", e->line, e->col);
                return clamp(laurent_of(a).scaled(1 / rb), ctx.limit());
            }
            return clamp(laurent_of(a) * laurent_of(b).inverted(ctx.limit()), ctx.limit());
        }
        case Expr::Pow: {
            const long k = long_of(eval_value(e->args[1], ctx), e->args[1]);
            Value base = eval_value(e->args[0], ctx);
            if (is_scalar(base)) {
                const Rational& rb = std::get<Rational>(base);
                if (rb == 0 && k < 0)
                    throw SyntaxError("zero to a negative power", e->line, e->col);
                Rational r(1);
                for (long i = 0; i < std::labs(k); ++i) r *= rb;
                if (k < 0) r = 1 / r;
                return r;
            }
            return clamp(std::get<detail::Laurent>(base).powed(k, ctx.limit()), ctx.limit());
        }
        case Expr::Sum:
        case Expr::Prod: {
            const long lo = long_of(eval_value(e->args[0], ctx), e->args[0]);
            const bool is_sum = (e->kind == Expr::Sum);
            long hi = 0;
            if (e->auto_bound) {
                if (!is_sum)
                    throw SyntaxError("'auto' bounds are only supported on sum", e->line,
                                      e->col);
                if (!has_quadratic_q_power(e->args[2], e->name))
                    throw SyntaxError(
                        "'auto' bound requires a q-power quadratic in the loop variable; "
                        "use an explicit bound",
                        e->line, e->col);
            } else {
                hi = long_of(eval_value(e->args[1], ctx), e->args[1]);
            }
            const bool outer_bound = ctx.vars.count(e->name) > 0;
            if (outer_bound)
                throw SyntaxError("loop variable '" + e->name + "' shadows an outer binding",
                                  e->line, e->col);
            detail::Laurent acc_sum;
            detail::Laurent acc_prod = detail::Laurent::from_rational(1);
            int high_streak = 0;
            const long iter_cap = lo + 10L * order + 1000;
            for (long v = lo;; ++v) {
                if (!e->auto_bound && v > hi) break;
                if (e->auto_bound && v > iter_cap)
                    throw SyntaxError("'auto' bound failed to terminate", e->line, e->col);
                ctx.vars[e->name] = Rational(v);
                Value tv = eval_value(e->args[2], ctx);
                detail::Laurent term = eval_detail::laurent_of(tv);
                if (is_sum)
                    acc_sum = acc_sum + term;
                else
                    acc_prod = acc_prod * term;
                if (e->auto_bound) {
                    if (term.is_zero() || term.min_exponent() > order)
                        ++high_streak;
                    else
                        high_streak = 0;
                    if (high_streak >= 2) break;
                }
            }
            ctx.vars.erase(e->name);
            return clamp(is_sum ? acc_sum : acc_prod, ctx.limit());
        }
    }
    throw Error("unreachable expression kind");
}

inline FormalSeries eval(const ExprPtr& e, int order,
                         std::optional<Rational> x = std::nullopt) {
    EvalContext ctx;
    ctx.order = order;
    ctx.x = std::move(x);
    Value v = eval_value(e, ctx);
    if (eval_detail::is_scalar(v))
        return FormalSeries::constant(std::get<Rational>(v), order);
    return std::get<detail::Laurent>(v).to_series(order);
}

// ---------------- corpus file ----------------

struct Stanza {
    std::string id;
    std::string anchor;
    int order = -1;  // -1: use the registry default
    bool xparam = false;
    ExprPtr degree_bound;  // may reference `order`
    ExprPtr lhs, rhs;
};

namespace file_detail {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() {
        const char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    void skip_space() {
        while (!done()) {
            if (peek() == '#') {
                while (!done() && peek() != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(peek()))) {
                take();
            } else {
                break;
            }
        }
    }
    std::string word() {
        skip_space();
        std::string w;
        while (!done() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '{' &&
               peek() != '}' && peek() != '"')
            w += take();
        return w;
    }
    std::string quoted() {
        skip_space();
        if (done() || peek() != '"') throw SyntaxError("expected a quoted string", line, col);
        take();
        std::string s;
        while (!done() && peek() != '"') s += take();
        if (done()) throw SyntaxError("unterminated string", line, col);
        take();
        return s;
    }
    // returns {block text, line, col of its first character}
    std::tuple<std::string, int, int> block() {
        skip_space();
        if (done() || peek() != '{') throw SyntaxError("expected '{'", line, col);
        take();
        const int bl = line, bc = col;
        std::string body;
        int depth = 1;
        while (!done()) {
            const char c = peek();
            if (c == '{') ++depth;
            if (c == '}') {
                --depth;
                if (depth == 0) {
                    take();
                    return {body, bl, bc};
                }
            }
            body += take();
        }
        throw SyntaxError("unterminated block", line, col);
    }
};

}  // namespace file_detail

inline std::vector<Stanza> parse_corpus(const std::string& text) {
    file_detail::Cursor c{text};
    std::vector<Stanza> out;
    while (true) {
        c.skip_space();
        if (c.done()) break;
        const int kl = c.line, kc = c.col;
        const std::string kw = c.word();
        if (kw != "identity")
            throw SyntaxError("expected 'identity', found '" + kw + "'", kl, kc);
        Stanza st;
        st.id = c.word();
        if (st.id.empty()) throw SyntaxError("missing identity id", c.line, c.col);
        c.skip_space();
        if (c.done() || c.peek() != '{') throw SyntaxError("expected '{'", c.line, c.col);
        c.take();
        while (true) {
            c.skip_space();
            if (c.done()) throw SyntaxError("unterminated stanza", c.line, c.col);
            if (c.peek() == '}') {
                c.take();
                break;
            }
            const int fl = c.line, fc = c.col;
            const std::string field = c.word();
            if (field == "anchor") {
                st.anchor = c.quoted();
            } else if (field == "order") {
                const std::string n = c.word();
                try {
                    st.order = std::stoi(n);
                } catch (...) {
                    throw SyntaxError("invalid order '" + n + "'", fl, fc);
                }
            } else if (field == "xparam") {
                const std::string sub = c.word();
                if (sub != "degree_bound")
                    throw SyntaxError("expected 'degree_bound' after 'xparam'", fl, fc);
                auto [body, bl, bc] = c.block();
                st.xparam = true;
                st.degree_bound = parse(body, bl, bc);
            } else if (field == "lhs" || field == "rhs") {
                auto [body, bl, bc] = c.block();
                ExprPtr e = parse(body, bl, bc);
                (field == "lhs" ? st.lhs : st.rhs) = e;
            } else {
                throw SyntaxError("unknown stanza field '" + field + "'", fl, fc);
            }
        }
        if (!st.lhs || !st.rhs)
            throw SyntaxError("stanza '" + st.id + "' must define lhs and rhs", kl, kc);
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace qrr::dsl
