#include <cctype>
#include <functional>

#include "asynctl/logic.hpp"

namespace asynctl {

namespace {

using Kind = TemporalFormula::Kind;

struct Token {
    enum Type {
        End,
        Ident,
        Zero,
        One,
        Bang,
        Amp,
        Caret,
        Pipe,
        Arrow,
        LParen,
        RParen,
        KwUntil,
        KwEventually,
        KwAlways,
        KwAll,
        KwSome,
        KwNextLeft,
        KwNextRight,
    };
    Type type;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Token::End, "", start};
            return;
        }
        char c = text_[pos_];
        auto single = [&](Token::Type type) {
            ++pos_;
            current_ = {type, std::string(1, c), start};
        };
        switch (c) {
        case '!': return single(Token::Bang);
        case '&': return single(Token::Amp);
        case '^': return single(Token::Caret);
        case '|': return single(Token::Pipe);
        case '(': return single(Token::LParen);
        case ')': return single(Token::RParen);
        case '-':
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                current_ = {Token::Arrow, "->", start};
                return;
            }
            throw ParseError(start, "unexpected '-'");
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            std::string digits(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (digits == "0") {
                current_ = {Token::Zero, digits, start};
            } else if (digits == "1") {
                current_ = {Token::One, digits, start};
            } else {
                throw ParseError(start, "only the constants 0 and 1 are allowed");
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
                ++end;
            std::string word(text_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "X") {
                // X must be followed by a side marker; X- is distinguished
                // from an implication arrow by the missing '>'.
                if (pos_ < text_.size() && text_[pos_] == '+') {
                    ++pos_;
                    current_ = {Token::KwNextRight, "X+", start};
                    return;
                }
                if (pos_ < text_.size() && text_[pos_] == '-' &&
                    (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '>')) {
                    ++pos_;
                    current_ = {Token::KwNextLeft, "X-", start};
                    return;
                }
                throw ParseError(start, "X must be written X- or X+");
            }
            if (word == "U") {
                current_ = {Token::KwUntil, word, start};
            } else if (word == "F") {
                current_ = {Token::KwEventually, word, start};
            } else if (word == "G") {
                current_ = {Token::KwAlways, word, start};
            } else if (word == "A") {
                current_ = {Token::KwAll, word, start};
            } else if (word == "E") {
                current_ = {Token::KwSome, word, start};
            } else {
                current_ = {Token::Ident, word, start};
            }
            return;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Token::End, "", 0};
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = implies();
        const Token& t = lex_.peek();
        if (t.type != Token::End)
            throw ParseError(t.pos, "unexpected '" + t.text + "'");
        return f;
    }

private:
    // Loosest binding; right-associative.
    FormulaPtr implies() {
        FormulaPtr left = until();
        if (lex_.peek().type == Token::Arrow) {
            lex_.take();
            return TemporalFormula::binary(Kind::Implies, std::move(left), implies());
        }
        return left;
    }

    // Right-associative.
    FormulaPtr until() {
        FormulaPtr left = disjunction();
        if (lex_.peek().type == Token::KwUntil) {
            lex_.take();
            return TemporalFormula::binary(Kind::Until, std::move(left), until());
        }
        return left;
    }

    FormulaPtr disjunction() {
        FormulaPtr left = exclusive();
        while (lex_.peek().type == Token::Pipe) {
            lex_.take();
            left = TemporalFormula::binary(Kind::Or, std::move(left), exclusive());
        }
        return left;
    }

    FormulaPtr exclusive() {
        FormulaPtr left = conjunction();
        while (lex_.peek().type == Token::Caret) {
            lex_.take();
            left = TemporalFormula::binary(Kind::Xor, std::move(left), conjunction());
        }
        return left;
    }

    FormulaPtr conjunction() {
        FormulaPtr left = unary();
        while (lex_.peek().type == Token::Amp) {
            lex_.take();
            left = TemporalFormula::binary(Kind::And, std::move(left), unary());
        }
        return left;
    }

    FormulaPtr unary() {
        switch (lex_.peek().type) {
        case Token::Bang:
            lex_.take();
            return TemporalFormula::negation(unary());
        case Token::KwNextLeft:
            lex_.take();
            return TemporalFormula::unary(Kind::NextLeft, unary());
        case Token::KwNextRight:
            lex_.take();
            return TemporalFormula::unary(Kind::NextRight, unary());
        case Token::KwEventually:
            lex_.take();
            return TemporalFormula::unary(Kind::Eventually, unary());
        case Token::KwAlways:
            lex_.take();
            return TemporalFormula::unary(Kind::Always, unary());
        case Token::KwAll:
            lex_.take();
            return TemporalFormula::unary(Kind::AllPaths, unary());
        case Token::KwSome:
            lex_.take();
            return TemporalFormula::unary(Kind::SomePath, unary());
        default:
            return primary();
        }
    }

    FormulaPtr primary() {
        Token t = lex_.take();
        switch (t.type) {
        case Token::Zero:
            return TemporalFormula::constant(bit0);
        case Token::One:
            return TemporalFormula::constant(bit1);
        case Token::Ident:
            return TemporalFormula::atom_var(std::move(t.text));
        case Token::LParen: {
            FormulaPtr inner = implies();
            Token close = lex_.take();
            if (close.type != Token::RParen)
                throw ParseError(close.pos, "expected ')'");
            return inner;
        }
        case Token::End:
            throw ParseError(t.pos, "unexpected end of formula");
        default:
            throw ParseError(t.pos, "unexpected '" + t.text + "'");
        }
    }

    Lexer lex_;
};

void collect_atom_names(const TemporalFormula& f, std::vector<std::string>& out) {
    if (f.kind() == Kind::Atom) {
        for (const std::string& v : f.function().variables())
            out.push_back(v);
    }
    if (f.lhs())
        collect_atom_names(*f.lhs(), out);
    if (f.rhs())
        collect_atom_names(*f.rhs(), out);
}

BooleanFunction::ExprPtr lower(const TemporalFormula& f,
                               const std::vector<std::string>& variables) {
    using Op = BooleanFunction::Op;
    auto resolve = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < variables.size(); ++i)
            if (variables[i] == name)
                return i;
        throw UnknownIdentifier("unknown identifier '" + name + "'");
    };
    switch (f.kind()) {
    case Kind::Const:
        return BooleanFunction::constant(f.constant_value());
    case Kind::Atom: {
        // Re-index the atom's own function onto the target variable list.
        const BooleanFunction& fn = f.function();
        std::function<BooleanFunction::ExprPtr(const BooleanFunction::Expr&)> remap =
            [&](const BooleanFunction::Expr& e) -> BooleanFunction::ExprPtr {
            switch (e.op) {
            case Op::Const: return BooleanFunction::constant(e.value);
            case Op::Var: return BooleanFunction::var(resolve(fn.variables()[e.var]));
            case Op::Not: return BooleanFunction::negate(remap(*e.lhs));
            default: return BooleanFunction::apply(e.op, remap(*e.lhs), remap(*e.rhs));
            }
        };
        return remap(*fn.body());
    }
    case Kind::Not:
        return BooleanFunction::negate(lower(*f.lhs(), variables));
    case Kind::And:
        return BooleanFunction::apply(Op::And, lower(*f.lhs(), variables),
                                      lower(*f.rhs(), variables));
    case Kind::Or:
        return BooleanFunction::apply(Op::Or, lower(*f.lhs(), variables),
                                      lower(*f.rhs(), variables));
    case Kind::Xor:
        return BooleanFunction::apply(Op::Xor, lower(*f.lhs(), variables),
                                      lower(*f.rhs(), variables));
    case Kind::Implies:
        return BooleanFunction::apply(Op::Implies, lower(*f.lhs(), variables),
                                      lower(*f.rhs(), variables));
    default:
        throw UnsupportedConnector("'" + f.str() +
                                   "' is not a plain Boolean expression");
    }
}

} // namespace

FormulaPtr parse_formula(std::string_view text) {
    return Parser(text).parse();
}

FormulaPtr parse_formula(std::string_view text,
                         const std::vector<std::string>& declared_names) {
    FormulaPtr f = parse_formula(text);
    std::vector<std::string> used;
    collect_atom_names(*f, used);
    for (const std::string& name : used) {
        bool known = false;
        for (const std::string& d : declared_names)
            if (d == name) {
                known = true;
                break;
            }
        if (!known)
            throw UnknownIdentifier("unknown identifier '" + name + "'");
    }
    return f;
}

BooleanFunction to_boolean_function(const FormulaPtr& formula,
                                    std::vector<std::string> variables) {
    if (!formula)
        throw Error("null formula");
    BooleanFunction::ExprPtr body = lower(*formula, variables);
    return BooleanFunction(std::move(variables), std::move(body));
}

} // namespace asynctl
