#include "asynctl/logic.hpp"

#include <sstream>

namespace asynctl {

namespace {

using Kind = TemporalFormula::Kind;

bool is_binary(Kind k) {
    return k == Kind::And || k == Kind::Or || k == Kind::Xor || k == Kind::Implies ||
           k == Kind::Until;
}

bool is_prefix(Kind k) {
    return k == Kind::Not || k == Kind::NextLeft || k == Kind::NextRight ||
           k == Kind::Eventually || k == Kind::Always || k == Kind::AllPaths ||
           k == Kind::SomePath;
}

// Loosest first, mirroring the grammar.
int precedence(Kind k) {
    switch (k) {
    case Kind::Implies: return 0;
    case Kind::Until: return 1;
    case Kind::Or: return 2;
    case Kind::Xor: return 3;
    case Kind::And: return 4;
    default: return 5;
    }
}

const char* symbol(Kind k) {
    switch (k) {
    case Kind::And: return " & ";
    case Kind::Or: return " | ";
    case Kind::Xor: return " ^ ";
    case Kind::Implies: return " -> ";
    case Kind::Until: return " U ";
    case Kind::Not: return "!";
    case Kind::NextLeft: return "X-";
    case Kind::NextRight: return "X+";
    case Kind::Eventually: return "F ";
    case Kind::Always: return "G ";
    case Kind::AllPaths: return "A ";
    case Kind::SomePath: return "E ";
    default: return "";
    }
}

void render(const TemporalFormula& f, int parent, std::ostream& os) {
    int prec = precedence(f.kind());
    bool parens = prec < parent;
    if (parens)
        os << '(';
    switch (f.kind()) {
    case Kind::Const:
        os << f.constant_value().as_int();
        break;
    case Kind::Atom:
        if (f.function().body()->op == BooleanFunction::Op::Var) {
            os << f.function().variables()[f.function().body()->var];
        } else {
            os << '(' << f.function().str() << ')';
        }
        break;
    default:
        if (is_prefix(f.kind())) {
            os << symbol(f.kind());
            render(*f.lhs(), precedence(Kind::Not), os);
        } else {
            // U and -> are right-associative; & ^ | associate freely.
            bool right_assoc = f.kind() == Kind::Implies || f.kind() == Kind::Until;
            render(*f.lhs(), right_assoc ? prec + 1 : prec, os);
            os << symbol(f.kind());
            render(*f.rhs(), prec, os);
        }
    }
    if (parens)
        os << ')';
}

bool any_node(const TemporalFormula& f, bool (*pred)(Kind)) {
    if (pred(f.kind()))
        return true;
    if (f.lhs() && any_node(*f.lhs(), pred))
        return true;
    return f.rhs() && any_node(*f.rhs(), pred);
}

} // namespace

FormulaPtr TemporalFormula::constant(Bit value) {
    TemporalFormula f;
    f.kind_ = Kind::Const;
    f.value_ = value;
    return std::make_shared<const TemporalFormula>(std::move(f));
}

FormulaPtr TemporalFormula::atom(BooleanFunction fn) {
    TemporalFormula f;
    f.kind_ = Kind::Atom;
    f.fn_ = std::make_shared<const BooleanFunction>(std::move(fn));
    return std::make_shared<const TemporalFormula>(std::move(f));
}

FormulaPtr TemporalFormula::atom_var(std::string name) {
    std::vector<std::string> vars{std::move(name)};
    return atom(BooleanFunction::projection(std::move(vars), 0));
}

FormulaPtr TemporalFormula::negation(FormulaPtr a) {
    return unary(Kind::Not, std::move(a));
}

FormulaPtr TemporalFormula::unary(Kind kind, FormulaPtr a) {
    if (!is_prefix(kind) || !a)
        throw Error("malformed unary connector");
    TemporalFormula f;
    f.kind_ = kind;
    f.lhs_ = std::move(a);
    return std::make_shared<const TemporalFormula>(std::move(f));
}

FormulaPtr TemporalFormula::binary(Kind kind, FormulaPtr a, FormulaPtr b) {
    if (!is_binary(kind) || !a || !b)
        throw Error("malformed binary connector");
    TemporalFormula f;
    f.kind_ = kind;
    f.lhs_ = std::move(a);
    f.rhs_ = std::move(b);
    return std::make_shared<const TemporalFormula>(std::move(f));
}

bool TemporalFormula::has_quantifier() const {
    return any_node(*this, [](Kind k) { return k == Kind::AllPaths || k == Kind::SomePath; });
}

bool TemporalFormula::has_unbounded() const {
    return any_node(*this, [](Kind k) {
        return k == Kind::Until || k == Kind::Eventually || k == Kind::Always;
    });
}

bool TemporalFormula::has_next() const {
    return any_node(*this,
                    [](Kind k) { return k == Kind::NextLeft || k == Kind::NextRight; });
}

std::string TemporalFormula::str() const {
    std::ostringstream os;
    render(*this, 0, os);
    return os.str();
}

} // namespace asynctl
