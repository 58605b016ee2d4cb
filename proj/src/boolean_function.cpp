#include "asynctl/boolean_function.hpp"

#include <functional>
#include <sstream>

namespace asynctl {

namespace {

void check_refs(const BooleanFunction::ExprPtr& e, std::size_t arity) {
    if (!e)
        throw IndexOutOfRange("null expression node");
    if (e->op == BooleanFunction::Op::Var && e->var >= arity)
        throw IndexOutOfRange("variable reference out of range");
    if (e->lhs)
        check_refs(e->lhs, arity);
    if (e->rhs)
        check_refs(e->rhs, arity);
}

Bit eval(const BooleanFunction::Expr& e, std::span<const Bit> args) {
    using Op = BooleanFunction::Op;
    switch (e.op) {
    case Op::Const: return e.value;
    case Op::Var: return args[e.var];
    case Op::Not: return ~eval(*e.lhs, args);
    case Op::And: return eval(*e.lhs, args) & eval(*e.rhs, args);
    case Op::Or: return eval(*e.lhs, args) | eval(*e.rhs, args);
    case Op::Xor: return eval(*e.lhs, args) ^ eval(*e.rhs, args);
    case Op::Implies: return implies(eval(*e.lhs, args), eval(*e.rhs, args));
    }
    throw Error("unreachable");
}

// Grammar tiers, loosest first; parenthesize when a child binds looser.
int precedence(BooleanFunction::Op op) {
    using Op = BooleanFunction::Op;
    switch (op) {
    case Op::Implies: return 0;
    case Op::Or: return 1;
    case Op::Xor: return 2;
    case Op::And: return 3;
    case Op::Not: return 4;
    default: return 5;
    }
}

void render(const BooleanFunction::Expr& e,
            const std::vector<std::string>& names, int parent, std::ostream& os) {
    using Op = BooleanFunction::Op;
    int prec = precedence(e.op);
    bool parens = prec < parent;
    if (parens)
        os << '(';
    switch (e.op) {
    case Op::Const:
        os << e.value.as_int();
        break;
    case Op::Var:
        os << names[e.var];
        break;
    case Op::Not:
        os << '!';
        render(*e.lhs, names, prec + 1, os);
        break;
    case Op::And:
    case Op::Or:
    case Op::Xor:
    case Op::Implies: {
        const char* sym = e.op == Op::And   ? " & "
                          : e.op == Op::Or  ? " | "
                          : e.op == Op::Xor ? " ^ "
                                            : " -> ";
        // -> is right-associative; the rest associate freely.
        render(*e.lhs, names, e.op == Op::Implies ? prec + 1 : prec, os);
        os << sym;
        render(*e.rhs, names, prec, os);
        break;
    }
    }
    if (parens)
        os << ')';
}

} // namespace

BooleanFunction::BooleanFunction(std::vector<std::string> variables, ExprPtr body)
    : variables_(std::move(variables)), body_(std::move(body)) {
    if (variables_.empty())
        throw ArityMismatch("a Boolean function needs at least one variable");
    check_refs(body_, variables_.size());
}

BooleanFunction::ExprPtr BooleanFunction::constant(Bit value) {
    return std::make_shared<Expr>(Expr{Op::Const, value, 0, nullptr, nullptr});
}

BooleanFunction::ExprPtr BooleanFunction::var(std::size_t index) {
    return std::make_shared<Expr>(Expr{Op::Var, Bit{}, index, nullptr, nullptr});
}

BooleanFunction::ExprPtr BooleanFunction::negate(ExprPtr a) {
    return std::make_shared<Expr>(Expr{Op::Not, Bit{}, 0, std::move(a), nullptr});
}

BooleanFunction::ExprPtr BooleanFunction::apply(Op op, ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{op, Bit{}, 0, std::move(a), std::move(b)});
}

BooleanFunction BooleanFunction::projection(std::vector<std::string> variables,
                                            std::size_t index) {
    return BooleanFunction(std::move(variables), var(index));
}

BooleanFunction BooleanFunction::constant_function(std::vector<std::string> variables,
                                                   Bit value) {
    return BooleanFunction(std::move(variables), constant(value));
}

Bit BooleanFunction::evaluate(std::span<const Bit> args) const {
    if (args.size() != variables_.size())
        throw ArityMismatch("expected " + std::to_string(variables_.size()) +
                            " arguments, got " + std::to_string(args.size()));
    return eval(*body_, args);
}

std::string BooleanFunction::str() const {
    std::ostringstream os;
    render(*body_, variables_, 0, os);
    return os.str();
}

} // namespace asynctl
