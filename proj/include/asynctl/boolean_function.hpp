#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "asynctl/bit.hpp"
#include "asynctl/errors.hpp"

namespace asynctl {

/// A Boolean function B2^k -> B2 given as an expression tree over named
/// variables. Evaluation is total and deterministic; every variable
/// reference is an index into the declared name list.
class BooleanFunction {
public:
    enum class Op { Const, Var, Not, And, Or, Xor, Implies };

    struct Expr;
    using ExprPtr = std::shared_ptr<const Expr>;

    struct Expr {
        Op op;
        Bit value{};        // Const
        std::size_t var{};  // Var
        ExprPtr lhs, rhs;   // Not uses lhs only
    };

    /// Throws ArityMismatch on an empty variable list, IndexOutOfRange if
    /// the body references a variable outside it.
    BooleanFunction(std::vector<std::string> variables, ExprPtr body);

    static ExprPtr constant(Bit value);
    static ExprPtr var(std::size_t index);
    static ExprPtr negate(ExprPtr a);
    static ExprPtr apply(Op op, ExprPtr a, ExprPtr b);

    /// The projection onto one named variable.
    static BooleanFunction projection(std::vector<std::string> variables,
                                      std::size_t index);
    /// The constant function over the given variables.
    static BooleanFunction constant_function(std::vector<std::string> variables,
                                             Bit value);

    std::size_t arity() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const ExprPtr& body() const { return body_; }

    /// Throws ArityMismatch unless args.size() == arity().
    Bit evaluate(std::span<const Bit> args) const;

    /// Infix rendering using the formula grammar (!, &, ^, |, ->).
    std::string str() const;

private:
    std::vector<std::string> variables_;
    ExprPtr body_;
};

} // namespace asynctl
