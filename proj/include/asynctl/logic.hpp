#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "asynctl/automaton.hpp"
#include "asynctl/boolean_function.hpp"
#include "asynctl/signal.hpp"

namespace asynctl {

class TemporalFormula;
using FormulaPtr = std::shared_ptr<const TemporalFormula>;

/// A continuous-time temporal formula: atoms are Boolean functions of the
/// state vector, evaluated pointwise along a trajectory; X-/X+ look at the
/// one-sided limit state; U, F, G quantify over the future of the
/// trajectory; A and E quantify over a family of trajectories.
class TemporalFormula {
public:
    enum class Kind {
        Const,
        Atom,
        Not,
        And,
        Or,
        Xor,
        Implies,
        NextLeft,
        NextRight,
        Until,
        Eventually,
        Always,
        AllPaths,
        SomePath,
    };

    Kind kind() const { return kind_; }
    Bit constant_value() const { return value_; }
    const BooleanFunction& function() const { return *fn_; }
    const FormulaPtr& lhs() const { return lhs_; }
    const FormulaPtr& rhs() const { return rhs_; }

    static FormulaPtr constant(Bit value);
    static FormulaPtr atom(BooleanFunction fn);
    /// Atom that reads one named coordinate.
    static FormulaPtr atom_var(std::string name);
    static FormulaPtr negation(FormulaPtr a);
    static FormulaPtr binary(Kind kind, FormulaPtr a, FormulaPtr b);
    static FormulaPtr unary(Kind kind, FormulaPtr a);

    bool has_quantifier() const;
    /// True if the formula contains U, F or G (operators over an unbounded
    /// future, which need a settled trajectory).
    bool has_unbounded() const;
    bool has_next() const;

    std::string str() const;

private:
    TemporalFormula() = default;

    Kind kind_ = Kind::Const;
    Bit value_{};
    std::shared_ptr<const BooleanFunction> fn_;
    FormulaPtr lhs_, rhs_;
};

/// Grammar: identifiers [a-zA-Z][a-zA-Z0-9_]*; constants 0, 1; tightest
/// first: !, prefix X- X+ F G A E, &, ^, |, U (right-assoc), -> (right-
/// assoc); parentheses override. U, F, G, A, E and X are reserved words.
FormulaPtr parse_formula(std::string_view text);

/// Parses and additionally checks every atom against the declared names.
FormulaPtr parse_formula(std::string_view text,
                         const std::vector<std::string>& declared_names);

/// Lowers a connective-free formula (constants, atoms, Boolean operators)
/// to a Boolean function over the given variable list. Throws
/// UnsupportedConnector on temporal or path operators, UnknownIdentifier on
/// an atom outside the list.
BooleanFunction to_boolean_function(const FormulaPtr& formula,
                                    std::vector<std::string> variables);

/// One trajectory fixed as the interpretation of the atoms. Atom variables
/// resolve against the trajectory's state names.
class EvalContext {
public:
    explicit EvalContext(const Trajectory& trajectory);

    const Trajectory& trajectory() const { return *trajectory_; }

    /// Toggle instants of all state and input signals, sorted and unique.
    /// Every truth function of an X-free formula is constant between
    /// consecutive entries (and after the last one).
    const std::vector<Time>& breakpoints() const { return breakpoints_; }

    const Signal& signal_for(const std::string& name) const;

private:
    const Trajectory* trajectory_;
    std::vector<Time> breakpoints_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

/// Floating semantics: the truth of a quantifier-free formula at instant
/// t >= 0. Throws QuantifierPresent on A/E, UnsettledTrajectory when the
/// formula contains U/F/G and the trajectory is not settled.
Bit holds_at(const FormulaPtr& h, const EvalContext& ctx, const Time& t);

/// Truth of h at the one-sided limit state x(t-0) or x(t+0). The left
/// limit at t = 0 evaluates over the zero state; the right variant equals
/// holds_at because realizable signals are right-continuous.
Bit next_holds(const FormulaPtr& h, const EvalContext& ctx, const Time& t, Side side);

/// t |= h U g: some instant t' >= t satisfies g with h true throughout
/// [t, t'); the empty window at t' = t counts as true.
Bit until_holds(const FormulaPtr& h, const FormulaPtr& g, const EvalContext& ctx,
                const Time& t);

/// t |= F g: some instant t' >= t satisfies g.
Bit eventually_holds(const FormulaPtr& g, const EvalContext& ctx, const Time& t);

/// t |= G h: h holds at every instant t' >= t.
Bit always_holds(const FormulaPtr& h, const EvalContext& ctx, const Time& t);

/// Anchored semantics: truth at the initial instant.
Bit satisfied_in(const FormulaPtr& h, const EvalContext& ctx);

/// The realizable signal t -> holds_at(h, ctx, t) of an X-free,
/// quantifier-free formula; its toggles lie in the trajectory's lattice.
/// X- is excluded because its truth is left-continuous, hence not
/// realizable.
Signal truth_signal(const FormulaPtr& h, const EvalContext& ctx);

} // namespace asynctl
