#include <algorithm>
#include <set>

#include "asynctl/logic.hpp"

namespace asynctl {

namespace {

using Kind = TemporalFormula::Kind;

// Everything below works on the piecewise structure of the trajectory: all
// atom signals are constant between consecutive breakpoints, hence so is
// the truth function of every formula (X- truth functions are constant on
// the open pieces only, which the sample points below respect).
struct Evaluator {
    const EvalContext& ctx;

    Bit atom(const BooleanFunction& fn, const Time& t) const {
        std::vector<Bit> args(fn.arity());
        for (std::size_t i = 0; i < fn.arity(); ++i)
            args[i] = ctx.signal_for(fn.variables()[i]).value_at(t);
        return fn.evaluate(args);
    }

    // A point strictly inside the piece ending at t: every signal there
    // equals its left limit at t.
    Time left_sample(const Time& t) const {
        const auto& b = ctx.breakpoints();
        auto it = std::lower_bound(b.begin(), b.end(), t);
        Time piece_start = it == b.begin() ? Time(0) : *std::prev(it);
        return midpoint(piece_start, t);
    }

    // Candidate witness instants for the future-looking operators: t, every
    // breakpoint after t, one point beyond everything, and a point inside
    // each open interval in between. Any truth function is constant between
    // consecutive candidates, so scanning them decides the continuum.
    std::vector<Time> witness_points(const Time& t) const {
        std::vector<Time> anchors{t};
        const auto& b = ctx.breakpoints();
        for (auto it = std::upper_bound(b.begin(), b.end(), t); it != b.end(); ++it)
            anchors.push_back(*it);
        anchors.push_back(anchors.back() + Time(1));
        std::vector<Time> out;
        out.reserve(anchors.size() * 2);
        out.push_back(anchors.front());
        for (std::size_t i = 1; i < anchors.size(); ++i) {
            out.push_back(midpoint(anchors[i - 1], anchors[i]));
            out.push_back(anchors[i]);
        }
        return out;
    }

    Bit eval(const TemporalFormula& f, const Time& t) const {
        switch (f.kind()) {
        case Kind::Const: return f.constant_value();
        case Kind::Atom: return atom(f.function(), t);
        case Kind::Not: return ~eval(*f.lhs(), t);
        case Kind::And: return eval(*f.lhs(), t) & eval(*f.rhs(), t);
        case Kind::Or: return eval(*f.lhs(), t) | eval(*f.rhs(), t);
        case Kind::Xor: return eval(*f.lhs(), t) ^ eval(*f.rhs(), t);
        case Kind::Implies: return implies(eval(*f.lhs(), t), eval(*f.rhs(), t));
        case Kind::NextLeft: return eval_left(*f.lhs(), t);
        case Kind::NextRight:
            // Right limits coincide with values on right-continuous
            // signals, so X+ changes nothing.
            return eval(*f.lhs(), t);
        case Kind::Until: return until(*f.lhs(), *f.rhs(), t);
        case Kind::Eventually: return eventually(*f.lhs(), t);
        case Kind::Always: return always(*f.lhs(), t);
        case Kind::AllPaths:
        case Kind::SomePath:
            throw QuantifierPresent("path quantifier in a single-path evaluation");
        }
        throw Error("unreachable");
    }

    // Truth at t-0, i.e. the left limit of the truth function.
    Bit eval_left(const TemporalFormula& f, const Time& t) const {
        if (!t.is_positive())
            return eval_prezero(f);
        return eval(f, left_sample(t));
    }

    // Limit of the truth value as t approaches 0 from below: atoms read the
    // zero state; a future operator may still find its witnesses at >= 0.
    Bit eval_prezero(const TemporalFormula& f) const {
        switch (f.kind()) {
        case Kind::Const: return f.constant_value();
        case Kind::Atom: {
            std::vector<Bit> args(f.function().arity());
            for (std::size_t i = 0; i < args.size(); ++i) {
                ctx.signal_for(f.function().variables()[i]); // name check
                args[i] = bit0;
            }
            return f.function().evaluate(args);
        }
        case Kind::Not: return ~eval_prezero(*f.lhs());
        case Kind::And: return eval_prezero(*f.lhs()) & eval_prezero(*f.rhs());
        case Kind::Or: return eval_prezero(*f.lhs()) | eval_prezero(*f.rhs());
        case Kind::Xor: return eval_prezero(*f.lhs()) ^ eval_prezero(*f.rhs());
        case Kind::Implies:
            return implies(eval_prezero(*f.lhs()), eval_prezero(*f.rhs()));
        case Kind::NextLeft:
        case Kind::NextRight:
            return eval_prezero(*f.lhs());
        case Kind::Until:
            // The witness may sit before 0 (empty window) or at >= 0, in
            // which case the window additionally spans the pre-0 piece.
            return eval_prezero(*f.rhs()) |
                   (eval_prezero(*f.lhs()) & until(*f.lhs(), *f.rhs(), Time(0)));
        case Kind::Eventually:
            return eval_prezero(*f.lhs()) | eventually(*f.lhs(), Time(0));
        case Kind::Always:
            return eval_prezero(*f.lhs()) & always(*f.lhs(), Time(0));
        case Kind::AllPaths:
        case Kind::SomePath:
            throw QuantifierPresent("path quantifier in a single-path evaluation");
        }
        throw Error("unreachable");
    }

    // Scan in time order: reaching w with h intact means h held on [t, w),
    // so g at w is a witness; once h fails at w no later witness can work.
    Bit until(const TemporalFormula& h, const TemporalFormula& g, const Time& t) const {
        for (const Time& w : witness_points(t)) {
            if (eval(g, w) == bit1)
                return bit1;
            if (eval(h, w) == bit0)
                return bit0;
        }
        return bit0;
    }

    Bit eventually(const TemporalFormula& g, const Time& t) const {
        for (const Time& w : witness_points(t))
            if (eval(g, w) == bit1)
                return bit1;
        return bit0;
    }

    Bit always(const TemporalFormula& h, const Time& t) const {
        for (const Time& w : witness_points(t))
            if (eval(h, w) == bit0)
                return bit0;
        return bit1;
    }
};

void validate(const TemporalFormula& f, const EvalContext& ctx) {
    if (f.has_quantifier())
        throw QuantifierPresent("formula '" + f.str() + "' contains a path quantifier");
    if (f.has_unbounded() && !ctx.trajectory().settled)
        throw UnsettledTrajectory(
            "U/F/G need a settled trajectory; this one may still switch past "
            "its horizon");
}

void check_instant(const Time& t) {
    if (t.is_negative())
        throw BadInterval("evaluation instant " + t.str() + " is negative");
}

} // namespace

EvalContext::EvalContext(const Trajectory& trajectory) : trajectory_(&trajectory) {
    std::set<Time> points;
    for (const Signal& s : trajectory.states)
        points.insert(s.toggles().begin(), s.toggles().end());
    for (const Signal& s : trajectory.inputs)
        points.insert(s.toggles().begin(), s.toggles().end());
    breakpoints_.assign(points.begin(), points.end());
    for (std::size_t i = 0; i < trajectory.state_names.size(); ++i)
        by_name_.emplace(trajectory.state_names[i], i);
}

const Signal& EvalContext::signal_for(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw UnknownIdentifier("unknown identifier '" + name + "'");
    return trajectory_->states[it->second];
}

Bit holds_at(const FormulaPtr& h, const EvalContext& ctx, const Time& t) {
    check_instant(t);
    validate(*h, ctx);
    return Evaluator{ctx}.eval(*h, t);
}

Bit next_holds(const FormulaPtr& h, const EvalContext& ctx, const Time& t, Side side) {
    check_instant(t);
    validate(*h, ctx);
    if (side == Side::right)
        return Evaluator{ctx}.eval(*h, t);
    return Evaluator{ctx}.eval_left(*h, t);
}

Bit until_holds(const FormulaPtr& h, const FormulaPtr& g, const EvalContext& ctx,
                const Time& t) {
    check_instant(t);
    validate(*h, ctx);
    validate(*g, ctx);
    if (!ctx.trajectory().settled)
        throw UnsettledTrajectory("U needs a settled trajectory");
    Evaluator ev{ctx};
    return ev.until(*h, *g, t);
}

Bit eventually_holds(const FormulaPtr& g, const EvalContext& ctx, const Time& t) {
    check_instant(t);
    validate(*g, ctx);
    if (!ctx.trajectory().settled)
        throw UnsettledTrajectory("F needs a settled trajectory");
    Evaluator ev{ctx};
    return ev.eventually(*g, t);
}

Bit always_holds(const FormulaPtr& h, const EvalContext& ctx, const Time& t) {
    check_instant(t);
    validate(*h, ctx);
    if (!ctx.trajectory().settled)
        throw UnsettledTrajectory("G needs a settled trajectory");
    Evaluator ev{ctx};
    return ev.always(*h, t);
}

Bit satisfied_in(const FormulaPtr& h, const EvalContext& ctx) {
    return holds_at(h, ctx, Time(0));
}

Signal truth_signal(const FormulaPtr& h, const EvalContext& ctx) {
    if (h->has_next())
        throw UnsupportedConnector(
            "X- truth is left-continuous and X+ is redundant; neither lifts "
            "to a realizable signal");
    if (h->has_quantifier())
        throw UnsupportedConnector("path quantifiers do not lift to a signal");
    validate(*h, ctx);

    Evaluator ev{ctx};
    Bit initial = ev.eval(*h, Time(0));
    Bit current = initial;
    std::vector<Time> toggles;
    for (const Time& b : ctx.breakpoints()) {
        Bit v = ev.eval(*h, b);
        if (v != current) {
            toggles.push_back(b);
            current = v;
        }
    }
    return Signal::make(initial, std::move(toggles));
}

} // namespace asynctl
