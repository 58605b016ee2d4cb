#include "asynctl/branching.hpp"

namespace asynctl {

namespace {

using Kind = TemporalFormula::Kind;

void check_space(const DelaySpace& space, std::size_t n) {
    if (space.coordinate_count() != n)
        throw ArityMismatch("delay space covers " +
                            std::to_string(space.coordinate_count()) +
                            " coordinates, automaton has " + std::to_string(n));
}

struct PathEvaluator {
    const PathSet& paths;
    std::vector<EvalContext> contexts;
    Time t;

    explicit PathEvaluator(const PathSet& ps, Time at) : paths(ps), t(std::move(at)) {
        contexts.reserve(ps.paths.size());
        for (const Trajectory& x : ps.paths)
            contexts.emplace_back(x);
    }

    Bit eval(const FormulaPtr& f, const EvalContext* scope) const {
        switch (f->kind()) {
        case Kind::Const:
            return f->constant_value();
        case Kind::Not:
            return ~eval(f->lhs(), scope);
        case Kind::And:
            return eval(f->lhs(), scope) & eval(f->rhs(), scope);
        case Kind::Or:
            return eval(f->lhs(), scope) | eval(f->rhs(), scope);
        case Kind::Xor:
            return eval(f->lhs(), scope) ^ eval(f->rhs(), scope);
        case Kind::Implies:
            return implies(eval(f->lhs(), scope), eval(f->rhs(), scope));
        case Kind::AllPaths: {
            Bit v = bit1;
            for (const EvalContext& ctx : contexts)
                v = v & eval(f->lhs(), &ctx);
            return v;
        }
        case Kind::SomePath: {
            Bit v = bit0;
            for (const EvalContext& ctx : contexts)
                v = v | eval(f->lhs(), &ctx);
            return v;
        }
        default:
            // Atom or temporal connector: needs one concrete path, and no
            // quantifier may hide below the temporal level.
            if (f->has_quantifier())
                throw QuantifierPresent("'" + f->str() +
                                        "' nests a path quantifier below a "
                                        "temporal operator");
            if (scope == nullptr) {
                if (contexts.size() != 1)
                    throw UnquantifiedOverManyPaths(
                        "'" + f->str() + "' is evaluated over " +
                        std::to_string(contexts.size()) +
                        " paths without a path quantifier");
                scope = &contexts.front();
            }
            return holds_at(f, *scope, t);
        }
    }
};

} // namespace

DelaySpace::DelaySpace(std::vector<std::vector<Time>> candidates)
    : candidates_(std::move(candidates)) {
    for (const auto& list : candidates_) {
        if (list.empty())
            throw EmptyDelaySpace("every coordinate needs at least one candidate delay");
        for (const Time& tau : list)
            if (!tau.is_positive())
                throw ZeroDelay("candidate delay must be positive, got " + tau.str());
    }
}

DelaySpace DelaySpace::from_bounds(const std::vector<std::pair<Time, Time>>& bounds,
                                   const Time& step) {
    if (!step.is_positive())
        throw ZeroDelay("grid step must be positive, got " + step.str());
    std::vector<std::vector<Time>> lists;
    lists.reserve(bounds.size());
    for (const auto& [lo, hi] : bounds) {
        if (!lo.is_positive())
            throw ZeroDelay("lower bound must be positive, got " + lo.str());
        if (hi < lo)
            throw BadInterval("bounds [" + lo.str() + ", " + hi.str() + "] are reversed");
        std::vector<Time> list;
        for (Time tau = lo; !(hi < tau); tau += step)
            list.push_back(tau);
        lists.push_back(std::move(list));
    }
    return DelaySpace(std::move(lists));
}

std::size_t DelaySpace::tuple_count() const {
    std::size_t count = 1;
    for (const auto& list : candidates_)
        count *= list.size();
    return count;
}

PathSet enumerate_paths(const Automaton& base, const DelaySpace& space,
                        const InputWave& u, const Time& horizon) {
    check_space(space, base.state_count());

    PathSet out{base, u, horizon, {}, {}};
    std::size_t n = base.state_count();
    std::vector<std::size_t> index(n, 0);
    const auto& lists = space.candidates();
    for (;;) {
        std::vector<Time> tuple;
        tuple.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            tuple.push_back(lists[i][index[i]]);
        Automaton variant(base.state_names(), base.input_names(), base.kinds(),
                          base.generator(), tuple, base.initial());
        out.paths.push_back(solve(variant, u, horizon));
        out.tuples.push_back(std::move(tuple));

        // Odometer: last coordinate fastest, i.e. lexicographic order.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++index[i] < lists[i].size())
                break;
            index[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

Bit quantifier_holds(PathQuantifier q, const FormulaPtr& h, const PathSet& paths,
                     const Time& t) {
    if (!h)
        throw Error("null formula");
    if (h->has_quantifier())
        throw QuantifierPresent("quantifier_holds expects a quantifier-free formula");
    if (paths.paths.empty())
        throw EmptyDelaySpace("empty path set");
    Bit v = q == PathQuantifier::all ? bit1 : bit0;
    for (const Trajectory& x : paths.paths) {
        EvalContext ctx(x);
        Bit b = holds_at(h, ctx, t);
        v = q == PathQuantifier::all ? (v & b) : (v | b);
    }
    return v;
}

Bit eval_formula(const FormulaPtr& h, const PathSet& paths, const Time& t) {
    if (!h)
        throw Error("null formula");
    if (paths.paths.empty())
        throw EmptyDelaySpace("empty path set");
    PathEvaluator ev(paths, t);
    return ev.eval(h, nullptr);
}

} // namespace asynctl
