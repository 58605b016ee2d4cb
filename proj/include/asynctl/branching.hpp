#pragma once

#include <vector>

#include "asynctl/automaton.hpp"
#include "asynctl/logic.hpp"

namespace asynctl {

/// Finite candidate delays per coordinate; the trajectory family ranges
/// over their cross product.
class DelaySpace {
public:
    explicit DelaySpace(std::vector<std::vector<Time>> candidates);

    /// Per-coordinate grids lo, lo+step, ... capped at hi.
    static DelaySpace from_bounds(const std::vector<std::pair<Time, Time>>& bounds,
                                  const Time& step);

    const std::vector<std::vector<Time>>& candidates() const { return candidates_; }
    std::size_t coordinate_count() const { return candidates_.size(); }
    std::size_t tuple_count() const;

private:
    std::vector<std::vector<Time>> candidates_;
};

/// All trajectories of one automaton template under the delay choices of a
/// DelaySpace, solved from the same initial state, input wave and horizon.
/// Paths are stored in lexicographic tuple order (first coordinate varies
/// slowest).
struct PathSet {
    Automaton base;
    InputWave inputs;
    Time horizon;
    std::vector<std::vector<Time>> tuples;
    std::vector<Trajectory> paths;

    std::size_t size() const { return paths.size(); }
};

/// Solves one trajectory per delay tuple. The delays of `base` are not
/// used; every tuple comes from `space`.
PathSet enumerate_paths(const Automaton& base, const DelaySpace& space,
                        const InputWave& u, const Time& horizon);

enum class PathQuantifier { all, some };

/// A = minimum of the formula's truth over all paths, E = maximum. The
/// formula must be quantifier-free.
Bit quantifier_holds(PathQuantifier q, const FormulaPtr& h, const PathSet& paths,
                     const Time& t);

/// Evaluates a formula that may contain A/E anywhere above the temporal
/// level. Quantifiers (re-)quantify over the whole PathSet; quantifier-free
/// subtrees evaluate on the path currently in scope. Reaching a
/// path-dependent connector with no quantifier in scope is allowed only
/// for a singleton PathSet.
Bit eval_formula(const FormulaPtr& h, const PathSet& paths, const Time& t);

} // namespace asynctl
