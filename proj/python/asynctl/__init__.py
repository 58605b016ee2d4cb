"""Delayed Boolean networks with continuous-time temporal logic.

The heavy lifting lives in the compiled extension; this package simply
re-exports its surface.
"""

from ._asynctl import (  # noqa: F401
    Automaton,
    Bit,
    BooleanFunction,
    CircuitFile,
    DelayKind,
    DelaySpace,
    EvalContext,
    PathQuantifier,
    PathSet,
    Side,
    Signal,
    TemporalFormula,
    Time,
    Trajectory,
    age_of_constancy,
    always_holds,
    check_solution,
    combine,
    default_grid_step,
    dense_oracle,
    enumerate_paths,
    eval_formula,
    event_lattice,
    eventually_holds,
    holds_at,
    ideal_delay,
    inertial_delay,
    is_settled,
    min_pulse_width,
    next_holds,
    parse_circuit,
    parse_formula,
    parse_function,
    parse_trace_csv,
    quantifier_holds,
    satisfied_in,
    serialize_circuit,
    shift,
    solve,
    trace_csv,
    truth_signal,
    until_holds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
