#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "asynctl/boolean_function.hpp"
#include "asynctl/delay.hpp"
#include "asynctl/signal.hpp"

namespace asynctl {

/// One signal per input, in declaration order.
using InputWave = std::vector<Signal>;

/// A network of delayed Boolean coordinates: coordinate i follows its
/// excitation f_i(states, inputs) through an ideal or inertial delay of
/// tau_i, starting from the given initial state.
class Automaton {
public:
    Automaton(std::vector<std::string> state_names,
              std::vector<std::string> input_names,
              std::vector<DelayKind> kinds,
              std::vector<BooleanFunction> generator,
              std::vector<Time> delays,
              std::vector<Bit> initial);

    /// Convenience for the classic layout where the first `ideal_count`
    /// coordinates are ideal and the rest inertial.
    static Automaton with_ideal_prefix(std::vector<std::string> state_names,
                                       std::vector<std::string> input_names,
                                       std::size_t ideal_count,
                                       std::vector<BooleanFunction> generator,
                                       std::vector<Time> delays,
                                       std::vector<Bit> initial);

    std::size_t state_count() const { return state_names_.size(); }
    std::size_t input_count() const { return input_names_.size(); }

    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::vector<std::string>& input_names() const { return input_names_; }
    const std::vector<DelayKind>& kinds() const { return kinds_; }
    const std::vector<BooleanFunction>& generator() const { return generator_; }
    const std::vector<Time>& delays() const { return delays_; }
    const std::vector<Bit>& initial() const { return initial_; }

    Time max_delay() const;

    bool operator==(const Automaton& o) const;

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> input_names_;
    std::vector<DelayKind> kinds_;
    std::vector<BooleanFunction> generator_;
    std::vector<Time> delays_;
    std::vector<Bit> initial_;
};

/// A solved state vector over [0, horizon]. `settled` certifies that every
/// signal is constant for at least the largest delay before the horizon and
/// that each tail excitation equals the tail state, so the trajectory
/// extends constantly to infinity.
struct Trajectory {
    Time horizon;
    std::vector<std::string> state_names;
    std::vector<Signal> states;
    std::vector<std::string> input_names;
    InputWave inputs;
    bool settled = false;

    bool operator==(const Trajectory&) const = default;
};

/// All instants nu_k + p1*tau_1 + ... + pn*tau_n in [0, horizon] with
/// natural coefficients, where the nu_k are 0 and the input switch
/// instants. Sorted, duplicate-free, always contains 0. These are the only
/// instants where a solution may switch.
std::vector<Time> event_lattice(const InputWave& inputs,
                                std::span<const Time> delays,
                                const Time& horizon);

/// The unique trajectory on [0, horizon]: each coordinate holds its initial
/// value on [0, tau_i); at a lattice instant t >= tau_i an ideal coordinate
/// takes f_i(x(t - tau_i), u(t - tau_i)) and an inertial coordinate adopts
/// its excitation only when that excitation is constant on [t - tau_i, t),
/// holding otherwise. Simultaneous switches are applied synchronously from
/// the pre-instant history.
Trajectory solve(const Automaton& a, const InputWave& u, const Time& horizon);

/// Brute-force reference: the same per-coordinate rules evaluated by causal
/// recursion over every grid instant, using only grid-sampled history. The
/// step must exactly divide every delay, every input toggle and the
/// horizon (GridMismatch otherwise).
Trajectory dense_oracle(const Automaton& a, const InputWave& u,
                        const Time& horizon, const Time& step);

struct Violation {
    Time at;
    std::size_t coordinate;

    bool operator==(const Violation&) const = default;
};

/// Replays the delay equations over the grid against a given trajectory and
/// returns every grid instant where they fail (empty means the trajectory
/// is a solution on the grid). Ideal coordinates must equal the masked
/// delayed excitation; inertial coordinates must switch exactly when the
/// window rule fires.
std::vector<Violation> check_solution(const Automaton& a, const InputWave& u,
                                      const Trajectory& x, const Time& step);

/// The excitation signal e_i(t) = f_i(x(t), u(t)) of one coordinate.
Signal excitation(const Automaton& a, const Trajectory& x, std::size_t coordinate);

/// How long, looking into the past from t, the excitation of the given
/// coordinate has been constant: the largest d <= t with e_i constant on
/// (t - d, t); equals t when e_i has not switched inside (0, t).
Time age_of_constancy(const Automaton& a, const Trajectory& x,
                      std::size_t coordinate, const Time& t);

/// Recomputes the settledness conditions for a trajectory of `a`.
bool is_settled(const Automaton& a, const Trajectory& x);

/// 1 / (2 * lcm of the denominators of all delays, input toggles and the
/// horizon): a grid that samples strictly inside every lattice piece.
Time default_grid_step(const Automaton& a, const InputWave& u, const Time& horizon);

} // namespace asynctl
