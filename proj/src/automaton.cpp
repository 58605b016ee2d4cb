#include "asynctl/automaton.hpp"

#include <algorithm>
#include <set>

namespace asynctl {

namespace {

void check_input_count(const Automaton& a, const InputWave& u) {
    if (u.size() != a.input_count())
        throw ArityMismatch("automaton declares " + std::to_string(a.input_count()) +
                            " inputs, wave has " + std::to_string(u.size()));
}

void check_horizon(const Time& horizon) {
    if (horizon.is_negative())
        throw BadInterval("horizon must be nonnegative, got " + horizon.str());
}

// Integer count of grid cells; throws unless the span divides exactly.
std::size_t grid_index(const Time& t, const Time& step, const char* what) {
    if (!t.is_multiple_of(step))
        throw GridMismatch(std::string(what) + " " + t.str() +
                           " is not a multiple of the grid step " + step.str());
    Time q = t / step;
    return static_cast<std::size_t>(q.numerator().convert_to<unsigned long long>());
}

void check_grid(const Automaton& a, const InputWave& u, const Time& horizon,
                const Time& step) {
    if (!step.is_positive())
        throw GridMismatch("grid step must be positive, got " + step.str());
    grid_index(horizon, step, "horizon");
    for (const Time& tau : a.delays())
        grid_index(tau, step, "delay");
    for (const Signal& s : u)
        for (const Time& t : s.toggles())
            grid_index(t, step, "input toggle");
}

// Latest switch instant across all signals of a trajectory, 0 if none.
Time last_toggle_anywhere(const Trajectory& x) {
    Time last(0);
    for (const Signal& s : x.states)
        if (!s.toggles().empty())
            last = max(last, s.toggles().back());
    for (const Signal& s : x.inputs)
        if (!s.toggles().empty())
            last = max(last, s.toggles().back());
    return last;
}

Trajectory make_trajectory(const Automaton& a, const InputWave& u,
                           const Time& horizon, std::vector<Signal> states) {
    Trajectory x{horizon, a.state_names(), std::move(states), a.input_names(), u,
                 false};
    x.settled = is_settled(a, x);
    return x;
}

// Values of all states then all inputs at one instant.
struct Sampler {
    const Automaton& a;
    const InputWave& u;
    const std::vector<std::vector<Time>>& toggles; // per-state, ascending, so far

    std::vector<Bit> at(const Time& t) const {
        std::vector<Bit> v(a.state_count() + a.input_count());
        for (std::size_t i = 0; i < a.state_count(); ++i) {
            const auto& tg = toggles[i];
            auto it = std::upper_bound(tg.begin(), tg.end(), t);
            std::size_t flips = static_cast<std::size_t>(it - tg.begin());
            v[i] = (flips % 2 == 0) ? a.initial()[i] : ~a.initial()[i];
        }
        for (std::size_t j = 0; j < u.size(); ++j)
            v[a.state_count() + j] = u[j].value_at(t);
        return v;
    }
};

} // namespace

Automaton::Automaton(std::vector<std::string> state_names,
                     std::vector<std::string> input_names,
                     std::vector<DelayKind> kinds,
                     std::vector<BooleanFunction> generator,
                     std::vector<Time> delays,
                     std::vector<Bit> initial)
    : state_names_(std::move(state_names)),
      input_names_(std::move(input_names)),
      kinds_(std::move(kinds)),
      generator_(std::move(generator)),
      delays_(std::move(delays)),
      initial_(std::move(initial)) {
    std::size_t n = state_names_.size();
    if (n == 0)
        throw ArityMismatch("an automaton needs at least one coordinate");
    if (kinds_.size() != n || generator_.size() != n || delays_.size() != n ||
        initial_.size() != n)
        throw ArityMismatch("coordinate lists have inconsistent lengths");
    for (const Time& tau : delays_)
        if (!tau.is_positive())
            throw ZeroDelay("delay must be positive, got " + tau.str());
    std::vector<std::string> expected = state_names_;
    expected.insert(expected.end(), input_names_.begin(), input_names_.end());
    for (const BooleanFunction& f : generator_) {
        if (f.arity() != expected.size() || f.variables() != expected)
            throw ArityMismatch(
                "generator functions must range over the state names then the "
                "input names");
    }
}

Automaton Automaton::with_ideal_prefix(std::vector<std::string> state_names,
                                       std::vector<std::string> input_names,
                                       std::size_t ideal_count,
                                       std::vector<BooleanFunction> generator,
                                       std::vector<Time> delays,
                                       std::vector<Bit> initial) {
    if (ideal_count > state_names.size())
        throw IndexOutOfRange("ideal prefix longer than the coordinate list");
    std::vector<DelayKind> kinds(state_names.size(), DelayKind::inertial);
    std::fill(kinds.begin(), kinds.begin() + static_cast<std::ptrdiff_t>(ideal_count),
              DelayKind::ideal);
    return Automaton(std::move(state_names), std::move(input_names), std::move(kinds),
                     std::move(generator), std::move(delays), std::move(initial));
}

Time Automaton::max_delay() const {
    Time m = delays_.front();
    for (const Time& tau : delays_)
        m = max(m, tau);
    return m;
}

bool Automaton::operator==(const Automaton& o) const {
    auto bodies_equal = [](const BooleanFunction& a, const BooleanFunction& b) {
        return a.variables() == b.variables() && a.str() == b.str();
    };
    if (state_names_ != o.state_names_ || input_names_ != o.input_names_ ||
        kinds_ != o.kinds_ || delays_ != o.delays_ || initial_ != o.initial_ ||
        generator_.size() != o.generator_.size())
        return false;
    for (std::size_t i = 0; i < generator_.size(); ++i)
        if (!bodies_equal(generator_[i], o.generator_[i]))
            return false;
    return true;
}

std::vector<Time> event_lattice(const InputWave& inputs,
                                std::span<const Time> delays,
                                const Time& horizon) {
    for (const Time& tau : delays)
        if (!tau.is_positive())
            throw ZeroDelay("delay must be positive, got " + tau.str());
    check_horizon(horizon);

    std::set<Time> seen;
    std::vector<Time> pending;
    auto push = [&](const Time& t) {
        if (!(horizon < t) && seen.insert(t).second)
            pending.push_back(t);
    };
    push(Time(0));
    for (const Signal& s : inputs)
        for (const Time& t : s.toggles())
            push(t);
    while (!pending.empty()) {
        Time t = std::move(pending.back());
        pending.pop_back();
        for (const Time& tau : delays)
            push(t + tau);
    }
    return std::vector<Time>(seen.begin(), seen.end());
}

Trajectory solve(const Automaton& a, const InputWave& u, const Time& horizon) {
    check_input_count(a, u);
    check_horizon(horizon);

    std::vector<Time> lattice = event_lattice(u, a.delays(), horizon);
    std::size_t n = a.state_count();

    std::vector<std::vector<Time>> toggles(n);
    std::vector<Bit> current(a.initial().begin(), a.initial().end());
    Sampler history{a, u, toggles};

    for (const Time& t : lattice) {
        if (t.is_zero())
            continue;
        // Decide every coordinate from the pre-instant history, then apply
        // all switches at once.
        std::vector<Bit> next = current;
        for (std::size_t i = 0; i < n; ++i) {
            const Time& tau = a.delays()[i];
            if (t < tau)
                continue;
            if (a.kinds()[i] == DelayKind::ideal) {
                next[i] = a.generator()[i].evaluate(history.at(t - tau));
                continue;
            }
            // Inertial: the excitation switches only at lattice instants,
            // so constancy on [t - tau, t) is decided by its value at the
            // window's left end and at every lattice instant inside.
            Time left = t - tau;
            Bit e0 = a.generator()[i].evaluate(history.at(left));
            bool constant = true;
            auto it = std::upper_bound(lattice.begin(), lattice.end(), left);
            for (; it != lattice.end() && *it < t; ++it) {
                if (a.generator()[i].evaluate(history.at(*it)) != e0) {
                    constant = false;
                    break;
                }
            }
            if (constant)
                next[i] = e0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (next[i] != current[i]) {
                toggles[i].push_back(t);
                current[i] = next[i];
            }
        }
    }

    std::vector<Signal> states;
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        states.push_back(Signal::make(a.initial()[i], std::move(toggles[i])));
    return make_trajectory(a, u, horizon, std::move(states));
}

Trajectory dense_oracle(const Automaton& a, const InputWave& u,
                        const Time& horizon, const Time& step) {
    check_input_count(a, u);
    check_horizon(horizon);
    check_grid(a, u, horizon, step);

    std::size_t n = a.state_count();
    std::size_t m = a.input_count();
    std::size_t cells = grid_index(horizon, step, "horizon");

    std::vector<std::size_t> tau_cells(n);
    for (std::size_t i = 0; i < n; ++i)
        tau_cells[i] = grid_index(a.delays()[i], step, "delay");

    // in[j][k], x[i][k], e[i][k]: values at grid instant k*step.
    std::vector<std::vector<Bit>> in(m), x(n), e(n);
    for (std::size_t j = 0; j < m; ++j) {
        in[j].resize(cells + 1);
        for (std::size_t k = 0; k <= cells; ++k)
            in[j][k] = u[j].value_at(Time(static_cast<long long>(k)) * step);
    }
    for (std::size_t i = 0; i < n; ++i) {
        x[i].resize(cells + 1);
        e[i].resize(cells + 1);
        x[i][0] = a.initial()[i];
    }
    std::vector<Bit> args(n + m);
    auto excite = [&](std::size_t i, std::size_t k) {
        for (std::size_t s = 0; s < n; ++s)
            args[s] = x[s][k];
        for (std::size_t j = 0; j < m; ++j)
            args[n + j] = in[j][k];
        return a.generator()[i].evaluate(args);
    };
    for (std::size_t i = 0; i < n; ++i)
        e[i][0] = excite(i, 0);

    for (std::size_t k = 1; k <= cells; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t w = tau_cells[i];
            if (k < w) {
                x[i][k] = a.initial()[i];
            } else if (a.kinds()[i] == DelayKind::ideal) {
                x[i][k] = e[i][k - w];
            } else {
                Bit e0 = e[i][k - w];
                bool constant = true;
                for (std::size_t q = k - w + 1; q < k; ++q) {
                    if (e[i][q] != e0) {
                        constant = false;
                        break;
                    }
                }
                x[i][k] = constant ? e0 : x[i][k - 1];
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            e[i][k] = excite(i, k);
    }

    std::vector<Signal> states;
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Time> tg;
        for (std::size_t k = 1; k <= cells; ++k)
            if (x[i][k] != x[i][k - 1])
                tg.push_back(Time(static_cast<long long>(k)) * step);
        states.push_back(Signal::make(a.initial()[i], std::move(tg)));
    }
    return make_trajectory(a, u, horizon, std::move(states));
}

std::vector<Violation> check_solution(const Automaton& a, const InputWave& u,
                                      const Trajectory& x, const Time& step) {
    check_input_count(a, u);
    check_grid(a, u, x.horizon, step);
    std::size_t n = a.state_count();
    std::size_t m = a.input_count();
    if (x.states.size() != n)
        throw ArityMismatch("trajectory has the wrong number of state signals");
    for (const Signal& s : x.states)
        for (const Time& t : s.toggles())
            grid_index(t, step, "state toggle");

    std::size_t cells = grid_index(x.horizon, step, "horizon");
    std::vector<std::vector<Bit>> xs(n), in(m), e(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i].resize(cells + 1);
        for (std::size_t k = 0; k <= cells; ++k)
            xs[i][k] = x.states[i].value_at(Time(static_cast<long long>(k)) * step);
    }
    for (std::size_t j = 0; j < m; ++j) {
        in[j].resize(cells + 1);
        for (std::size_t k = 0; k <= cells; ++k)
            in[j][k] = u[j].value_at(Time(static_cast<long long>(k)) * step);
    }
    std::vector<Bit> args(n + m);
    for (std::size_t i = 0; i < n; ++i) {
        e[i].resize(cells + 1);
        for (std::size_t k = 0; k <= cells; ++k) {
            for (std::size_t s = 0; s < n; ++s)
                args[s] = xs[s][k];
            for (std::size_t j = 0; j < m; ++j)
                args[n + j] = in[j][k];
            e[i][k] = a.generator()[i].evaluate(args);
        }
    }

    std::vector<Violation> out;
    auto flag = [&](std::size_t k, std::size_t i) {
        out.push_back({Time(static_cast<long long>(k)) * step, i});
    };
    std::vector<std::size_t> tau_cells(n);
    for (std::size_t i = 0; i < n; ++i)
        tau_cells[i] = grid_index(a.delays()[i], step, "delay");

    for (std::size_t i = 0; i < n; ++i) {
        if (xs[i][0] != a.initial()[i])
            flag(0, i);
        for (std::size_t k = 1; k <= cells; ++k) {
            std::size_t w = tau_cells[i];
            if (a.kinds()[i] == DelayKind::ideal) {
                Bit expect = k < w ? a.initial()[i] : e[i][k - w];
                if (xs[i][k] != expect)
                    flag(k, i);
                continue;
            }
            bool toggled = xs[i][k] != xs[i][k - 1];
            bool fires = false;
            if (k >= w) {
                Bit e0 = e[i][k - w];
                bool constant = true;
                for (std::size_t q = k - w + 1; q < k; ++q)
                    if (e[i][q] != e0) {
                        constant = false;
                        break;
                    }
                fires = constant && xs[i][k - 1] != e0;
            }
            if (toggled != fires)
                flag(k, i);
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& l, const Violation& r) {
        return l.at < r.at || (l.at == r.at && l.coordinate < r.coordinate);
    });
    return out;
}

Signal excitation(const Automaton& a, const Trajectory& x, std::size_t coordinate) {
    if (coordinate >= a.state_count())
        throw IndexOutOfRange("coordinate index out of range");
    std::vector<Signal> args = x.states;
    args.insert(args.end(), x.inputs.begin(), x.inputs.end());
    return combine(a.generator()[coordinate], args);
}

Time age_of_constancy(const Automaton& a, const Trajectory& x,
                      std::size_t coordinate, const Time& t) {
    if (coordinate >= a.state_count())
        throw IndexOutOfRange("coordinate index out of range");
    if (t.is_negative() || x.horizon < t)
        throw BadInterval("instant " + t.str() + " outside [0, horizon]");
    Signal e = excitation(a, x, coordinate);
    // Last switch strictly before t bounds the constancy window (t - d, t).
    const auto& tg = e.toggles();
    auto it = std::lower_bound(tg.begin(), tg.end(), t);
    if (it == tg.begin())
        return t;
    return t - *std::prev(it);
}

bool is_settled(const Automaton& a, const Trajectory& x) {
    Time last = last_toggle_anywhere(x);
    if (x.horizon < last + a.max_delay())
        return false;
    std::vector<Bit> tails(a.state_count() + a.input_count());
    for (std::size_t i = 0; i < x.states.size(); ++i)
        tails[i] = x.states[i].tail_value();
    for (std::size_t j = 0; j < x.inputs.size(); ++j)
        tails[x.states.size() + j] = x.inputs[j].tail_value();
    for (std::size_t i = 0; i < a.state_count(); ++i)
        if (a.generator()[i].evaluate(tails) != x.states[i].tail_value())
            return false;
    return true;
}

Time default_grid_step(const Automaton& a, const InputWave& u, const Time& horizon) {
    BigInt l = 1;
    auto fold = [&](const Time& t) { l = boost::multiprecision::lcm(l, t.denominator()); };
    for (const Time& tau : a.delays())
        fold(tau);
    for (const Signal& s : u)
        for (const Time& t : s.toggles())
            fold(t);
    fold(horizon);
    return Time(BigRational(BigInt(1), 2 * l));
}

} // namespace asynctl
