#include <doctest.h>

#include "asynctl/automaton.hpp"
#include "asynctl/logic.hpp"
#include "support/generators.hpp"

using namespace asynctl;
using testgen::Rng;

namespace {

BooleanFunction fn(const std::string& text, const std::vector<std::string>& names) {
    return to_boolean_function(parse_formula(text), names);
}

// n=1 buffer x1' = u1 with one input.
Automaton buffer(DelayKind kind, const Time& tau, Bit x0 = bit0) {
    return Automaton({"x1"}, {"u1"}, {kind}, {fn("u1", {"x1", "u1"})}, {tau}, {x0});
}

// n=1, m=0 ring oscillator x1' = !x1.
Automaton oscillator(const Time& tau) {
    return Automaton({"x1"}, {}, {DelayKind::inertial}, {fn("!x1", {"x1"})}, {tau},
                     {bit0});
}

} // namespace

TEST_CASE("automaton construction validates") {
    CHECK_THROWS_AS(buffer(DelayKind::ideal, Time(0)), ZeroDelay);
    CHECK_THROWS_AS(Automaton({"x1"}, {"u1"}, {DelayKind::ideal},
                              {fn("u1", {"u1"})}, {Time(1)}, {bit0}),
                    ArityMismatch); // generator not over state+input names
    CHECK_THROWS_AS(Automaton({}, {}, {}, {}, {}, {}), ArityMismatch);
}

TEST_CASE("event lattice enumerates nu_k + sum p_i tau_i") {
    InputWave u{Signal::step(Time(2))};
    std::vector<Time> taus{Time(1)};
    CHECK(event_lattice(u, taus, Time(4)) ==
          std::vector<Time>{Time(0), Time(1), Time(2), Time(3), Time(4)});

    std::vector<Time> two{Time(2), Time(3)};
    CHECK(event_lattice({}, two, Time(7)) ==
          std::vector<Time>{Time(0), Time(2), Time(3), Time(4), Time(5), Time(6), Time(7)});

    CHECK(event_lattice({}, taus, Time(0)) == std::vector<Time>{Time(0)});

    std::vector<Time> bad{Time(0)};
    CHECK_THROWS_AS(event_lattice({}, bad, Time(1)), ZeroDelay);
    CHECK_THROWS_AS(event_lattice({}, taus, Time(-1)), BadInterval);
}

TEST_CASE("solve: inertial buffer filters a short pulse") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Trajectory x = solve(buffer(DelayKind::inertial, Time(1)), u, Time(10));
    CHECK(x.states[0] == Signal::constant(bit0));
    CHECK(x.settled);
}

TEST_CASE("solve: ideal buffer translates the pulse") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Trajectory x = solve(buffer(DelayKind::ideal, Time(1)), u, Time(10));
    CHECK(x.states[0] == Signal::pulse(Time(3), Time(7, 2)));
    CHECK(x.settled);
}

TEST_CASE("solve: the autonomous ring oscillator never settles") {
    Trajectory x = solve(oscillator(Time(1)), {}, Time(5));
    CHECK(x.states[0] ==
          Signal::make(bit0, {Time(1), Time(2), Time(3), Time(4), Time(5)}));
    CHECK_FALSE(x.settled);
}

TEST_CASE("solve validates") {
    CHECK_THROWS_AS(solve(oscillator(Time(1)), {Signal::constant(bit0)}, Time(1)),
                    ArityMismatch);
    CHECK_THROWS_AS(solve(oscillator(Time(1)), {}, Time(-1)), BadInterval);
}

TEST_CASE("dense oracle on degenerate dynamics") {
    // constant excitation 0 keeps the state at 0
    Automaton constant({"x1"}, {"u1"}, {DelayKind::inertial},
                       {fn("0 & u1", {"x1", "u1"})}, {Time(1)}, {bit0});
    InputWave u{Signal::pulse(Time(1), Time(2))};
    Trajectory x = dense_oracle(constant, u, Time(6), Time(1, 4));
    CHECK(x.states[0] == Signal::constant(bit0));

    // latch x1' = x1 holds its initial value under any delay
    Automaton latch({"x1"}, {}, {DelayKind::inertial}, {fn("x1", {"x1"})}, {Time(3, 4)},
                    {bit1});
    CHECK(dense_oracle(latch, {}, Time(6), Time(1, 4)).states[0] ==
          Signal::constant(bit1));
}

TEST_CASE("dense oracle agrees with solve on the worked buffer") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Automaton a = buffer(DelayKind::ideal, Time(1));
    Trajectory fast = solve(a, u, Time(10));
    Trajectory slow = dense_oracle(a, u, Time(10), Time(1, 4));
    CHECK(fast.states == slow.states);
    CHECK(fast.settled == slow.settled);
}

TEST_CASE("dense oracle rejects an off-grid step") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Automaton a = buffer(DelayKind::ideal, Time(1));
    CHECK_THROWS_AS(dense_oracle(a, u, Time(10), Time(1, 3)), GridMismatch);
    CHECK_THROWS_AS(dense_oracle(a, u, Time(10), Time(3)), GridMismatch);
}

TEST_CASE("check_solution accepts solutions and flags tampering") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Automaton a = buffer(DelayKind::ideal, Time(1));
    Trajectory x = solve(a, u, Time(10));
    CHECK(check_solution(a, u, x, Time(1, 4)).empty());

    Trajectory broken = x;
    broken.states[0] = Signal::constant(bit0); // delete the [3, 7/2) pulse
    std::vector<Violation> vs = check_solution(a, u, broken, Time(1, 4));
    REQUIRE_FALSE(vs.empty());
    CHECK(vs.front().at == Time(3));
    CHECK(vs.front().coordinate == 0);

    // constant automaton: x identically x0 passes
    Automaton latch({"x1"}, {}, {DelayKind::inertial}, {fn("x1", {"x1"})}, {Time(1)},
                    {bit1});
    Trajectory fixed = solve(latch, {}, Time(4));
    CHECK(check_solution(latch, {}, fixed, Time(1, 2)).empty());
}

TEST_CASE("age_of_constancy measures the window back from t") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Automaton a = buffer(DelayKind::ideal, Time(1));
    Trajectory x = solve(a, u, Time(10));

    // e = u: toggles at 2 and 5/2
    CHECK(age_of_constancy(a, x, 0, Time(5, 2)) == Time(1, 2));
    CHECK(age_of_constancy(a, x, 0, Time(2)) == Time(2));
    CHECK(age_of_constancy(a, x, 0, Time(10)) == Time(15, 2));

    CHECK_THROWS_AS(age_of_constancy(a, x, 1, Time(1)), IndexOutOfRange);
    CHECK_THROWS_AS(age_of_constancy(a, x, 0, Time(11)), BadInterval);
    CHECK_THROWS_AS(age_of_constancy(a, x, 0, Time(-1)), BadInterval);
}

TEST_CASE("is_settled recomputes the trajectory flag") {
    InputWave u{Signal::pulse(Time(2), Time(5, 2))};
    Trajectory filtered = solve(buffer(DelayKind::inertial, Time(1)), u, Time(10));
    CHECK(is_settled(buffer(DelayKind::inertial, Time(1)), filtered));

    Trajectory osc = solve(oscillator(Time(1)), {}, Time(5));
    CHECK_FALSE(is_settled(oscillator(Time(1)), osc));

    Automaton latch({"x1"}, {}, {DelayKind::inertial}, {fn("x1", {"x1"})}, {Time(1)},
                    {bit1});
    CHECK(is_settled(latch, solve(latch, {}, Time(2))));
}

TEST_CASE("solve is deterministic, lattice-supported and oracle-exact") {
    Rng rng(1234);
    for (int i = 0; i < 40; ++i) {
        auto [a, u] = testgen::random_network(rng);
        Time horizon(12);

        Trajectory x1 = solve(a, u, horizon);
        Trajectory x2 = solve(a, u, horizon);
        CHECK(x1 == x2);

        std::vector<Time> lattice = event_lattice(u, a.delays(), horizon);
        for (std::size_t i2 = 0; i2 < x1.states.size(); ++i2) {
            for (const Time& t : x1.states[i2].toggles()) {
                bool in_lattice = false;
                for (const Time& l : lattice)
                    in_lattice = in_lattice || l == t;
                CHECK(in_lattice);
            }
            if (a.kinds()[i2] == DelayKind::inertial) {
                const auto& tg = x1.states[i2].toggles();
                if (!tg.empty())
                    CHECK(!(tg.front() < a.delays()[i2]));
                if (auto w = min_pulse_width(x1.states[i2]))
                    CHECK(!(*w < a.delays()[i2]));
            }
        }

        Time step = default_grid_step(a, u, horizon);
        Trajectory y = dense_oracle(a, u, horizon, step);
        CHECK(x1.states == y.states);
        CHECK(check_solution(a, u, x1, step).empty());
    }
}

TEST_CASE("ideal-only automata compose from standalone ideal delays") {
    Rng rng(77);
    for (int i = 0; i < 30; ++i) {
        auto [base, u] = testgen::random_network(rng);
        std::vector<DelayKind> kinds(base.state_count(), DelayKind::ideal);
        Automaton a(base.state_names(), base.input_names(), kinds, base.generator(),
                    base.delays(), base.initial());
        Time horizon(12);
        Trajectory x = solve(a, u, horizon);

        std::vector<Signal> all = x.states;
        all.insert(all.end(), u.begin(), u.end());
        for (std::size_t c = 0; c < a.state_count(); ++c) {
            Signal via_delay = ideal_delay(a.generator()[c], all, DelayParam(a.delays()[c]));
            // the two agree from tau on; before tau the coordinate holds x0
            for (const Time& t : testgen::piece_samples(all)) {
                if (horizon < t)
                    continue;
                if (t < a.delays()[c])
                    CHECK(x.states[c].value_at(t) == a.initial()[c]);
                else
                    CHECK(x.states[c].value_at(t) == via_delay.value_at(t));
            }
        }
    }
}

TEST_CASE("settled trajectories extend without change") {
    Rng rng(88);
    int used = 0;
    for (int i = 0; i < 200 && used < 25; ++i) {
        auto [a, u] = testgen::random_network(rng);
        Trajectory x = solve(a, u, Time(12));
        if (!x.settled)
            continue;
        ++used;
        Trajectory longer = solve(a, u, Time(20));
        CHECK(longer.settled);
        CHECK(longer.states == x.states);
        CHECK(longer.horizon == Time(20));
    }
    CHECK(used > 0);
}

TEST_CASE("perturbing the initial state changes the outcome (spot check)") {
    // the latch remembers its initial value forever
    Automaton latch({"x1"}, {}, {DelayKind::inertial},
                    {to_boolean_function(parse_formula("x1"), {"x1"})}, {Time(1)},
                    {bit0});
    Automaton latch1({"x1"}, {}, {DelayKind::inertial},
                     {to_boolean_function(parse_formula("x1"), {"x1"})}, {Time(1)},
                     {bit1});
    CHECK(solve(latch, {}, Time(5)).states[0] == Signal::constant(bit0));
    CHECK(solve(latch1, {}, Time(5)).states[0] == Signal::constant(bit1));
}
