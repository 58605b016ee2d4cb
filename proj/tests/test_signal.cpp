#include <doctest.h>

#include "asynctl/boolean_function.hpp"
#include "asynctl/signal.hpp"
#include "support/generators.hpp"

using namespace asynctl;
using testgen::Rng;

namespace {

Signal pulse12() { return Signal::pulse(Time(1), Time(2)); }

} // namespace

TEST_CASE("make validates and canonicalizes") {
    Signal p = Signal::make(bit0, {Time(1), Time(2)});
    CHECK(p == pulse12());

    CHECK(Signal::make(bit1, {}) == Signal::constant(bit1));
    CHECK_THROWS_AS(Signal::make(bit0, {Time(2), Time(1)}), NonMonotonicToggles);
    CHECK_THROWS_AS(Signal::make(bit0, {Time(1), Time(1)}), NonMonotonicToggles);
    CHECK_THROWS_AS(Signal::make(bit0, {Time(-1)}), NegativeTime);

    // a switch at the origin is the flipped initial value
    Signal folded = Signal::make(bit0, {Time(0), Time(2)});
    CHECK(folded.initial() == bit1);
    CHECK(folded.toggles() == std::vector<Time>{Time(2)});
}

TEST_CASE("make is idempotent on canonical fields") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        Signal s = testgen::random_signal(rng, 6, 10, 8);
        CHECK(Signal::make(s.initial(), s.toggles()) == s);
    }
}

TEST_CASE("value_at follows the half-open pieces") {
    Signal p = pulse12();
    CHECK(p.value_at(Time(1)) == bit1);  // left-closed
    CHECK(p.value_at(Time(2)) == bit0);  // right-open
    CHECK(p.value_at(Time(-5)) == bit0); // zero before the origin
    CHECK(p.value_at(Time(3, 2)) == bit1);
    CHECK(p.value_at(Time(0)) == bit0);
}

TEST_CASE("one-sided limits") {
    Signal p = pulse12();
    CHECK(p.limit(Time(1), Side::left) == bit0);
    CHECK(p.limit(Time(1), Side::right) == bit1);
    CHECK(Signal::constant(bit1).limit(Time(7), Side::left) == bit1);
    // left limit at or below 0 sees the zero region
    CHECK(Signal::constant(bit1).limit(Time(0), Side::left) == bit0);
    CHECK(Signal::constant(bit1).limit(Time(-3), Side::left) == bit0);
}

TEST_CASE("right-continuity: value equals right limit everywhere") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Signal s = testgen::random_signal(rng, 5, 8, 8);
        for (const Time& t : testgen::piece_samples(std::span(&s, 1)))
            CHECK(s.value_at(t) == s.limit(t, Side::right));
    }
}

TEST_CASE("left derivative marks switches, right derivative vanishes") {
    Signal p = pulse12();
    CHECK(p.derivative(Time(1), Side::left) == bit1);
    CHECK(p.derivative(Time(3, 2), Side::left) == bit0);

    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        Signal s = testgen::random_signal(rng, 5, 8, 8);
        for (const Time& t : testgen::piece_samples(std::span(&s, 1))) {
            CHECK(s.derivative(t, Side::right) == bit0);
            bool is_switch = false;
            for (const Time& g : s.toggles())
                is_switch = is_switch || g == t;
            if (t.is_zero() && s.initial() == bit1)
                is_switch = true;
            CHECK(s.derivative(t, Side::left) == Bit(is_switch));
        }
    }
}

TEST_CASE("combine matches the pointwise oracle on frozen examples") {
    std::vector<std::string> ab{"a", "b"};
    BooleanFunction fxor(ab, BooleanFunction::apply(BooleanFunction::Op::Xor,
                                                    BooleanFunction::var(0),
                                                    BooleanFunction::var(1)));
    std::vector<Signal> args{Signal::pulse(Time(1), Time(3)),
                             Signal::pulse(Time(2), Time(4))};
    Signal got = combine(fxor, args);
    // oracle (midpoint sampling over all pieces) gives 1 on [1,2) and [3,4)
    CHECK(got == Signal::make(bit0, {Time(1), Time(2), Time(3), Time(4)}));

    BooleanFunction fand(ab, BooleanFunction::apply(BooleanFunction::Op::And,
                                                    BooleanFunction::var(0),
                                                    BooleanFunction::var(1)));
    std::vector<Signal> with_zero{pulse12(), Signal::constant(bit0)};
    CHECK(combine(fand, with_zero) == Signal::constant(bit0));

    BooleanFunction fnot({"a"}, BooleanFunction::negate(BooleanFunction::var(0)));
    std::vector<Signal> one{pulse12()};
    CHECK(combine(fnot, one) == Signal::make(bit1, {Time(1), Time(2)}));

    std::vector<Signal> three{pulse12(), pulse12(), pulse12()};
    CHECK_THROWS_AS(combine(fxor, three), ArityMismatch);
}

TEST_CASE("combine is pointwise correct and closed on random instances") {
    Rng rng(99);
    for (int i = 0; i < 150; ++i) {
        std::size_t arity = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<std::string> names;
        for (std::size_t k = 0; k < arity; ++k)
            names.push_back("v" + std::to_string(k));
        BooleanFunction f = testgen::random_function(rng, names, 3);
        std::vector<Signal> args;
        for (std::size_t k = 0; k < arity; ++k)
            args.push_back(testgen::random_signal(rng, 4, 6, 8));

        Signal r = combine(f, args);
        // canonical output revalidates
        CHECK(Signal::make(r.initial(), r.toggles()) == r);
        CHECK(r.value_at(Time(-1)) == bit0);

        // result switches only where some argument switches
        for (const Time& t : r.toggles()) {
            bool from_args = false;
            for (const Signal& s : args)
                for (const Time& g : s.toggles())
                    from_args = from_args || g == t;
            CHECK(from_args);
        }

        std::vector<Bit> vals(arity);
        for (const Time& t : testgen::piece_samples(args)) {
            for (std::size_t k = 0; k < arity; ++k)
                vals[k] = args[k].value_at(t);
            CHECK(r.value_at(t) == f.evaluate(vals));
        }
    }
}

TEST_CASE("shift translates and masks") {
    CHECK(shift(pulse12(), Time(3, 2)) == Signal::pulse(Time(5, 2), Time(7, 2)));
    CHECK(shift(Signal::constant(bit1), Time(2)) == Signal::step(Time(2)));
    CHECK(shift(pulse12(), Time(0)) == pulse12());
    CHECK_THROWS_AS(shift(pulse12(), Time(-1)), NegativeTime);
}

TEST_CASE("shifts compose additively") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        Signal s = testgen::random_signal(rng, 5, 6, 8);
        Time a = testgen::rational(rng, 3, 8);
        Time b = testgen::rational(rng, 3, 8);
        CHECK(shift(shift(s, a), b) == shift(s, a + b));
    }
}

TEST_CASE("toggles_in uses the half-open window") {
    Signal p = pulse12();
    CHECK(p.toggles_in(Time(0), Time(3)) == std::vector<Time>{Time(1), Time(2)});
    CHECK(p.toggles_in(Time(1), Time(2)) == std::vector<Time>{Time(1)});
    CHECK(p.toggles_in(Time(3, 2), Time(19, 10)).empty());
    CHECK(p.toggles_in(Time(1), Time(1)).empty());
    CHECK_THROWS_AS(p.toggles_in(Time(2), Time(1)), BadInterval);
}

TEST_CASE("constant_on detects interior switches only") {
    Signal p = pulse12();
    CHECK(p.constant_on(Time(1), Time(2)) == bit1);
    CHECK(p.constant_on(Time(0), Time(2)) == std::nullopt);
    CHECK(Signal::constant(bit0).constant_on(Time(5), Time(9)) == bit0);
    // switch exactly at the left end does not break constancy on [a, b)
    CHECK(p.constant_on(Time(1), Time(3, 2)) == bit1);
    CHECK_THROWS_AS(p.constant_on(Time(1), Time(1)), BadInterval);
    CHECK_THROWS_AS(p.constant_on(Time(2), Time(1)), BadInterval);
}

TEST_CASE("tail_value") {
    CHECK(pulse12().tail_value() == bit0);
    CHECK(Signal::step(Time(3)).tail_value() == bit1);
    CHECK(Signal::constant(bit1).tail_value() == bit1);
}
