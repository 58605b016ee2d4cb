#include <doctest.h>

#include "asynctl/logic.hpp"
#include "support/generators.hpp"

using namespace asynctl;
using Kind = TemporalFormula::Kind;
using testgen::Rng;

namespace {

// one-state settled trajectory
Trajectory traj1(Signal x1) {
    Trajectory x;
    x.horizon = Time(100);
    x.state_names = {"x1"};
    x.states = {std::move(x1)};
    x.settled = true;
    return x;
}

} // namespace

TEST_CASE("parser builds the expected trees") {
    FormulaPtr f = parse_formula("F (x1 & !x2)");
    REQUIRE(f->kind() == Kind::Eventually);
    REQUIRE(f->lhs()->kind() == Kind::And);
    CHECK(f->lhs()->lhs()->kind() == Kind::Atom);
    CHECK(f->lhs()->rhs()->kind() == Kind::Not);
    CHECK(f->str() == "F (x1 & !x2)");

    FormulaPtr u = parse_formula("x1 U (x2 ^ x3)");
    REQUIRE(u->kind() == Kind::Until);
    CHECK(u->lhs()->kind() == Kind::Atom);
    CHECK(u->rhs()->kind() == Kind::Xor);

    CHECK_THROWS_AS(parse_formula("x1 U"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    CHECK_THROWS_AS(parse_formula("x1 &"), ParseError);
    CHECK_THROWS_AS(parse_formula("(x1"), ParseError);
    CHECK_THROWS_AS(parse_formula("x1 x2"), ParseError);
    CHECK_THROWS_AS(parse_formula("2"), ParseError);
    CHECK_THROWS_AS(parse_formula("X x1"), ParseError);
}

TEST_CASE("grammar precedence and associativity") {
    // & binds tighter than |, | tighter than U, U tighter than ->
    CHECK(parse_formula("a | b & c")->str() == "a | b & c");
    CHECK(parse_formula("(a | b) & c")->str() == "(a | b) & c");

    FormulaPtr u = parse_formula("a | b U c");
    REQUIRE(u->kind() == Kind::Until);
    CHECK(u->lhs()->kind() == Kind::Or);

    FormulaPtr imp = parse_formula("a U b -> c");
    REQUIRE(imp->kind() == Kind::Implies);
    CHECK(imp->lhs()->kind() == Kind::Until);

    // right associativity
    FormulaPtr uu = parse_formula("a U b U c");
    REQUIRE(uu->kind() == Kind::Until);
    CHECK(uu->rhs()->kind() == Kind::Until);
    FormulaPtr ii = parse_formula("a -> b -> c");
    REQUIRE(ii->kind() == Kind::Implies);
    CHECK(ii->rhs()->kind() == Kind::Implies);

    // X- is not an implication arrow
    FormulaPtr xl = parse_formula("X-a");
    CHECK(xl->kind() == Kind::NextLeft);
    FormulaPtr xr = parse_formula("X+a");
    CHECK(xr->kind() == Kind::NextRight);

    // prefix operators chain
    FormulaPtr fg = parse_formula("F G !x1");
    REQUIRE(fg->kind() == Kind::Eventually);
    REQUIRE(fg->lhs()->kind() == Kind::Always);
    CHECK(fg->lhs()->lhs()->kind() == Kind::Not);
}

TEST_CASE("parsing with a declared name list") {
    std::vector<std::string> names{"x1", "x2"};
    CHECK(parse_formula("x1 & x2", names)->str() == "x1 & x2");
    CHECK_THROWS_AS(parse_formula("x1 & y", names), UnknownIdentifier);
}

TEST_CASE("rendering stabilizes after one reparse and keeps the meaning") {
    Rng rng(11);
    std::vector<std::string> names{"x1", "x2", "x3"};
    for (int i = 0; i < 200; ++i) {
        FormulaPtr f = testgen::random_formula(rng, names, 4,
                                               {true, true, true});
        // function-valued atoms pick up safety parentheses on the first
        // render; from then on text and tree are in lockstep
        FormulaPtr g = parse_formula(f->str());
        CHECK(parse_formula(g->str())->str() == g->str());

        if (!f->has_quantifier()) {
            Trajectory x = testgen::random_trajectory(rng, 3, 3);
            EvalContext ctx(x);
            for (int k = 0; k < 4; ++k) {
                Time t = testgen::rational(rng, 8, 8);
                CHECK(holds_at(f, ctx, t) == holds_at(g, ctx, t));
            }
        }
    }
}

TEST_CASE("holds_at on atoms and connectives") {
    Trajectory x = traj1(Signal::pulse(Time(1), Time(2)));
    EvalContext ctx(x);
    CHECK(holds_at(TemporalFormula::atom_var("x1"), ctx, Time(3, 2)) == bit1);
    CHECK(holds_at(parse_formula("!x1"), ctx, Time(3, 2)) == bit0);
    CHECK(holds_at(parse_formula("x1 -> x1"), ctx, Time(0)) == bit1);
    CHECK_THROWS_AS(holds_at(parse_formula("y"), ctx, Time(0)), UnknownIdentifier);
    CHECK_THROWS_AS(holds_at(parse_formula("A x1"), ctx, Time(0)), QuantifierPresent);
    CHECK_THROWS_AS(holds_at(parse_formula("x1"), ctx, Time(-1)), BadInterval);
}

TEST_CASE("next looks at the one-sided limit state") {
    Trajectory x = traj1(Signal::pulse(Time(1), Time(2)));
    EvalContext ctx(x);
    FormulaPtr a = parse_formula("x1");

    CHECK(holds_at(parse_formula("X-x1"), ctx, Time(1)) == bit0);
    CHECK(next_holds(a, ctx, Time(1), Side::left) == bit0);
    CHECK(next_holds(a, ctx, Time(1), Side::right) == bit1);
    CHECK(next_holds(a, ctx, Time(3, 2), Side::left) == bit1);
    // at the origin the left limit sees the zero state
    CHECK(next_holds(parse_formula("!x1"), ctx, Time(0), Side::left) == bit1);

    Trajectory high = traj1(Signal::constant(bit1));
    EvalContext hctx(high);
    CHECK(next_holds(a, hctx, Time(0), Side::left) == bit0);
    CHECK(next_holds(a, hctx, Time(0), Side::right) == bit1);
}

TEST_CASE("until with its empty-window convention") {
    Trajectory x = traj1(Signal::step(Time(3)));
    EvalContext ctx(x);
    FormulaPtr g = parse_formula("x1");

    CHECK(until_holds(TemporalFormula::constant(bit1), g, ctx, Time(0)) == bit1);
    // g true at t itself wins no matter what h is
    CHECK(until_holds(TemporalFormula::constant(bit0), g, ctx, Time(3)) == bit1);
    CHECK(until_holds(parse_formula("!x1"), g, ctx, Time(0)) == bit1);

    // h = 1 only on [0,2): the gap [2,3) kills the witness at 3
    Trajectory y;
    y.horizon = Time(100);
    y.state_names = {"x1", "x2"};
    y.states = {Signal::step(Time(3)), Signal::pulse(Time(0), Time(2))};
    y.settled = true;
    EvalContext yctx(y);
    CHECK(until_holds(parse_formula("x2"), parse_formula("x1"), yctx, Time(0)) == bit0);
}

TEST_CASE("eventually and always") {
    Trajectory x = traj1(Signal::step(Time(3)));
    EvalContext ctx(x);
    CHECK(eventually_holds(parse_formula("x1"), ctx, Time(0)) == bit1);
    CHECK(eventually_holds(parse_formula("0"), ctx, Time(0)) == bit0);

    Trajectory p = traj1(Signal::pulse(Time(1), Time(2)));
    EvalContext pctx(p);
    CHECK(eventually_holds(parse_formula("x1"), pctx, Time(5)) == bit0);

    Trajectory s = traj1(Signal::step(Time(2)));
    EvalContext sctx(s);
    CHECK(always_holds(parse_formula("x1"), sctx, Time(2)) == bit1);
    CHECK(always_holds(parse_formula("x1"), sctx, Time(0)) == bit0);
    CHECK(always_holds(parse_formula("1"), sctx, Time(0)) == bit1);

    // 1 on [0,5) fails from 5 on
    Trajectory q = traj1(Signal::pulse(Time(0), Time(5)));
    EvalContext qctx(q);
    CHECK(always_holds(parse_formula("x1"), qctx, Time(0)) == bit0);
}

TEST_CASE("unbounded operators demand a settled trajectory") {
    Trajectory x = traj1(Signal::step(Time(3)));
    x.settled = false;
    EvalContext ctx(x);
    CHECK_THROWS_AS(holds_at(parse_formula("F x1"), ctx, Time(0)), UnsettledTrajectory);
    CHECK_THROWS_AS(until_holds(parse_formula("1"), parse_formula("x1"), ctx, Time(0)),
                    UnsettledTrajectory);
    CHECK_THROWS_AS(eventually_holds(parse_formula("x1"), ctx, Time(0)),
                    UnsettledTrajectory);
    CHECK_THROWS_AS(always_holds(parse_formula("x1"), ctx, Time(0)),
                    UnsettledTrajectory);
    CHECK_THROWS_AS(truth_signal(parse_formula("F x1"), ctx), UnsettledTrajectory);
    // bounded formulas still evaluate
    CHECK(holds_at(parse_formula("x1 | !x1"), ctx, Time(0)) == bit1);
}

TEST_CASE("satisfied_in anchors at 0") {
    Trajectory x = traj1(Signal::constant(bit1));
    EvalContext ctx(x);
    CHECK(satisfied_in(parse_formula("x1"), ctx) == bit1);
    CHECK(satisfied_in(parse_formula("x1 | !x1"), ctx) == bit1); // tautology
    CHECK(satisfied_in(parse_formula("x1 & !x1"), ctx) == bit0);
}

TEST_CASE("truth_signal lifts formulas back to signals") {
    Trajectory x;
    x.horizon = Time(100);
    x.state_names = {"x1", "x2"};
    x.states = {Signal::step(Time(2)), Signal::pulse(Time(3), Time(4))};
    x.settled = true;
    EvalContext ctx(x);

    CHECK(truth_signal(parse_formula("x1"), ctx) == x.states[0]);
    CHECK(truth_signal(parse_formula("F x2"), ctx) == Signal::pulse(Time(0), Time(4)));
    CHECK(truth_signal(parse_formula("G x1"), ctx) == Signal::step(Time(2)));
    CHECK_THROWS_AS(truth_signal(parse_formula("X-x1"), ctx), UnsupportedConnector);
    CHECK_THROWS_AS(truth_signal(parse_formula("X+x1"), ctx), UnsupportedConnector);
    CHECK_THROWS_AS(truth_signal(parse_formula("A x1"), ctx), UnsupportedConnector);
}

TEST_CASE("logic laws on random formula/trajectory pairs") {
    Rng rng(333);
    std::vector<std::string> names{"x1", "x2"};
    for (int i = 0; i < 300; ++i) {
        Trajectory x = testgen::random_trajectory(rng, 2, 4);
        EvalContext ctx(x);
        Time t = testgen::rational(rng, 10, 8);

        FormulaPtr h = testgen::random_formula(rng, names, 3);
        FormulaPtr g = testgen::random_formula(rng, names, 3);

        // G h = !F!h
        CHECK(always_holds(h, ctx, t) ==
              (bit1 ^ eventually_holds(TemporalFormula::negation(h), ctx, t)));

        // F g = 1 U g
        CHECK(eventually_holds(g, ctx, t) ==
              until_holds(TemporalFormula::constant(bit1), g, ctx, t));

        // right Next is of null effect
        CHECK(next_holds(h, ctx, t, Side::right) == holds_at(h, ctx, t));

        // anchored = floating at 0
        CHECK(satisfied_in(h, ctx) == holds_at(h, ctx, Time(0)));

        // g true at t forces h U g regardless of h
        if (holds_at(g, ctx, t) == bit1)
            CHECK(until_holds(h, g, ctx, t) == bit1);

        // raising h pointwise cannot break an until
        if (until_holds(h, g, ctx, t) == bit1) {
            FormulaPtr raised = TemporalFormula::binary(
                Kind::Or, h, testgen::random_formula(rng, names, 2));
            CHECK(until_holds(raised, g, ctx, t) == bit1);
        }
    }
}

TEST_CASE("finite variability: truth signals sample back to holds_at") {
    Rng rng(444);
    std::vector<std::string> names{"x1", "x2"};
    for (int i = 0; i < 150; ++i) {
        Trajectory x = testgen::random_trajectory(rng, 2, 4);
        EvalContext ctx(x);
        FormulaPtr h = testgen::random_formula(rng, names, 3, {false, true, false});

        Signal ts = truth_signal(h, ctx);
        CHECK(Signal::make(ts.initial(), ts.toggles()) == ts);

        for (const Time& g : ts.toggles()) {
            bool at_breakpoint = false;
            for (const Time& b : ctx.breakpoints())
                at_breakpoint = at_breakpoint || b == g;
            CHECK(at_breakpoint);
        }
        for (const Time& t : testgen::piece_samples(x.states))
            CHECK(ts.value_at(t) == holds_at(h, ctx, t));
    }
}
