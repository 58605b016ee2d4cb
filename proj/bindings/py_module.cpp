// Python bindings for the asynctl core. Exact rationals cross the boundary
// as Time objects constructible from int, (num, den) or "p/q" strings.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asynctl/branching.hpp"
#include "asynctl/circuit.hpp"
#include "asynctl/logic.hpp"

namespace py = pybind11;
using namespace asynctl;

namespace {

py::int_ to_py_int(const BigInt& v) {
    std::string s = v.str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Time to_time(const py::handle& h) {
    if (py::isinstance<Time>(h))
        return h.cast<Time>();
    if (py::isinstance<py::int_>(h))
        return Time(h.cast<long long>());
    if (py::isinstance<py::str>(h))
        return Time::parse(h.cast<std::string>());
    if (py::isinstance<py::tuple>(h)) {
        auto t = h.cast<py::tuple>();
        if (t.size() == 2)
            return Time(t[0].cast<long long>(), t[1].cast<long long>());
    }
    throw py::type_error("expected Time, int, 'p/q' string or (num, den)");
}

std::vector<Time> to_times(const py::iterable& it) {
    std::vector<Time> out;
    for (const py::handle& h : it)
        out.push_back(to_time(h));
    return out;
}

Bit to_bit(const py::handle& h) {
    if (py::isinstance<Bit>(h))
        return h.cast<Bit>();
    return Bit(h.cast<bool>());
}

} // namespace

PYBIND11_MODULE(_asynctl, m) {
    m.doc() = "Delayed Boolean networks with continuous-time temporal logic";

    py::register_exception<UnsettledTrajectory>(m, "UnsettledTrajectoryError");
    py::register_exception<ParseError>(m, "FormulaParseError");
    static py::exception<Error> base_error(m, "AsynctlError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const UnsettledTrajectory&) {
            throw; // handled by the dedicated translator
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            py::set_error(base_error, e.what());
        }
    });

    py::class_<Time>(m, "Time")
        .def(py::init([](const py::handle& h) { return to_time(h); }))
        .def(py::init([](long long num, long long den) { return Time(num, den); }))
        .def_static("parse", [](const std::string& s) { return Time::parse(s); })
        .def_property_readonly("numerator", [](const Time& t) { return to_py_int(t.numerator()); })
        .def_property_readonly("denominator", [](const Time& t) { return to_py_int(t.denominator()); })
        .def("__str__", &Time::str)
        .def("__repr__", [](const Time& t) { return "Time('" + t.str() + "')"; })
        .def("__hash__", [](const Time& t) { return py::hash(py::str(t.str())); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self);

    py::class_<Bit>(m, "Bit")
        .def(py::init<bool>())
        .def_property_readonly("value", &Bit::as_bool)
        .def("__bool__", &Bit::as_bool)
        .def("__int__", &Bit::as_int)
        .def("__invert__", [](Bit b) { return ~b; })
        .def("__and__", [](Bit a, Bit b) { return a & b; })
        .def("__or__", [](Bit a, Bit b) { return a | b; })
        .def("__xor__", [](Bit a, Bit b) { return a ^ b; })
        .def("__eq__", [](Bit a, const py::handle& h) { return a == to_bit(h); })
        .def("__repr__", [](Bit b) { return std::string("Bit(") + (b.as_bool() ? "1" : "0") + ")"; });

    py::enum_<Side>(m, "Side")
        .value("left", Side::left)
        .value("right", Side::right);

    py::enum_<DelayKind>(m, "DelayKind")
        .value("ideal", DelayKind::ideal)
        .value("inertial", DelayKind::inertial);

    py::enum_<PathQuantifier>(m, "PathQuantifier")
        .value("all", PathQuantifier::all)
        .value("some", PathQuantifier::some);

    py::class_<Signal>(m, "Signal")
        .def(py::init([](const py::handle& initial, const py::iterable& toggles) {
                 return Signal::make(to_bit(initial), to_times(toggles));
             }),
             py::arg("initial"), py::arg("toggles"))
        .def_static("constant", [](const py::handle& v) { return Signal::constant(to_bit(v)); })
        .def_static("pulse", [](const py::handle& a, const py::handle& b) {
            return Signal::pulse(to_time(a), to_time(b));
        })
        .def_static("step", [](const py::handle& a) { return Signal::step(to_time(a)); })
        .def_property_readonly("initial", &Signal::initial)
        .def_property_readonly("toggles", [](const Signal& s) { return s.toggles(); })
        .def("value_at", [](const Signal& s, const py::handle& t) { return s.value_at(to_time(t)); })
        .def("limit", [](const Signal& s, const py::handle& t, Side side) {
            return s.limit(to_time(t), side);
        })
        .def("derivative", [](const Signal& s, const py::handle& t, Side side) {
            return s.derivative(to_time(t), side);
        })
        .def("tail_value", &Signal::tail_value)
        .def("toggles_in", [](const Signal& s, const py::handle& a, const py::handle& b) {
            return s.toggles_in(to_time(a), to_time(b));
        })
        .def("constant_on", [](const Signal& s, const py::handle& a, const py::handle& b) {
            return s.constant_on(to_time(a), to_time(b));
        })
        .def(py::self == py::self)
        .def("__repr__", [](const Signal& s) {
            std::string r = "Signal(initial=" + std::to_string(s.initial().as_int()) + ", toggles=[";
            for (std::size_t i = 0; i < s.toggles().size(); ++i)
                r += (i ? ", " : "") + s.toggles()[i].str();
            return r + "])";
        });

    py::class_<BooleanFunction>(m, "BooleanFunction")
        .def_property_readonly("arity", &BooleanFunction::arity)
        .def_property_readonly("variables", &BooleanFunction::variables)
        .def("evaluate",
             [](const BooleanFunction& f, const py::iterable& args) {
                 std::vector<Bit> bits;
                 for (const py::handle& h : args)
                     bits.push_back(to_bit(h));
                 return f.evaluate(bits);
             })
        .def("__str__", &BooleanFunction::str);

    m.def(
        "parse_function",
        [](const std::string& text, std::vector<std::string> variables) {
            return to_boolean_function(parse_formula(text), std::move(variables));
        },
        py::arg("text"), py::arg("variables"),
        "Parse a Boolean expression over the given variable list");

    m.def("combine", [](const BooleanFunction& f, const std::vector<Signal>& args) {
        return combine(f, args);
    });
    m.def("shift", [](const Signal& s, const py::handle& tau) {
        return shift(s, to_time(tau));
    });
    m.def("ideal_delay",
          [](const BooleanFunction& f, const std::vector<Signal>& inputs,
             const py::handle& tau) { return ideal_delay(f, inputs, DelayParam(to_time(tau))); });
    m.def("inertial_delay",
          [](const BooleanFunction& f, const std::vector<Signal>& inputs,
             const py::handle& tau, const py::handle& x0) {
              return inertial_delay(f, inputs, DelayParam(to_time(tau)), to_bit(x0));
          });
    m.def("min_pulse_width", [](const Signal& s) -> py::object {
        std::optional<Time> w = min_pulse_width(s);
        return w ? py::cast(*w) : py::none();
    });

    py::class_<Automaton>(m, "Automaton")
        .def(py::init([](std::vector<std::string> state_names,
                         std::vector<std::string> input_names,
                         std::vector<DelayKind> kinds,
                         std::vector<BooleanFunction> generator,
                         const py::iterable& delays, const py::iterable& initial) {
                 std::vector<Bit> init;
                 for (const py::handle& h : initial)
                     init.push_back(to_bit(h));
                 return Automaton(std::move(state_names), std::move(input_names),
                                  std::move(kinds), std::move(generator),
                                  to_times(delays), std::move(init));
             }),
             py::arg("state_names"), py::arg("input_names"), py::arg("kinds"),
             py::arg("generator"), py::arg("delays"), py::arg("initial"))
        .def_property_readonly("state_names", &Automaton::state_names)
        .def_property_readonly("input_names", &Automaton::input_names)
        .def_property_readonly("kinds", &Automaton::kinds)
        .def_property_readonly("delays", &Automaton::delays)
        .def_property_readonly("initial", &Automaton::initial)
        .def(py::self == py::self);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("horizon", &Trajectory::horizon)
        .def_readonly("state_names", &Trajectory::state_names)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("input_names", &Trajectory::input_names)
        .def_readonly("inputs", &Trajectory::inputs)
        .def_readonly("settled", &Trajectory::settled)
        .def(py::self == py::self);

    py::class_<Violation>(m, "Violation")
        .def_readonly("at", &Violation::at)
        .def_readonly("coordinate", &Violation::coordinate)
        .def("__repr__", [](const Violation& v) {
            return "Violation(at=" + v.at.str() +
                   ", coordinate=" + std::to_string(v.coordinate) + ")";
        });

    m.def("event_lattice",
          [](const std::vector<Signal>& inputs, const py::iterable& delays,
             const py::handle& horizon) {
              return event_lattice(inputs, to_times(delays), to_time(horizon));
          });
    m.def("solve", [](const Automaton& a, const std::vector<Signal>& u,
                      const py::handle& horizon) { return solve(a, u, to_time(horizon)); });
    m.def("dense_oracle",
          [](const Automaton& a, const std::vector<Signal>& u, const py::handle& horizon,
             const py::handle& step) {
              return dense_oracle(a, u, to_time(horizon), to_time(step));
          });
    m.def("check_solution",
          [](const Automaton& a, const std::vector<Signal>& u, const Trajectory& x,
             const py::handle& step) { return check_solution(a, u, x, to_time(step)); });
    m.def("age_of_constancy",
          [](const Automaton& a, const Trajectory& x, std::size_t coordinate,
             const py::handle& t) { return age_of_constancy(a, x, coordinate, to_time(t)); });
    m.def("is_settled", &is_settled);
    m.def("default_grid_step",
          [](const Automaton& a, const std::vector<Signal>& u, const py::handle& horizon) {
              return default_grid_step(a, u, to_time(horizon));
          });

    py::class_<TemporalFormula, std::shared_ptr<TemporalFormula>>(m, "TemporalFormula")
        .def("__str__", &TemporalFormula::str)
        .def_property_readonly("has_quantifier", &TemporalFormula::has_quantifier)
        .def_property_readonly("has_unbounded", &TemporalFormula::has_unbounded)
        .def_property_readonly("has_next", &TemporalFormula::has_next);

    m.def("parse_formula",
          [](const std::string& text) { return parse_formula(text); });

    py::class_<EvalContext>(m, "EvalContext")
        .def(py::init<const Trajectory&>(), py::keep_alive<1, 2>())
        .def_property_readonly("breakpoints", &EvalContext::breakpoints);

    auto with_ctx = [](const Trajectory& x, auto&& fn) {
        EvalContext ctx(x);
        return fn(ctx);
    };
    m.def("holds_at", [with_ctx](const FormulaPtr& h, const Trajectory& x, const py::handle& t) {
        return with_ctx(x, [&](EvalContext& ctx) { return holds_at(h, ctx, to_time(t)); });
    });
    m.def("next_holds",
          [with_ctx](const FormulaPtr& h, const Trajectory& x, const py::handle& t, Side side) {
              return with_ctx(x, [&](EvalContext& ctx) { return next_holds(h, ctx, to_time(t), side); });
          });
    m.def("until_holds",
          [with_ctx](const FormulaPtr& h, const FormulaPtr& g, const Trajectory& x,
                     const py::handle& t) {
              return with_ctx(x, [&](EvalContext& ctx) { return until_holds(h, g, ctx, to_time(t)); });
          });
    m.def("eventually_holds",
          [with_ctx](const FormulaPtr& g, const Trajectory& x, const py::handle& t) {
              return with_ctx(x, [&](EvalContext& ctx) { return eventually_holds(g, ctx, to_time(t)); });
          });
    m.def("always_holds",
          [with_ctx](const FormulaPtr& h, const Trajectory& x, const py::handle& t) {
              return with_ctx(x, [&](EvalContext& ctx) { return always_holds(h, ctx, to_time(t)); });
          });
    m.def("satisfied_in", [with_ctx](const FormulaPtr& h, const Trajectory& x) {
        return with_ctx(x, [&](EvalContext& ctx) { return satisfied_in(h, ctx); });
    });
    m.def("truth_signal", [with_ctx](const FormulaPtr& h, const Trajectory& x) {
        return with_ctx(x, [&](EvalContext& ctx) { return truth_signal(h, ctx); });
    });

    py::class_<DelaySpace>(m, "DelaySpace")
        .def(py::init([](const py::iterable& lists) {
            std::vector<std::vector<Time>> candidates;
            for (const py::handle& l : lists)
                candidates.push_back(to_times(l.cast<py::iterable>()));
            return DelaySpace(std::move(candidates));
        }))
        .def_static("from_bounds",
                    [](const py::iterable& bounds, const py::handle& step) {
                        std::vector<std::pair<Time, Time>> bs;
                        for (const py::handle& b : bounds) {
                            auto t = b.cast<py::tuple>();
                            bs.emplace_back(to_time(t[0]), to_time(t[1]));
                        }
                        return DelaySpace::from_bounds(bs, to_time(step));
                    })
        .def_property_readonly("candidates", &DelaySpace::candidates)
        .def_property_readonly("tuple_count", &DelaySpace::tuple_count);

    py::class_<PathSet>(m, "PathSet")
        .def_readonly("tuples", &PathSet::tuples)
        .def_readonly("paths", &PathSet::paths)
        .def("__len__", &PathSet::size);

    m.def("enumerate_paths",
          [](const Automaton& base, const DelaySpace& space, const std::vector<Signal>& u,
             const py::handle& horizon) {
              return enumerate_paths(base, space, u, to_time(horizon));
          });
    m.def("quantifier_holds",
          [](PathQuantifier q, const FormulaPtr& h, const PathSet& paths,
             const py::handle& t) { return quantifier_holds(q, h, paths, to_time(t)); });
    m.def("eval_formula", [](const FormulaPtr& h, const PathSet& paths, const py::handle& t) {
        return eval_formula(h, paths, to_time(t));
    });

    py::class_<CircuitFile>(m, "CircuitFile")
        .def_readonly("automaton", &CircuitFile::automaton)
        .def_readonly("inputs", &CircuitFile::inputs)
        .def_readonly("horizon", &CircuitFile::horizon)
        .def_readonly("step", &CircuitFile::step)
        .def(py::self == py::self);

    m.def("parse_circuit", &parse_circuit);
    m.def("serialize_circuit", &serialize_circuit);
    m.def("trace_csv", &trace_csv);
    m.def("parse_trace_csv", &parse_trace_csv);
}
