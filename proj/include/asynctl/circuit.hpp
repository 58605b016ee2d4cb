#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asynctl/automaton.hpp"

namespace asynctl {

/// A parsed circuit description: the automaton, its input wave and the
/// run options. The text format has four sections of `name = value` lines
/// (`#` starts a comment):
///
///   [coords]      x1 = inertial 1 0          (kind, delay, initial bit)
///   [generator]   x1 = !x1 & u1              (one Boolean expr per coord)
///   [inputs]      u1 = 0 : 2, 5/2            (initial bit : toggle times)
///   [options]     horizon = 10   step = 1/4  (step optional)
struct CircuitFile {
    Automaton automaton;
    InputWave inputs;
    Time horizon;
    std::optional<Time> step;

    bool operator==(const CircuitFile&) const;
};

/// Throws ParseError with a message naming the section and line.
CircuitFile parse_circuit(const std::string& text);

/// Canonical text whose re-parse reproduces the CircuitFile exactly.
std::string serialize_circuit(const CircuitFile& file);

/// CSV with header `time,signal,value`: for each signal (states first,
/// then inputs, in declaration order) one row for the initial value at 0
/// and one per toggle, times as exact rationals.
std::string trace_csv(const Trajectory& x);

/// Rebuilds the named signals from a trace produced by trace_csv.
std::vector<std::pair<std::string, Signal>> parse_trace_csv(const std::string& text);

} // namespace asynctl
