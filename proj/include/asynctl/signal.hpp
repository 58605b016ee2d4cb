#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "asynctl/bit.hpp"
#include "asynctl/errors.hpp"
#include "asynctl/time.hpp"

namespace asynctl {

enum class Side { left, right };

/// A realizable Boolean function of continuous time in canonical form:
/// the value at the origin plus a finite, strictly increasing list of
/// switch instants. The value is 0 for all t < 0, starts at `initial`
/// on [0, first toggle), flips at every toggle and is constant after the
/// last one. A switch exactly at 0 is folded into `initial`, so stored
/// toggles are strictly positive and the representation is unique.
class Signal {
public:
    /// Constant 0.
    Signal() : initial_(bit0) {}

    /// Validates and canonicalizes. Throws NegativeTime on a toggle < 0,
    /// NonMonotonicToggles on an out-of-order or duplicate toggle.
    static Signal make(Bit initial, std::vector<Time> toggles);

    static Signal constant(Bit value) { return Signal(value, {}); }

    /// 1 exactly on [from, to); requires 0 <= from < to.
    static Signal pulse(const Time& from, const Time& to);

    /// 0 before `at`, 1 from `at` on; requires at >= 0.
    static Signal step(const Time& at);

    Bit initial() const { return initial_; }
    const std::vector<Time>& toggles() const { return toggles_; }

    /// The piecewise value; 0 whenever t < 0.
    Bit value_at(const Time& t) const;

    /// One-sided limit. The left limit at t <= 0 is 0; the right limit
    /// equals value_at everywhere (realizable signals are right-continuous).
    Bit limit(const Time& t, Side side) const;

    /// Side::left gives w(t-0) xor w(t); Side::right gives w(t) xor w(t+0),
    /// which is identically 0 on this signal class.
    Bit derivative(const Time& t, Side side) const;

    /// The value after the last toggle.
    Bit tail_value() const;

    /// Toggles in the half-open window [a, b), sorted. Throws BadInterval
    /// if a > b.
    std::vector<Time> toggles_in(const Time& a, const Time& b) const;

    /// The common value on [a, b) if the signal does not switch strictly
    /// inside (a, b), nullopt otherwise. Throws BadInterval if a >= b.
    std::optional<Bit> constant_on(const Time& a, const Time& b) const;

    bool operator==(const Signal&) const = default;

private:
    Signal(Bit initial, std::vector<Time> toggles)
        : initial_(initial), toggles_(std::move(toggles)) {}

    Bit initial_;
    std::vector<Time> toggles_;
};

class BooleanFunction;

/// Pointwise application of f to the argument signals on [0, oo); the
/// result is 0 on negative time like every realizable signal. Throws
/// ArityMismatch if the argument count differs from f's arity.
Signal combine(const BooleanFunction& f, std::span<const Signal> args);

/// Translation by tau >= 0: result(t) = s(t - tau). Throws NegativeTime.
Signal shift(const Signal& s, const Time& tau);

std::ostream& operator<<(std::ostream& os, const Signal& s);

} // namespace asynctl
