#pragma once

#include <optional>
#include <span>

#include "asynctl/boolean_function.hpp"
#include "asynctl/signal.hpp"

namespace asynctl {

enum class DelayKind { ideal, inertial };

/// A strictly positive delay parameter.
class DelayParam {
public:
    explicit DelayParam(Time tau) : tau_(std::move(tau)) {
        if (!tau_.is_positive())
            throw ZeroDelay("delay must be positive, got " + tau_.str());
    }
    const Time& tau() const { return tau_; }

private:
    Time tau_;
};

/// Ideal delay: the excitation f(inputs) translated by tau and masked to
/// [tau, oo). Equals shift(combine(f, inputs), tau) because the combined
/// excitation already vanishes on negative time.
Signal ideal_delay(const BooleanFunction& f, std::span<const Signal> inputs,
                   const DelayParam& tau);

/// Inertial delay: the output holds x0 on [0, tau) and thereafter adopts
/// the excitation's value at an instant t only when the excitation has
/// been constant on the whole window [t - tau, t); shorter perturbations
/// are filtered, longer ones delayed by tau.
Signal inertial_delay(const BooleanFunction& f, std::span<const Signal> inputs,
                      const DelayParam& tau, Bit x0);

/// Same excitation-window rule applied to an already combined excitation.
Signal inertial_delay_of(const Signal& excitation, const DelayParam& tau, Bit x0);

/// Minimum width over all maximal constant pieces of s that are bounded on
/// both sides: gaps between consecutive toggles, plus the initial segment
/// [0, first toggle) when the signal starts at 1 (it rose at the origin).
/// nullopt means no bounded piece exists (the width is unbounded).
std::optional<Time> min_pulse_width(const Signal& s);

} // namespace asynctl
