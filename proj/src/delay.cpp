#include "asynctl/delay.hpp"

#include <set>

namespace asynctl {

Signal ideal_delay(const BooleanFunction& f, std::span<const Signal> inputs,
                   const DelayParam& tau) {
    return shift(combine(f, inputs), tau.tau());
}

Signal inertial_delay_of(const Signal& e, const DelayParam& delay, Bit x0) {
    const Time& tau = delay.tau();

    // The output can only switch when the window [t - tau, t) first becomes
    // constant, i.e. when its left end leaves a switch of the excitation
    // behind, or at tau itself where the initial window [0, tau) completes.
    std::set<Time> candidates;
    candidates.insert(tau);
    for (const Time& a : e.toggles())
        candidates.insert(a + tau);

    Bit current = x0;
    std::vector<Time> toggles;
    for (const Time& t : candidates) {
        std::optional<Bit> window = e.constant_on(t - tau, t);
        if (window && *window != current) {
            toggles.push_back(t);
            current = *window;
        }
    }
    return Signal::make(x0, std::move(toggles));
}

Signal inertial_delay(const BooleanFunction& f, std::span<const Signal> inputs,
                      const DelayParam& tau, Bit x0) {
    return inertial_delay_of(combine(f, inputs), tau, x0);
}

std::optional<Time> min_pulse_width(const Signal& s) {
    const auto& tg = s.toggles();
    std::optional<Time> best;
    auto consider = [&](Time w) {
        if (!best || w < *best)
            best = std::move(w);
    };
    if (s.initial() == bit1 && !tg.empty())
        consider(tg.front());
    for (std::size_t i = 1; i < tg.size(); ++i)
        consider(tg[i] - tg[i - 1]);
    return best;
}

} // namespace asynctl
