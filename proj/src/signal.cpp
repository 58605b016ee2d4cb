#include "asynctl/signal.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "asynctl/boolean_function.hpp"

namespace asynctl {

Signal Signal::make(Bit initial, std::vector<Time> toggles) {
    for (std::size_t i = 0; i < toggles.size(); ++i) {
        if (toggles[i].is_negative())
            throw NegativeTime("toggle " + toggles[i].str() + " is negative");
        if (i > 0 && !(toggles[i - 1] < toggles[i]))
            throw NonMonotonicToggles("toggles must be strictly increasing: " +
                                      toggles[i - 1].str() + " then " + toggles[i].str());
    }
    // A switch exactly at the origin is the same function as the flipped
    // initial value; store the folded form so equal functions compare equal.
    if (!toggles.empty() && toggles.front().is_zero()) {
        toggles.erase(toggles.begin());
        initial = ~initial;
    }
    return Signal(initial, std::move(toggles));
}

Signal Signal::pulse(const Time& from, const Time& to) {
    if (!(from < to))
        throw BadInterval("pulse needs from < to");
    return make(bit0, {from, to});
}

Signal Signal::step(const Time& at) {
    return make(bit0, {at});
}

Bit Signal::value_at(const Time& t) const {
    if (t.is_negative())
        return bit0;
    // parity of the number of toggles <= t
    auto it = std::upper_bound(toggles_.begin(), toggles_.end(), t);
    std::size_t flips = static_cast<std::size_t>(it - toggles_.begin());
    return (flips % 2 == 0) ? initial_ : ~initial_;
}

Bit Signal::limit(const Time& t, Side side) const {
    if (side == Side::right)
        return value_at(t);
    if (!t.is_positive())
        return bit0;
    auto it = std::lower_bound(toggles_.begin(), toggles_.end(), t);
    std::size_t flips = static_cast<std::size_t>(it - toggles_.begin());
    return (flips % 2 == 0) ? initial_ : ~initial_;
}

Bit Signal::derivative(const Time& t, Side side) const {
    if (side == Side::left)
        return limit(t, Side::left) ^ value_at(t);
    return value_at(t) ^ limit(t, Side::right);
}

Bit Signal::tail_value() const {
    return (toggles_.size() % 2 == 0) ? initial_ : ~initial_;
}

std::vector<Time> Signal::toggles_in(const Time& a, const Time& b) const {
    if (b < a)
        throw BadInterval("window [" + a.str() + ", " + b.str() + ") is reversed");
    auto lo = std::lower_bound(toggles_.begin(), toggles_.end(), a);
    auto hi = std::lower_bound(toggles_.begin(), toggles_.end(), b);
    return std::vector<Time>(lo, hi);
}

std::optional<Bit> Signal::constant_on(const Time& a, const Time& b) const {
    if (!(a < b))
        throw BadInterval("window [" + a.str() + ", " + b.str() + ") is empty");
    auto lo = std::upper_bound(toggles_.begin(), toggles_.end(), a);
    if (lo != toggles_.end() && *lo < b)
        return std::nullopt;
    return value_at(a);
}

Signal combine(const BooleanFunction& f, std::span<const Signal> args) {
    if (f.arity() != args.size())
        throw ArityMismatch("function of arity " + std::to_string(f.arity()) +
                            " applied to " + std::to_string(args.size()) + " signals");

    std::set<Time> instants;
    instants.insert(Time(0));
    for (const Signal& s : args)
        instants.insert(s.toggles().begin(), s.toggles().end());

    std::vector<Bit> sample(args.size());
    auto value_of = [&](const Time& t) {
        for (std::size_t i = 0; i < args.size(); ++i)
            sample[i] = args[i].value_at(t);
        return f.evaluate(sample);
    };

    Bit initial{};
    Bit current{};
    std::vector<Time> toggles;
    bool first = true;
    for (const Time& t : instants) {
        Bit v = value_of(t);
        if (first) {
            initial = current = v;
            first = false;
        } else if (v != current) {
            toggles.push_back(t);
            current = v;
        }
    }
    return Signal::make(initial, std::move(toggles));
}

Signal shift(const Signal& s, const Time& tau) {
    if (tau.is_negative())
        throw NegativeTime("shift amount " + tau.str() + " is negative");
    if (tau.is_zero())
        return s;
    std::vector<Time> toggles;
    toggles.reserve(s.toggles().size() + 1);
    // The piece of s on [-tau, 0) is 0, so the translate starts at 0 and
    // picks up s's initial value at tau.
    if (s.initial() == bit1)
        toggles.push_back(tau);
    for (const Time& t : s.toggles())
        toggles.push_back(t + tau);
    return Signal::make(bit0, std::move(toggles));
}

std::ostream& operator<<(std::ostream& os, const Signal& s) {
    os << s.initial().as_int() << ':';
    for (std::size_t i = 0; i < s.toggles().size(); ++i)
        os << (i ? "," : " ") << s.toggles()[i];
    return os;
}

std::ostream& operator<<(std::ostream& os, Bit b) {
    return os << b.as_int();
}

} // namespace asynctl
