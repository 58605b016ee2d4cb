#pragma once

#include <iosfwd>

namespace asynctl {

/// An element of the two-point Boolean algebra {0, 1}, closed under
/// complement, product and modulo-2 sum.
class Bit {
public:
    constexpr Bit() : v_(false) {}
    constexpr explicit Bit(bool v) : v_(v) {}

    constexpr bool as_bool() const { return v_; }
    constexpr int as_int() const { return v_ ? 1 : 0; }

    constexpr Bit operator~() const { return Bit(!v_); }
    constexpr Bit operator&(Bit o) const { return Bit(v_ && o.v_); }
    constexpr Bit operator|(Bit o) const { return Bit(v_ || o.v_); }
    constexpr Bit operator^(Bit o) const { return Bit(v_ != o.v_); }

    constexpr bool operator==(const Bit&) const = default;

private:
    bool v_;
};

inline constexpr Bit bit0{false};
inline constexpr Bit bit1{true};

/// h -> g, i.e. ~h | g.
constexpr Bit implies(Bit h, Bit g) { return ~h | g; }

std::ostream& operator<<(std::ostream& os, Bit b);

} // namespace asynctl
