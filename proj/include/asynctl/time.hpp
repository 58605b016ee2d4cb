#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "asynctl/errors.hpp"

namespace asynctl {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// An exact rational instant or duration. All arithmetic and comparisons
/// are exact; the stored fraction is always reduced with a positive
/// denominator. Event bookkeeping throughout the library relies on exact
/// equality of instants, so there is no floating point anywhere.
class Time {
public:
    Time() : value_(0) {}
    Time(long long n) : value_(n) {}       // NOLINT: implicit by design
    Time(long long num, long long den);
    explicit Time(BigRational value) : value_(std::move(value)) {}

    /// Parses `p` or `p/q` with q > 0, optional leading `-`.
    static Time parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    const BigRational& value() const { return value_; }

    bool is_negative() const { return value_ < 0; }
    bool is_positive() const { return value_ > 0; }
    bool is_zero() const { return value_ == 0; }

    /// True iff this instant is an exact integer multiple of `step`.
    bool is_multiple_of(const Time& step) const;

    std::string str() const;

    Time operator-() const { return Time(-value_); }
    Time& operator+=(const Time& o) { value_ += o.value_; return *this; }
    Time& operator-=(const Time& o) { value_ -= o.value_; return *this; }
    Time& operator*=(const Time& o) { value_ *= o.value_; return *this; }

    friend Time operator+(Time a, const Time& b) { a += b; return a; }
    friend Time operator-(Time a, const Time& b) { a -= b; return a; }
    friend Time operator*(Time a, const Time& b) { a *= b; return a; }
    friend Time operator/(const Time& a, const Time& b);

    friend bool operator==(const Time& a, const Time& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Time& a, const Time& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    BigRational value_;
};

inline const Time& min(const Time& a, const Time& b) { return b < a ? b : a; }
inline const Time& max(const Time& a, const Time& b) { return a < b ? b : a; }

/// Midpoint of [a, b]; exact.
inline Time midpoint(const Time& a, const Time& b) {
    return Time((a.value() + b.value()) / 2);
}

std::ostream& operator<<(std::ostream& os, const Time& t);

} // namespace asynctl
