#include "asynctl/time.hpp"

#include <cctype>
#include <ostream>

namespace asynctl {

Time::Time(long long num, long long den) {
    if (den == 0)
        throw BadInterval("rational denominator must be nonzero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    value_ = BigRational(BigInt(num), BigInt(den));
}

Time Time::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(pos, msg + " in rational literal '" + std::string(text) + "'");
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&]() -> BigInt {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw fail("expected digits");
        return BigInt(std::string(text.substr(start, pos - start)));
    };

    BigInt num = read_digits();
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
        if (den == 0)
            throw fail("denominator must be positive");
    }
    if (pos != text.size())
        throw fail("trailing characters");
    if (negative)
        num = -num;
    return Time(BigRational(num, den));
}

bool Time::is_multiple_of(const Time& step) const {
    if (step.is_zero())
        return is_zero();
    BigRational q = value_ / step.value_;
    return boost::multiprecision::denominator(q) == 1;
}

std::string Time::str() const {
    BigInt den = denominator();
    std::string s = numerator().str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

Time operator/(const Time& a, const Time& b) {
    if (b.value_ == 0)
        throw BadInterval("division of Time by zero");
    return Time(a.value_ / b.value_);
}

std::ostream& operator<<(std::ostream& os, const Time& t) {
    return os << t.str();
}

} // namespace asynctl
