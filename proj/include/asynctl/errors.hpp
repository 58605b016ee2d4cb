#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asynctl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonMonotonicToggles : public Error {
public:
    using Error::Error;
};

class NegativeTime : public Error {
public:
    using Error::Error;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class BadInterval : public Error {
public:
    using Error::Error;
};

class ZeroDelay : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Raised by the text parsers; carries a character position into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownIdentifier : public Error {
public:
    using Error::Error;
};

class UnsettledTrajectory : public Error {
public:
    using Error::Error;
};

class QuantifierPresent : public Error {
public:
    using Error::Error;
};

class UnsupportedConnector : public Error {
public:
    using Error::Error;
};

class UnquantifiedOverManyPaths : public Error {
public:
    using Error::Error;
};

class EmptyDelaySpace : public Error {
public:
    using Error::Error;
};

} // namespace asynctl
