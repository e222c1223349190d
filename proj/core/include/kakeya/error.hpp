#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kakeya {

/// Base class of every failure raised by the library. Inconclusive
/// comparisons are ordinary values and never throw.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

/// The value to expand lies outside [0, S_0].
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// An interval comparison at the given index stayed ambiguous at the precision cap.
class PrecisionExhausted : public Error {
public:
    PrecisionExhausted(std::size_t index, const std::string& what)
        : Error("precision exhausted at index " + std::to_string(index) + ": " + what),
          index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class DepthTooLarge : public Error {
public:
    using Error::Error;
};

class RatioBoundUnavailable : public Error {
public:
    using Error::Error;
};

}  // namespace kakeya
