#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfmi {

/// Raised when an operation requires a weight-(-1) multi-index and gets another weight.
class WeightError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an enumeration is asked for more than its configured degree bound.
class BoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SortError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse failure; `position()` is the byte offset into the input.
class SyntaxError : public std::invalid_argument {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hopfmi
