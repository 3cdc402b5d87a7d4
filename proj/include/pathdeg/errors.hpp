#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathdeg {

// Malformed input to a graph constructor or generator.
class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search guard (cycle cap, state budget, order-count guard) was hit before
// the answer was known. Never a verdict.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation that needs a p-path degenerate input got one that is not.
class NotDegenerate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Text input that does not follow one of the line formats or graph6.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace pathdeg
