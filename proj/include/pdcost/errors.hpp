#pragma once

#include <stdexcept>
#include <string>

namespace pdcost {

// Malformed graph file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A construction would exceed the configured vertex cap. Carries the count
// that would be needed so the caller can raise the cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what, const std::string& required)
        : std::runtime_error(what + " (requires " + required + " vertices)"),
          required_(required) {}
    const std::string& required_vertices() const { return required_; }

private:
    std::string required_;
};

// An exact computation ran out of its resource budget (memory, nodes, or an
// enumeration cap). The result would not be certifiably exact, so we fail
// instead of returning a possibly-wrong value.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pdcost
