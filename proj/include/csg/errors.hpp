#pragma once

#include <stdexcept>
#include <string>

namespace csg {

// Invalid input or violated precondition. CLI exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented size cap or output cap. CLI exit code 3.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph text. Carries a 1-based line number when known.
class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

} // namespace csg
