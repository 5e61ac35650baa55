#pragma once

#include <stdexcept>
#include <string>

namespace pcover {

// Malformed arguments or inputs the caller handed us.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance file syntax errors, with a 1-based line number.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An operation would exceed a hard size cap (oracle caps, DP table guard).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pcover
