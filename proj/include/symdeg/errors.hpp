#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symdeg {

// Caller supplied something outside an operation's preconditions.
// The CLI maps these to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public PreconditionError {
public:
    ParseError(const std::string& what, std::size_t position)
        : PreconditionError(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A self-check inside the library failed. The CLI maps these to exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace symdeg
