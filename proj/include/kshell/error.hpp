#pragma once

#include <stdexcept>
#include <string>

namespace kshell {

// Bad user input: unknown labels, malformed files, out-of-range parameters.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation applied outside its mathematical domain (e.g. dimension of the
// void complex, link of a non-face).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency check that should be implied by the theory failed; indicates
// a broken precondition or a bug, never a user mistake.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace kshell
