#pragma once

#include <stdexcept>
#include <string>

namespace cds {

// Bad arguments, malformed files, out-of-range ids.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A connected graph was required. Subtype of input_error so library
// contracts stay uniform while the CLI can map it to its own exit code.
struct disconnected_error : input_error {
    explicit disconnected_error(const std::string& what) : input_error(what) {}
};

// A resource cap was exceeded. Raised instead of returning a possibly
// wrong or truncated answer.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated internal invariant; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const char* what) {
    if (!cond) throw input_error(what);
}

inline void check_internal(bool cond, const char* what) {
    if (!cond) throw internal_error(what);
}

} // namespace cds
