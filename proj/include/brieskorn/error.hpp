#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

// Input text could not be parsed. `position` is a 0-based byte offset into the input.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

// Structurally valid input outside the mathematical domain of an operation
// (non-coprime multiplicities, indefinite form, uncertified connected sum, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A checked internal invariant failed. Always a bug, never a user error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_internal(bool ok, const char* msg) {
    if (!ok) throw internal_error(msg);
}

}  // namespace brieskorn
