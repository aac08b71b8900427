#pragma once
#include <stdexcept>
#include <string>

namespace mdt {

// Raised when an internal cross-check of a computed identity fails
// (e.g. a quotient that should be polynomial is not).
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mdt
