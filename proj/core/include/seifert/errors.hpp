#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

// Invalid data supplied by the caller (bad Seifert invariants, malformed
// input, out-of-range arguments).  Maps to exit code 2 in the CLI.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// A consistency check inside the library failed.  These never fire on valid
// input; they indicate a bug.  Maps to exit code 3 in the CLI.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace seifert
