#pragma once

#include <stdexcept>
#include <string>

namespace polycirc {

// Bad user input: malformed config text, wrong units, missing sections.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed to converge or produced non-finite values.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polycirc
