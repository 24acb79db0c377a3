#pragma once

#include <stdexcept>
#include <string>

namespace fdot {

// Bad user input: inconsistent meshes, malformed configs, out-of-range values.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver failed to deliver the accuracy it is contracted to deliver.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fdot
