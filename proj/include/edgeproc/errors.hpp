#pragma once

#include <stdexcept>
#include <string>

namespace edgeproc {

// Requested tolerance could not be certified (non-convergent refinement,
// truncation bound above tolerance, ...).
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal numerical invariant failed (non-positive determinant,
// eigensolver breakdown, ...).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad experiment configuration (CLI / config file level).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgeproc
