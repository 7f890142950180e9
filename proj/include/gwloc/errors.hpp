#pragma once

#include <stdexcept>
#include <string>

namespace gwloc {

// Degree regime the theory excludes (d+ == d- on the open side, and the
// corresponding restricted queries on the closed side).
struct VanishingDegreeError : std::domain_error {
    explicit VanishingDegreeError(const std::string& what) : std::domain_error(what) {}
};

// A structural identity that must hold for every correctly assembled graph
// sum failed: pole on the antidiagonal, stratum/valuation bound violated,
// inhomogeneous contribution, or a restricted value that is not a monomial.
struct IntegrityError : std::runtime_error {
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// A recomputed value disagrees with a persisted cache record.
struct CacheMismatchError : std::runtime_error {
    explicit CacheMismatchError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gwloc
