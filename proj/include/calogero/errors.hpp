#ifndef CALOGERO_ERRORS_HPP
#define CALOGERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace calogero {

// A pairing <alpha, mu + a*rho> (or similar) vanished where a formula
// requires division by it. The message names the vanishing pairing.
struct SingularParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A gamma-ratio factor hit a pole (some x0 + k == 0).
struct PoleEncountered : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Label outside the sublattice admissible for the requested symmetry sector.
struct InvalidSector : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature requires integer couplings.
struct NonIntegerCoupling : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Back-substitution hit a zero pivot at non-generic parameters.
struct DegenerateEigenvalue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q raised to a non-integer exponent in the Macdonald identity check.
struct IrrationalExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace calogero

#endif
