#ifndef CALOGERO_PARAMS_HPP
#define CALOGERO_PARAMS_HPP

#include <stdexcept>
#include <string>

#include "calogero/rational.hpp"

namespace calogero {

enum class Family { A, B };

inline char family_letter(Family f) { return f == Family::A ? 'A' : 'B'; }

// Model family plus exact coupling constants.  b is ignored for family A.
struct Params {
    Family family;
    Rational a;
    Rational b;
    Rational omega;

    Params(Family fam, Rational a_, Rational omega_)
        : Params(fam, std::move(a_), Rational(0), std::move(omega_)) {}

    Params(Family fam, Rational a_, Rational b_, Rational omega_)
        : family(fam), a(std::move(a_)), b(std::move(b_)),
          omega(std::move(omega_)) {
        if (a <= 0)
            throw std::invalid_argument("coupling a must be positive");
        if (omega <= 0)
            throw std::invalid_argument("frequency omega must be positive");
        if (family == Family::B && b < 0)
            throw std::invalid_argument("coupling b must be non-negative");
        if (family == Family::A) b = 0;
    }

    // Shift factor in the Cherednik spectral vector: a for A, 2a for B.
    Rational rho_coupling() const {
        return family == Family::A ? a : Rational(2 * a);
    }

    std::string describe() const {
        std::string s = "family=";
        s += family_letter(family);
        s += " a=" + to_string(a);
        if (family == Family::B) s += " b=" + to_string(b);
        s += " omega=" + to_string(omega);
        return s;
    }
};

}  // namespace calogero

#endif
