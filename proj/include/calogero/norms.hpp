#ifndef CALOGERO_NORMS_HPP
#define CALOGERO_NORMS_HPP

#include <utility>

#include <boost/multiprecision/mpfr.hpp>

#include "calogero/params.hpp"
#include "calogero/weyl.hpp"

namespace calogero::norms {

using weyl::Composition;
using Float = boost::multiprecision::mpfr_float;

// Gamma(x0 + n) / Gamma(x0) as an exact rational; n may be negative.
// Throws PoleEncountered when a factor vanishes.
Rational gamma_ratio(const Rational& x0, long n);

// <h_mu, h_mu> / <h_0, h_0>, exact.
Rational norm_ratio_nonsym(const Params& params, const Composition& mu);

// <H_mu^sign, H_mu^sign> / <h_0, h_0>, exact.  Throws InvalidSector for
// labels outside the admissible sublattice.
Rational norm_ratio_sym(const Params& params, const Composition& mu_plus,
                        int sign);

// Floating evaluation of the closed-form ground-state norm <h_0, h_0>.
Float base_norm_float(const Params& params, int N, unsigned digits = 40);

// Orbit-sum identity behind the symmetric norms: returns (lhs, rhs), equal
// when the identity holds.
std::pair<Rational, Rational> poincare_identity_check(int N,
                                                      const Composition& mu,
                                                      const Params& params,
                                                      int sign);

// q-deformed orbit-sum identity at exact rational (t, q); requires integer
// coupling a (throws IrrationalExponent otherwise).
std::pair<Rational, Rational> macdonald_identity_check(int N,
                                                       const Composition& mu,
                                                       const Params& params,
                                                       const Rational& t,
                                                       const Rational& q);

}  // namespace calogero::norms

#endif
