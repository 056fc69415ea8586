#ifndef CALOGERO_CONSTRUCT_HPP
#define CALOGERO_CONSTRUCT_HPP

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "calogero/dunkl.hpp"
#include "calogero/params.hpp"
#include "calogero/poly.hpp"
#include "calogero/weyl.hpp"

namespace calogero::construct {

using weyl::Composition;

// A constructed joint eigenvector: monic at x^label, with the eigenvalue of
// each Cherednik operator d_j attached.
struct LabeledPoly {
    Poly poly;
    Composition label;
    Params params;
    std::vector<Rational> eigenvalues;

    nlohmann::json to_json() const;
};

struct SymLabeledPoly {
    Poly poly;
    Composition label;
    Params params;
    int sign;  // +1 symmetric, -1 antisymmetric

    nlohmann::json to_json() const;
};

// Eigenvalue of d_j on h_mu: <eps_j, mu + a delta(mu)> for family A,
// <eps_j, mu + rho_k^B(mu)> for family B.
std::vector<Rational> cherednik_eigenvalues(const Params& params,
                                            const Composition& mu);

// Top coefficient c_mu for a partition (raising-operator normalization).
Rational top_coeff_partition(const Params& params, const Composition& mu_plus);

// Top coefficient c_{w_mu} for the braid sweep from mu_plus to mu.
// Throws SingularParameter when a denominator pairing vanishes.
Rational top_coeff_word(const Params& params, const Composition& mu);

// Expansion K_j h_mu = c_self h_mu + c_other h_{s_j(mu)}.
std::pair<Rational, Rational> k_action_expand(const Params& params,
                                              const Composition& mu, int j);

// Coefficient of S_j h_mu = coef * h_{s_j(mu)} (zero when <alpha_j,mu> = 0).
Rational braid_action_coeff(const Params& params, const Composition& mu,
                            int j);

bool sector_admissible(Family family, int sign, const Composition& mu_plus);
void require_sector(Family family, int sign, const Composition& mu_plus);

// Coefficient b_{mu_plus,mu}^{sign} of the (anti-)symmetrization.
Rational sym_coeff(const Params& params, const Composition& mu_plus,
                   const Composition& mu, int sign);

// Builds h_mu / H_mu^{sign}, caching whole orbits: the partition member is
// produced once via the raising operators, the rest by single braid steps.
class Builder {
public:
    explicit Builder(Params params) : params_(std::move(params)) {}

    const Params& params() const { return params_; }

    LabeledPoly nonsym(const Composition& mu);
    SymLabeledPoly sym(const Composition& mu_plus, int sign);

private:
    const Poly& cached(const Composition& mu);

    Params params_;
    std::map<Composition, Poly> cache_;
};

// One-shot conveniences.
LabeledPoly nonsym_poly(const Params& params, const Composition& mu);
SymLabeledPoly sym_poly(const Params& params, const Composition& mu_plus,
                        int sign);

// Difference products.
Poly vandermonde(int N);          // prod_{i<j} (x_i - x_j)
Poly vandermonde_squares(int N);  // prod_{i<j} (x_i^2 - x_j^2)
Poly variable_product(int N);     // prod_i x_i

// Parameter-shift identity report: each named relation compared exactly.
struct ShiftCheck {
    std::string relation;
    bool equal;
    Poly difference;
};

// Family A: Delta * H^+_mu(a+1) vs H^-_{mu+delta}(a), mu in P_+.
// Family B: the three chained relations anchored at couplings (a, b),
// mu in 2P_+.
std::vector<ShiftCheck> parameter_shift_check(const Params& params,
                                              const Composition& mu_plus);

}  // namespace calogero::construct

#endif
