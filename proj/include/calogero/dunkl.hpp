#ifndef CALOGERO_DUNKL_HPP
#define CALOGERO_DUNKL_HPP

#include <vector>

#include "calogero/params.hpp"
#include "calogero/poly.hpp"
#include "calogero/weyl.hpp"

// The operator tower: Dunkl operators, creation/annihilation pair,
// Cherednik operators, Knop-Sahi and braid operators, raising operators,
// and the transformed Hamiltonians.  Everything is a pure function on Poly.
namespace calogero::dunkl {

// Dunkl operator nabla_j; lowers degree by one.
Poly dunkl_apply(const Params& params, int j, const Poly& p);

// alpha_l = nabla_l / (2 omega);  alpha_l^dag = x_l - nabla_l / (2 omega).
Poly alpha(const Params& params, int l, const Poly& p);
Poly alpha_dagger(const Params& params, int l, const Poly& p);

// Cherednik operator d_j; degree preserving.
Poly cherednik_d(const Params& params, int j, const Poly& p);

// d^lambda = sum_j lambda_j d_j; lambda must be integral.
Poly cherednik_weighted(const Params& params, const std::vector<int>& lambda,
                        const Poly& p);

// t^lambda = t_1^{lambda_1} ... t_N^{lambda_N}.
Poly reflect_weighted(const std::vector<int>& lambda, const Poly& p);

// Knop-Sahi intertwiners: e = alpha_1 K_1 K_2 ... K_{N-1},
// e^dag = K_{N-1} ... K_2 K_1 alpha_1^dag.
Poly knop_sahi_e(const Params& params, const Poly& p);
Poly knop_sahi_e_dagger(const Params& params, const Poly& p);

// Braid operator S_j = [K_j, d_j].
Poly braid_S(const Params& params, int j, const Poly& p);

// S_{w} for a word: letters applied left-to-right means S_{j_1} acts first.
Poly braid_S_word(const Params& params, const weyl::ReducedWord& w,
                  const Poly& p);

// Raising operators A_j^dag = (S_j S_{j+1} ... S_{N-1} e^dag)^j and
// A_mu^dag = prod_j (A_j^dag)^{mu_j - mu_{j+1}}.
Poly raising_A_dagger(const Params& params, int j, const Poly& p);
Poly raising_A_mu_dagger(const Params& params, const weyl::Composition& mu_plus,
                         const Poly& p);

// Transformed Hamiltonian: omega * sum_l (d_l - ground shift).
Poly hamiltonian_apply(const Params& params, const Poly& p);

}  // namespace calogero::dunkl

#endif
