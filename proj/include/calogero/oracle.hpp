#ifndef CALOGERO_ORACLE_HPP
#define CALOGERO_ORACLE_HPP

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <nlohmann/json_fwd.hpp>

#include "calogero/params.hpp"
#include "calogero/poly.hpp"
#include "calogero/weyl.hpp"

// Independent verification machinery: a construction-free triangular
// eigensolver on the monomial basis, and Gaussian-quadrature inner products
// for integer couplings.
namespace calogero::oracle {

using weyl::Composition;
using Float = boost::multiprecision::mpfr_float;

// Matrix shadow of the commuting operators d_1..d_N on the monomial basis of
// degree <= cutoff, in graded lexicographic order.
struct OperatorMatrix {
    Params params;
    int N;
    int cutoff;
    std::vector<Composition> basis;      // graded lex
    std::map<Composition, int> index;

    // rows[j-1][r] = sparse row r of d_j as (column, coefficient) pairs.
    using Row = std::vector<std::pair<int, Rational>>;
    std::vector<std::vector<Row>> rows;

    // Block triangularity with respect to the order extended by degree:
    // every nonzero entry (r, c) has basis[r] below-or-equal basis[c].
    bool triangular(int j) const;
};

// Cached per (params, N, cutoff); reference stays valid for process life.
const OperatorMatrix& operator_matrix(const Params& params, int N,
                                      int cutoff);

// Solves (d_j - lambda_j) h = 0 for all j by back-substitution, monic at
// x^mu.  Independent of the Rodrigues construction.  Throws
// DegenerateEigenvalue when a pivot vanishes with a nonzero residue.
Poly triangular_eigensolve(const Params& params, const Composition& mu,
                           int cutoff);

struct GramMatrix {
    std::vector<std::vector<Float>> entries;
    int node_count = 0;
    unsigned precision = 0;
};

// G[i][j] = integral of |weight|^2 p_i p_j by tensor-product Gauss-Hermite
// quadrature; exact up to rounding for integer couplings (throws
// NonIntegerCoupling otherwise).  nodes = 0 picks the minimal exact rule.
GramMatrix quadrature_gram(const Params& params,
                           const std::vector<Poly>& polys, int nodes = 0,
                           unsigned precision = 40);

// Single inner product <f, g> by the same rule.
Float quadrature_inner(const Params& params, const Poly& f, const Poly& g,
                       int nodes = 0, unsigned precision = 40);

// Batch run of the module invariants; JSON array of
// {check, family, N, params, status, detail}.
nlohmann::json verify_suite(const Params& params, int N, int max_degree);

bool report_all_pass(const nlohmann::json& report);

}  // namespace calogero::oracle

#endif
