#ifndef CALOGERO_WEYL_HPP
#define CALOGERO_WEYL_HPP

#include <utility>
#include <vector>

#include "calogero/rational.hpp"

namespace calogero::weyl {

// A composition: N non-negative integer exponents. A partition is a
// composition sorted weakly decreasing.
using Composition = std::vector<int>;

// A word in the simple transpositions s_1..s_{N-1}, stored in application
// order: apply_word(w, v) applies letters[0] first.  For the element
// w = s_{j_l} ... s_{j_2} s_{j_1} the stored sequence is [j_1, ..., j_l].
struct ReducedWord {
    int n = 0;                 // number of variables N
    std::vector<int> letters;  // each in 1..N-1

    std::size_t length() const { return letters.size(); }
};

// Vector over the epsilon-basis with rational coordinates.
using RootVector = std::vector<Rational>;

int degree(const Composition& mu);
bool is_partition(const Composition& mu);

// s_j: swaps entries j and j+1 (1-based j).
Composition apply_transposition(Composition v, int j);
RootVector apply_transposition(RootVector v, int j);

// Applies the word's letters in order (letters[0] first).
Composition apply_word(const ReducedWord& w, Composition v);
RootVector apply_word(const ReducedWord& w, RootVector v);

// The permutation realized by w, as the image of (0, 1, ..., N-1).
std::vector<int> word_to_permutation(const ReducedWord& w);

// Number of inversions of the permutation realized by w.  Equals the length
// of the Weyl-group element; a word is reduced iff this equals letters.size().
std::size_t inversion_count(const ReducedWord& w);

// Returns (mu_plus, w_mu) with apply_word(w_mu, mu_plus) == mu and w_mu the
// shortest such word (stable sort fixes ties among equal entries).
std::pair<Composition, ReducedWord> sort_to_partition(const Composition& mu);

// R_w = {alpha_{j_1}, s_{j_1}(alpha_{j_2}), ...}.  Throws
// std::invalid_argument when the word is not reduced.
std::vector<RootVector> inversion_set(const ReducedWord& w);

enum class Order { Equal, Less, Greater, Incomparable };

// The order on compositions: dominance of sorted representatives across
// orbits, positive-root-lattice difference within an orbit.
Order order_compare(const Composition& nu, const Composition& mu);

// All distinct rearrangements of a partition, each with its shortest word.
std::vector<std::pair<Composition, ReducedWord>> weyl_orbit(
    const Composition& mu_plus);

RootVector rho(int N);    // rho_j = (N - 2j + 1)/2
RootVector delta(int N);  // delta_j = N - j
RootVector rho_kB(int N, const Rational& a, const Rational& b);  // 2a(N-j)+b

RootVector simple_root(int N, int j);             // eps_j - eps_{j+1}
RootVector coroot(const RootVector& alpha);       // 2 alpha / <alpha,alpha>
Rational inner(const RootVector& u, const RootVector& v);
Rational inner(const RootVector& u, const Composition& mu);

// Length generating function of S_N by direct enumeration; coefficient of
// t^k at index k.  Throws std::invalid_argument when N exceeds the bound.
std::vector<long> poincare_polynomial(int N, int bound = 8);

}  // namespace calogero::weyl

#endif
