#include "calogero/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace calogero::weyl {

int degree(const Composition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

bool is_partition(const Composition& mu) {
    return std::is_sorted(mu.begin(), mu.end(), std::greater<int>());
}

namespace {

void check_letter(int n, int j) {
    if (j < 1 || j >= n)
        throw std::out_of_range("transposition index out of range");
}

}  // namespace

Composition apply_transposition(Composition v, int j) {
    check_letter(static_cast<int>(v.size()), j);
    std::swap(v[j - 1], v[j]);
    return v;
}

RootVector apply_transposition(RootVector v, int j) {
    check_letter(static_cast<int>(v.size()), j);
    std::swap(v[j - 1], v[j]);
    return v;
}

Composition apply_word(const ReducedWord& w, Composition v) {
    for (int j : w.letters) v = apply_transposition(std::move(v), j);
    return v;
}

RootVector apply_word(const ReducedWord& w, RootVector v) {
    for (int j : w.letters) v = apply_transposition(std::move(v), j);
    return v;
}

std::vector<int> word_to_permutation(const ReducedWord& w) {
    std::vector<int> perm(w.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int j : w.letters) std::swap(perm[j - 1], perm[j]);
    return perm;
}

std::size_t inversion_count(const ReducedWord& w) {
    const auto perm = word_to_permutation(w);
    std::size_t count = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t k = i + 1; k < perm.size(); ++k)
            if (perm[i] > perm[k]) ++count;
    return count;
}

std::pair<Composition, ReducedWord> sort_to_partition(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    // Bubble-sort mu into descending order, swapping only strictly
    // increasing adjacent pairs; the swap count equals the number of strict
    // inversions, so the word below is reduced and shortest.
    Composition v = mu;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 1; j < n; ++j) {
            if (v[j - 1] < v[j]) {
                std::swap(v[j - 1], v[j]);
                swaps.push_back(j);
                moved = true;
            }
        }
    }
    // swaps applied in order take mu to mu_plus; the reverse takes mu_plus
    // back to mu, which is the application order of w_mu.
    ReducedWord w;
    w.n = n;
    w.letters.assign(swaps.rbegin(), swaps.rend());
    return {std::move(v), std::move(w)};
}

std::vector<RootVector> inversion_set(const ReducedWord& w) {
    if (inversion_count(w) != w.length())
        throw std::invalid_argument("word is not reduced");
    std::vector<RootVector> roots;
    roots.reserve(w.length());
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        RootVector r = simple_root(w.n, w.letters[k]);
        // s_{j_1} s_{j_2} ... s_{j_{k-1}} (alpha_{j_k}): innermost first.
        for (std::size_t i = k; i-- > 0;)
            r = apply_transposition(std::move(r), w.letters[i]);
        roots.push_back(std::move(r));
    }
    return roots;
}

namespace {

// nu strictly dominated by mu among partitions of equal degree.
bool dominated(const Composition& nu, const Composition& mu) {
    if (nu == mu || degree(nu) != degree(mu)) return false;
    long pnu = 0, pmu = 0;
    for (std::size_t l = 0; l < mu.size(); ++l) {
        pnu += nu[l];
        pmu += mu[l];
        if (pnu > pmu) return false;
    }
    return true;
}

// mu - nu in the positive root lattice Q_+.
bool diff_in_Qplus(const Composition& nu, const Composition& mu) {
    long partial = 0;
    for (std::size_t l = 0; l < mu.size(); ++l) {
        partial += mu[l] - nu[l];
        if (partial < 0) return false;
    }
    return partial == 0;
}

}  // namespace

Order order_compare(const Composition& nu, const Composition& mu) {
    if (nu.size() != mu.size())
        throw std::invalid_argument("compositions of different length");
    if (nu == mu) return Order::Equal;
    Composition nup = nu, mup = mu;
    std::sort(nup.begin(), nup.end(), std::greater<int>());
    std::sort(mup.begin(), mup.end(), std::greater<int>());
    if (nup == mup) {
        if (diff_in_Qplus(nu, mu)) return Order::Less;
        if (diff_in_Qplus(mu, nu)) return Order::Greater;
        return Order::Incomparable;
    }
    if (dominated(nup, mup)) return Order::Less;
    if (dominated(mup, nup)) return Order::Greater;
    return Order::Incomparable;
}

std::vector<std::pair<Composition, ReducedWord>> weyl_orbit(
    const Composition& mu_plus) {
    if (!is_partition(mu_plus))
        throw std::invalid_argument("weyl_orbit expects a partition");
    std::vector<std::pair<Composition, ReducedWord>> orbit;
    Composition v = mu_plus;
    do {
        orbit.emplace_back(v, sort_to_partition(v).second);
    } while (std::prev_permutation(v.begin(), v.end()));
    return orbit;
}

RootVector rho(int N) {
    RootVector r(N);
    for (int j = 1; j <= N; ++j) {
        // the two-argument constructor does not reduce the fraction
        Rational half(N - 2 * j + 1, 2);
        half.canonicalize();
        r[j - 1] = half;
    }
    return r;
}

RootVector delta(int N) {
    RootVector r(N);
    for (int j = 1; j <= N; ++j) r[j - 1] = N - j;
    return r;
}

RootVector rho_kB(int N, const Rational& a, const Rational& b) {
    RootVector r(N);
    for (int j = 1; j <= N; ++j) r[j - 1] = 2 * a * (N - j) + b;
    return r;
}

RootVector simple_root(int N, int j) {
    check_letter(N, j);
    RootVector r(N, Rational(0));
    r[j - 1] = 1;
    r[j] = -1;
    return r;
}

RootVector coroot(const RootVector& alpha) {
    Rational norm2 = inner(alpha, alpha);
    if (norm2 == 0) throw std::invalid_argument("coroot of zero vector");
    RootVector r = alpha;
    for (auto& c : r) c = 2 * c / norm2;
    return r;
}

Rational inner(const RootVector& u, const RootVector& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rational inner(const RootVector& u, const Composition& mu) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * mu[i];
    return s;
}

std::vector<long> poincare_polynomial(int N, int bound) {
    if (N < 1 || N > bound)
        throw std::invalid_argument("poincare_polynomial: N out of bounds");
    const int maxlen = N * (N - 1) / 2;
    std::vector<long> coeffs(maxlen + 1, 0);
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < N; ++i)
            for (int k = i + 1; k < N; ++k)
                if (perm[i] > perm[k]) ++inv;
        ++coeffs[inv];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coeffs;
}

}  // namespace calogero::weyl
