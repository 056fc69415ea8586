#include "calogero/dunkl.hpp"

#include <stdexcept>

namespace calogero::dunkl {

Poly dunkl_apply(const Params& params, int j, const Poly& p) {
    const int n = p.nvars();
    if (j < 1 || j > n) throw std::out_of_range("dunkl index out of range");
    Poly r = p.partial(j);
    for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        r += params.a * p.diffquot_minus(j, k);
        if (params.family == Family::B)
            r += params.a * p.diffquot_plus(j, k);
    }
    if (params.family == Family::B)
        r += params.b * p.diffquot_reflect(j);
    return r;
}

Poly alpha(const Params& params, int l, const Poly& p) {
    return Rational(1) / (2 * params.omega) * dunkl_apply(params, l, p);
}

Poly alpha_dagger(const Params& params, int l, const Poly& p) {
    Poly::Exponents xl(p.nvars(), 0);
    xl[l - 1] = 1;
    return Poly::monomial(xl) * p - alpha(params, l, p);
}

Poly cherednik_d(const Params& params, int j, const Poly& p) {
    const int n = p.nvars();
    Poly r = 2 * params.omega * alpha_dagger(params, j, alpha(params, j, p));
    for (int k = j + 1; k <= n; ++k) {
        Poly ex = p.exchange(j, k);
        if (params.family == Family::B) ex += ex.reflect(j).reflect(k);
        r += params.a * ex;
    }
    if (params.family == Family::B) r += params.b * p.reflect(j);
    return r;
}

Poly cherednik_weighted(const Params& params, const std::vector<int>& lambda,
                        const Poly& p) {
    if (static_cast<int>(lambda.size()) != p.nvars())
        throw std::invalid_argument("lambda of wrong length");
    Poly r(p.nvars());
    for (int j = 1; j <= p.nvars(); ++j)
        if (lambda[j - 1] != 0)
            r += Rational(lambda[j - 1]) * cherednik_d(params, j, p);
    return r;
}

Poly reflect_weighted(const std::vector<int>& lambda, const Poly& p) {
    if (static_cast<int>(lambda.size()) != p.nvars())
        throw std::invalid_argument("lambda of wrong length");
    Poly r = p;
    for (int j = 1; j <= p.nvars(); ++j)
        if (lambda[j - 1] % 2 != 0) r = r.reflect(j);
    return r;
}

Poly knop_sahi_e(const Params& params, const Poly& p) {
    // alpha_1 K_1 K_2 ... K_{N-1}: rightmost factor acts first.
    Poly r = p;
    for (int j = p.nvars() - 1; j >= 1; --j) r = r.exchange(j, j + 1);
    return alpha(params, 1, r);
}

Poly knop_sahi_e_dagger(const Params& params, const Poly& p) {
    Poly r = alpha_dagger(params, 1, p);
    for (int j = 1; j <= p.nvars() - 1; ++j) r = r.exchange(j, j + 1);
    return r;
}

Poly braid_S(const Params& params, int j, const Poly& p) {
    if (j < 1 || j >= p.nvars())
        throw std::out_of_range("braid index out of range");
    return cherednik_d(params, j, p).exchange(j, j + 1) -
           cherednik_d(params, j, p.exchange(j, j + 1));
}

Poly braid_S_word(const Params& params, const weyl::ReducedWord& w,
                  const Poly& p) {
    Poly r = p;
    for (int j : w.letters) r = braid_S(params, j, r);
    return r;
}

Poly raising_A_dagger(const Params& params, int j, const Poly& p) {
    const int n = p.nvars();
    if (j < 1 || j > n) throw std::out_of_range("raising index out of range");
    Poly r = p;
    for (int rep = 0; rep < j; ++rep) {
        r = knop_sahi_e_dagger(params, r);
        for (int s = n - 1; s >= j; --s) r = braid_S(params, s, r);
    }
    return r;
}

Poly raising_A_mu_dagger(const Params& params,
                         const weyl::Composition& mu_plus, const Poly& p) {
    const int n = p.nvars();
    if (static_cast<int>(mu_plus.size()) != n)
        throw std::invalid_argument("partition of wrong length");
    if (!weyl::is_partition(mu_plus))
        throw std::invalid_argument("raising_A_mu_dagger expects a partition");
    // Rightmost factor (A_N^dag)^{mu_N} acts first; the factors commute.
    Poly r = p;
    for (int j = n; j >= 1; --j) {
        const int reps = mu_plus[j - 1] - (j < n ? mu_plus[j] : 0);
        for (int rep = 0; rep < reps; ++rep)
            r = raising_A_dagger(params, j, r);
    }
    return r;
}

Poly hamiltonian_apply(const Params& params, const Poly& p) {
    const int n = p.nvars();
    const Rational shift = params.family == Family::A
                               ? Rational(params.a * (n - 1) / 2)
                               : Rational(params.a * (n - 1) + params.b);
    Poly r(n);
    for (int l = 1; l <= n; ++l) {
        r += cherednik_d(params, l, p);
        r -= shift * p;
    }
    return params.omega * r;
}

}  // namespace calogero::dunkl
