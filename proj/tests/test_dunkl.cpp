// Operator tower: Dunkl, creation/annihilation, Cherednik, Knop-Sahi,
// braid, and raising operators, plus their exchange relations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "calogero/construct.hpp"
#include "calogero/dunkl.hpp"

using namespace calogero;
using namespace calogero::dunkl;

namespace {

Poly x(int N, int j) {
    Poly::Exponents e(N, 0);
    e[j - 1] = 1;
    return Poly::monomial(e);
}

Poly random_poly(std::mt19937& rng, int N, int maxdeg) {
    std::uniform_int_distribution<int> expd(0, maxdeg);
    std::uniform_int_distribution<int> coeffd(-9, 9);
    Poly p(N);
    for (int t = 0; t < 5; ++t) {
        Poly::Exponents e(N);
        int budget = maxdeg;
        for (int i = 0; i < N; ++i) {
            e[i] = std::min(expd(rng), budget);
            budget -= e[i];
        }
        int c = coeffd(rng);
        if (c == 0) c = 1;
        p.add_term(e, c);
    }
    return p;
}

const Params kA{Family::A, Rational(3, 7), Rational(1, 2)};
const Params kB{Family::B, Rational(3, 7), Rational(2, 5), Rational(1, 2)};

std::vector<Params> generic_points(Family fam) {
    if (fam == Family::A)
        return {Params(fam, Rational(3, 7), Rational(1, 2)),
                Params(fam, Rational(5, 3), Rational(1)),
                Params(fam, Rational(7, 11), Rational(2, 3))};
    return {Params(fam, Rational(3, 7), Rational(2, 5), Rational(1, 2)),
            Params(fam, Rational(5, 3), Rational(1, 4), Rational(1)),
            Params(fam, Rational(7, 11), Rational(3, 2), Rational(2, 3))};
}

}  // namespace

TEST_CASE("Dunkl operator on linear monomials") {
    const Rational a = kA.a;
    CHECK(dunkl_apply(kA, 1, x(2, 1)) == Poly::constant(2, 1 + a));
    CHECK(dunkl_apply(kA, 1, x(2, 2)) == Poly::constant(2, -a));
    CHECK(dunkl_apply(kA, 1, Poly::constant(2, 1)).is_zero());
    CHECK(dunkl_apply(kB, 1, Poly::constant(2, 1)).is_zero());
}

TEST_CASE("creation and annihilation pair") {
    CHECK(alpha(kA, 1, Poly::constant(2, 1)).is_zero());
    CHECK(alpha_dagger(kA, 1, Poly::constant(2, 1)) == x(2, 1));
    // alpha_1(x1) = (1 + a)/(2 omega)
    const Rational expect = (1 + kA.a) / (2 * kA.omega);
    CHECK(alpha(kA, 1, x(2, 1)) == Poly::constant(2, expect));
}

TEST_CASE("Cherednik operators on linear monomials") {
    const Rational a = kA.a;
    CHECK(cherednik_d(kA, 2, x(2, 2)) == x(2, 2) * (1 + a));
    CHECK(cherednik_d(kA, 1, x(2, 2)).is_zero());
}

TEST_CASE("Cherednik operators on constants") {
    for (int N = 2; N <= 4; ++N) {
        const Poly one = Poly::constant(N, 1);
        for (int j = 1; j <= N; ++j) {
            CHECK(cherednik_d(kA, j, one) ==
                  Poly::constant(N, kA.a * (N - j)));
            CHECK(cherednik_d(kB, j, one) ==
                  Poly::constant(N, 2 * kB.a * (N - j) + kB.b));
        }
    }
}

TEST_CASE("weighted Cherednik operator") {
    const int N = 3;
    const Poly one = Poly::constant(N, 1);
    CHECK(cherednik_weighted(kA, {0, 0, 0}, one).is_zero());
    CHECK(cherednik_weighted(kA, {1, 0, 0}, one) ==
          Poly::constant(N, kA.a * (N - 1)));
    // sum of all d_l equals H/omega plus the ground shift N * a(N-1)/2
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const Poly p = random_poly(rng, N, 4);
        const Poly lhs = cherednik_weighted(kA, {1, 1, 1}, p);
        Poly rhs = hamiltonian_apply(kA, p) * (Rational(1) / kA.omega);
        rhs += p * (Rational(N) * kA.a * (N - 1) / 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Knop-Sahi operators") {
    CHECK(knop_sahi_e_dagger(kA, Poly::constant(2, 1)) == x(2, 2));
    CHECK(knop_sahi_e(kA, Poly::constant(2, 1)).is_zero());
    // 2 omega e^dag e equals 2 omega a_N^dag a_N by conjugation through the
    // cycle: that is d_N for family A, and d_N - b t_N for family B
    const Poly p = x(2, 2);
    CHECK(knop_sahi_e_dagger(kA, knop_sahi_e(kA, p)) * (2 * kA.omega) ==
          cherednik_d(kA, 2, p));
    const Poly q = x(2, 1) * x(2, 1) + x(2, 2) * Rational(1, 3);
    CHECK(knop_sahi_e_dagger(kB, knop_sahi_e(kB, q)) * (2 * kB.omega) ==
          cherednik_d(kB, 2, q) - q.reflect(2) * kB.b);
}

TEST_CASE("braid operator basics") {
    CHECK(braid_S(kA, 1, Poly::constant(2, 1)).is_zero());
    CHECK(braid_S(kB, 1, Poly::constant(2, 1)).is_zero());
    // (S_1)^2 = a^2 - (d_1 - d_2)^2 applied to x2
    const Poly p = x(2, 2);
    const Poly lhs = braid_S(kA, 1, braid_S(kA, 1, p));
    const Poly diff =
        cherednik_d(kA, 1, p) - cherednik_d(kA, 2, p);  // (d1-d2)p, p eigen
    Poly rhs = p * (kA.a * kA.a);
    const Poly d12 = cherednik_d(kA, 1, diff) - cherednik_d(kA, 2, diff);
    rhs -= d12;
    CHECK(lhs == rhs);
}

TEST_CASE("braid relation for both families") {
    std::mt19937 rng(17);
    for (Family fam : {Family::A, Family::B}) {
        const Params& P = fam == Family::A ? kA : kB;
        for (int trial = 0; trial < 5; ++trial) {
            const Poly p = random_poly(rng, 3, 3);
            auto S = [&](int j, const Poly& q) { return braid_S(P, j, q); };
            CHECK(S(1, S(2, S(1, p))) == S(2, S(1, S(2, p))));
        }
    }
}

TEST_CASE("Cherednik commutation and exchange relations") {
    std::mt19937 rng(23);
    for (Family fam : {Family::A, Family::B}) {
        for (const Params& P : generic_points(fam)) {
            for (int N = 2; N <= 3; ++N) {
                const Poly p = random_poly(rng, N, 4);
                for (int j = 1; j <= N; ++j)
                    for (int k = j + 1; k <= N; ++k)
                        CHECK(cherednik_d(P, j, cherednik_d(P, k, p)) ==
                              cherednik_d(P, k, cherednik_d(P, j, p)));
                for (int l = 1; l < N; ++l) {
                    // d_l K_l - K_l d_{l+1} = a (resp. a(1 + t_l t_{l+1}))
                    const Poly lhs =
                        cherednik_d(P, l, p.exchange(l, l + 1)) -
                        cherednik_d(P, l + 1, p).exchange(l, l + 1);
                    Poly rhs = p * P.a;
                    if (fam == Family::B)
                        rhs += p.reflect(l).reflect(l + 1) * P.a;
                    CHECK(lhs == rhs);
                }
                if (fam == Family::B)
                    for (int l = 1; l <= N; ++l)
                        for (int m = 1; m <= N; ++m)
                            CHECK(cherednik_d(P, l, p.reflect(m)) ==
                                  cherednik_d(P, l, p).reflect(m));
            }
        }
    }
}

TEST_CASE("intertwining relations of the braid and raising operators") {
    std::mt19937 rng(29);
    for (Family fam : {Family::A, Family::B}) {
        const Params& P = fam == Family::A ? kA : kB;
        const int N = 3;
        const Poly p = random_poly(rng, N, 3);
        // S_j e^dag = e^dag S_{j+1} for j <= N-2
        CHECK(braid_S(P, 1, knop_sahi_e_dagger(P, p)) ==
              knop_sahi_e_dagger(P, braid_S(P, 2, p)));
        // S_{N-1} (e^dag)^2 = (e^dag)^2 S_1
        CHECK(braid_S(P, 2,
                      knop_sahi_e_dagger(P, knop_sahi_e_dagger(P, p))) ==
              knop_sahi_e_dagger(
                  P, knop_sahi_e_dagger(P, braid_S(P, 1, p))));
        // d^lambda e^dag = e^dag (d^{sigma lambda} + lambda_N)
        const std::vector<int> lam{2, -1, 3};
        const std::vector<int> slam{3, 2, -1};  // last entry cycled to front
        CHECK(cherednik_weighted(P, lam, knop_sahi_e_dagger(P, p)) ==
              knop_sahi_e_dagger(P, cherednik_weighted(P, slam, p) +
                                        p * Rational(lam[N - 1])));
        // S_j d^lambda = d^{s_j lambda} S_j
        const std::vector<int> s1lam{-1, 2, 3};
        CHECK(braid_S(P, 1, cherednik_weighted(P, lam, p)) ==
              cherednik_weighted(P, s1lam, braid_S(P, 1, p)));
    }
}

TEST_CASE("raising operators shift the Cherednik spectrum") {
    std::mt19937 rng(31);
    for (Family fam : {Family::A, Family::B}) {
        const Params& P = fam == Family::A ? kA : kB;
        const int N = 3;
        const weyl::Composition mu{2, 1, 0};
        const std::vector<int> lam{1, 0, 2};
        const Poly p = random_poly(rng, N, 2);
        const Rational pairing = 1 * 2 + 0 * 1 + 2 * 0;
        // d^lambda A_mu^dag = A_mu^dag (d^lambda + <lambda, mu>)
        CHECK(cherednik_weighted(P, lam, raising_A_mu_dagger(P, mu, p)) ==
              raising_A_mu_dagger(P, mu,
                                  cherednik_weighted(P, lam, p) +
                                      p * pairing));
        // commutativity of raising operators
        const weyl::Composition nu{1, 1, 0};
        CHECK(raising_A_mu_dagger(P, mu, raising_A_mu_dagger(P, nu, p)) ==
              raising_A_mu_dagger(P, nu, raising_A_mu_dagger(P, mu, p)));
        // A_0^dag is the identity
        CHECK(raising_A_mu_dagger(P, {0, 0, 0}, p) == p);
    }
    // family B: t^lambda A_mu^dag = (-1)^{<lambda,mu>} A_mu^dag t^lambda
    std::mt19937 rng2(37);
    const Poly p = random_poly(rng2, 2, 2);
    const weyl::Composition mu{2, 1};
    const std::vector<int> lam{1, 0};  // <lambda, mu> = 2, even
    CHECK(reflect_weighted(lam, raising_A_mu_dagger(kB, mu, p)) ==
          raising_A_mu_dagger(kB, mu, reflect_weighted(lam, p)));
    const std::vector<int> lam2{0, 1};  // <lambda2, mu> = 1, odd
    CHECK(reflect_weighted(lam2, raising_A_mu_dagger(kB, mu, p)) ==
          -raising_A_mu_dagger(kB, mu, reflect_weighted(lam2, p)));
}

TEST_CASE("transformed Hamiltonian") {
    CHECK(hamiltonian_apply(kA, Poly::constant(2, 1)).is_zero());
    CHECK(hamiltonian_apply(kB, Poly::constant(2, 1)).is_zero());
    const Poly sum = x(2, 1) + x(2, 2);
    CHECK(hamiltonian_apply(kA, sum) == sum * kA.omega);
    const Poly h10 = construct::nonsym_poly(kA, {1, 0}).poly;
    CHECK(hamiltonian_apply(kA, h10) == h10 * kA.omega);
}
