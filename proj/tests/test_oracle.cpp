// Independent verification machinery: triangular eigensolver, quadrature
// Gram matrices, and the batch check suite.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "calogero/construct.hpp"
#include "calogero/errors.hpp"
#include "calogero/norms.hpp"
#include "calogero/oracle.hpp"

using namespace calogero;
using namespace calogero::oracle;

namespace {

Poly x(int N, int j) {
    Poly::Exponents e(N, 0);
    e[j - 1] = 1;
    return Poly::monomial(e);
}

const Params kA{Family::A, Rational(3, 7), Rational(1, 2)};
const Params kB{Family::B, Rational(3, 7), Rational(2, 5), Rational(1, 2)};

std::vector<Composition> compositions(int N, int deg) {
    std::vector<Composition> out;
    Composition cur(N, 0);
    while (true) {
        if (weyl::degree(cur) <= deg) out.push_back(cur);
        int k = 0;
        while (k < N && ++cur[k] > deg) cur[k++] = 0;
        if (k == N) break;
    }
    return out;
}

}  // namespace

TEST_CASE("operator matrices are triangular in the graded order") {
    for (const Params& P : {kA, kB}) {
        const auto& M = operator_matrix(P, 3, 3);
        for (int j = 1; j <= 3; ++j) CHECK(M.triangular(j));
        CHECK(M.basis.size() == 20);  // monomials in 3 variables, degree <= 3
        CHECK(M.basis.front() == Composition{0, 0, 0});
    }
}

TEST_CASE("triangular eigensolver, small cases") {
    CHECK(triangular_eigensolve(kA, {0, 0}, 2) == Poly::constant(2, 1));
    CHECK(triangular_eigensolve(kA, {1, 0}, 3) ==
          x(2, 1) + x(2, 2) * Rational(3, 10));
    CHECK(triangular_eigensolve(kA, {0, 1}, 3) == x(2, 2));
    CHECK_THROWS_AS(triangular_eigensolve(kA, {3, 0}, 2),
                    std::invalid_argument);  // cutoff below the label
}

TEST_CASE("eigensolver agrees with the construction") {
    for (const Params& P : {kA, kB}) {
        construct::Builder builder(P);
        for (int N = 2; N <= 3; ++N)
            for (const auto& mu : compositions(N, 4))
                CHECK(triangular_eigensolve(P, mu, 4) ==
                      builder.nonsym(mu).poly);
    }
}

TEST_CASE("a perturbed polynomial is rejected by the eigen equations") {
    const auto lp = construct::nonsym_poly(kA, {2, 0});
    Poly bad = lp.poly;
    bad.add_term({0, 1}, Rational(1, 3));  // inject a wrong lower term
    CHECK(!(triangular_eigensolve(kA, {2, 0}, 3) == bad));
    bool eigen_ok = true;
    for (int j = 1; j <= 2; ++j)
        if (!(dunkl::cherednik_d(kA, j, bad) ==
              bad * lp.eigenvalues[j - 1]))
            eigen_ok = false;
    CHECK(!eigen_ok);
}

TEST_CASE("quadrature of the plain Gaussian weight") {
    Float::default_precision(50);  // reference constants need headroom
    {
        const Params P(Family::A, Rational(1), Rational(1));
        const auto G =
            quadrature_gram(P, {Poly::constant(1, 1)}, 0, 40);
        const Float pi = boost::multiprecision::mpfr_float(
            "3.14159265358979323846264338327950288419717");
        CHECK(abs(G.entries[0][0] - sqrt(pi)) < Float("1e-35"));
    }
    {
        const Params P(Family::A, Rational(1), Rational(1, 2));
        const auto G = quadrature_gram(
            P, {Poly::constant(1, 1), x(1, 1)}, 0, 40);
        const Float s2pi = sqrt(2 * boost::multiprecision::mpfr_float(
            "3.14159265358979323846264338327950288419717"));
        CHECK(abs(G.entries[0][0] - s2pi) < Float("1e-35"));
        CHECK(abs(G.entries[1][1] - s2pi) < Float("1e-35"));  // <x,x>/<1,1> = 1
        CHECK(abs(G.entries[0][1]) < Float("1e-35"));
    }
}

TEST_CASE("Gram diagonals reproduce the closed-form norm ratios") {
    const Params P(Family::A, Rational(1), Rational(1, 2));
    construct::Builder builder(P);
    const std::vector<Composition> mus{{0, 0}, {1, 0}, {0, 1}};
    std::vector<Poly> polys;
    for (const auto& mu : mus) polys.push_back(builder.nonsym(mu).poly);
    const auto G = quadrature_gram(P, polys, 0, 40);
    const Float tol("1e-25");
    CHECK(abs(G.entries[0][1]) < tol * G.entries[0][0]);
    CHECK(abs(G.entries[0][2]) < tol * G.entries[0][0]);
    CHECK(abs(G.entries[1][2]) < tol * G.entries[0][0]);
    // (1+2a)/(2w(1+a)) = 3/2 and (1+a)/(2w) = 2 at a = 1, w = 1/2
    CHECK(abs(G.entries[1][1] / G.entries[0][0] - 3 / Float(2)) < tol);
    CHECK(abs(G.entries[2][2] / G.entries[0][0] - 2) < tol);
}

TEST_CASE("quadrature rejects non-integer couplings") {
    CHECK_THROWS_AS(quadrature_gram(kA, {Poly::constant(2, 1)}, 0, 40),
                    NonIntegerCoupling);
}

TEST_CASE("verify suite passes at generic and integer points") {
    for (const Params& P :
         {kA, kB, Params(Family::A, Rational(1), Rational(1, 2)),
          Params(Family::B, Rational(1), Rational(1), Rational(1))}) {
        const auto report = verify_suite(P, 2, 3);
        CHECK(report_all_pass(report));
        for (const auto& entry : report) {
            CHECK((entry["status"] == "pass" || entry["status"] == "skipped"));
        }
    }
}

TEST_CASE("verify suite at three variables, family B") {
    const auto report = verify_suite(kB, 3, 3);
    CHECK(report_all_pass(report));
}

TEST_CASE("norm ratios via quadrature for the symmetric combinations") {
    const Params P(Family::B, Rational(1), Rational(1), Rational(1));
    std::vector<Poly> polys{construct::sym_poly(P, {0, 0}, +1).poly,
                            construct::sym_poly(P, {2, 0}, +1).poly,
                            construct::sym_poly(P, {1, 1}, +1).poly};
    const auto G = quadrature_gram(P, polys, 0, 40);
    const Float tol("1e-25");
    CHECK(abs(G.entries[0][1]) < tol * G.entries[0][0]);
    CHECK(abs(G.entries[1][2]) < tol * G.entries[0][0]);
    for (std::size_t i = 1; i < polys.size(); ++i) {
        const Composition mu = i == 1 ? Composition{2, 0} : Composition{1, 1};
        const Rational expect = norms::norm_ratio_sym(P, mu, +1);
        const Float ratio = G.entries[i][i] / G.entries[0][0];
        CHECK(abs(ratio - Float(expect.get_mpq_t())) < tol * (1 + ratio));
    }
}
