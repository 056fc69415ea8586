// Root-system combinatorics: sorting words, inversion sets, the order on
// compositions, orbits, special vectors, and the length generating function.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "calogero/weyl.hpp"

using namespace calogero;
using namespace calogero::weyl;

namespace {

// All compositions of N entries with total degree <= deg.
std::vector<Composition> compositions(int N, int deg) {
    std::vector<Composition> out;
    Composition cur(N, 0);
    while (true) {
        if (degree(cur) <= deg) out.push_back(cur);
        int k = 0;
        while (k < N && ++cur[k] > deg) cur[k++] = 0;
        if (k == N) break;
    }
    return out;
}

}  // namespace

TEST_CASE("degree and partition predicate") {
    CHECK(degree({2, 1, 0}) == 3);
    CHECK(degree({0, 0}) == 0);
    CHECK(is_partition({3, 1, 1}));
    CHECK(!is_partition({1, 2}));
}

TEST_CASE("sort_to_partition on the spec'd small cases") {
    {
        auto [p, w] = sort_to_partition({1, 0});
        CHECK(p == Composition{1, 0});
        CHECK(w.letters.empty());
    }
    {
        auto [p, w] = sort_to_partition({0, 1});
        CHECK(p == Composition{1, 0});
        CHECK(w.letters == std::vector<int>{1});
    }
    {
        auto [p, w] = sort_to_partition({0, 2, 1});
        CHECK(p == Composition{2, 1, 0});
        CHECK(w.length() == 2);
        // letters stored in application order; applying them to the
        // partition must reproduce the composition
        CHECK(apply_word(w, p) == Composition{0, 2, 1});
    }
}

TEST_CASE("sort_to_partition round trip, N <= 5, degree <= 4") {
    for (int N = 1; N <= 5; ++N) {
        for (const auto& mu : compositions(N, 4)) {
            auto [p, w] = sort_to_partition(mu);
            CHECK(is_partition(p));
            CHECK(apply_word(w, p) == mu);
            CHECK(inversion_count(w) == w.length());  // word is reduced
        }
    }
}

TEST_CASE("inversion sets") {
    CHECK(inversion_set({2, {}}).empty());
    {
        auto R = inversion_set({2, {1}});
        REQUIRE(R.size() == 1);
        CHECK(R[0] == RootVector{1, -1});
    }
    {
        // word [1,2] applied in order: alpha_1, s_1(alpha_2)
        auto R = inversion_set({3, {1, 2}});
        REQUIRE(R.size() == 2);
        std::set<RootVector> s(R.begin(), R.end());
        CHECK(s.count(RootVector{1, -1, 0}) == 1);
        CHECK(s.count(RootVector{1, 0, -1}) == 1);
    }
}

TEST_CASE("inversion set rejects non-reduced words") {
    CHECK_THROWS_AS(inversion_set({2, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(inversion_set({3, {1, 2, 1, 2}}), std::invalid_argument);
}

TEST_CASE("inversion set is word-independent") {
    // s_1 s_2 s_1 = s_2 s_1 s_2: the longest element of S_3
    auto R1 = inversion_set({3, {1, 2, 1}});
    auto R2 = inversion_set({3, {2, 1, 2}});
    std::set<RootVector> s1(R1.begin(), R1.end()), s2(R2.begin(), R2.end());
    CHECK(s1 == s2);
    CHECK(s1.size() == 3);
}

TEST_CASE("order_compare spec cases") {
    CHECK(order_compare({1, 1}, {2, 0}) == Order::Less);
    CHECK(order_compare({0, 1}, {1, 0}) == Order::Less);
    CHECK(order_compare({2, 0, 0}, {1, 1, 1}) == Order::Incomparable);
    CHECK(order_compare({1, 0}, {1, 0}) == Order::Equal);
    CHECK(order_compare({2, 0}, {1, 1}) == Order::Greater);
}

TEST_CASE("weyl_orbit sizes and membership") {
    CHECK(weyl_orbit({0, 0}).size() == 1);
    CHECK(weyl_orbit({1, 0}).size() == 2);
    CHECK(weyl_orbit({2, 1, 0}).size() == 6);
    CHECK(weyl_orbit({1, 1, 0}).size() == 3);
    for (const auto& [nu, w] : weyl_orbit({2, 1, 0})) {
        CHECK(apply_word(w, Composition{2, 1, 0}) == nu);
        CHECK(inversion_count(w) == w.length());
    }
}

TEST_CASE("special vectors") {
    CHECK(rho(2) == RootVector{Rational(1, 2), Rational(-1, 2)});
    CHECK(rho(3) == RootVector{1, 0, -1});
    CHECK(delta(2) == RootVector{1, 0});
    CHECK(delta(4) == RootVector{3, 2, 1, 0});
    CHECK(rho_kB(2, Rational(1, 2), Rational(1, 3)) ==
          RootVector{Rational(4, 3), Rational(1, 3)});
}

TEST_CASE("coroots and pairings") {
    const RootVector a1 = simple_root(3, 1);
    CHECK(inner(a1, a1) == 2);
    CHECK(coroot(a1) == a1);  // all roots of this system have length^2 = 2
    CHECK(inner(a1, Composition{2, 1, 0}) == 1);
}

TEST_CASE("prefix chains of the sorting word strictly descend") {
    for (int N = 2; N <= 4; ++N) {
        for (const auto& mu : compositions(N, 4)) {
            auto [p, w] = sort_to_partition(mu);
            Composition prev = p;
            for (std::size_t l = 0; l < w.length(); ++l) {
                Composition next = apply_transposition(prev, w.letters[l]);
                CHECK(order_compare(next, prev) == Order::Less);
                prev = next;
            }
            CHECK(prev == mu);
        }
    }
}

TEST_CASE("length generating function") {
    CHECK(poincare_polynomial(1) == std::vector<long>{1});
    CHECK(poincare_polynomial(2) == std::vector<long>{1, 1});
    CHECK(poincare_polynomial(3) == std::vector<long>{1, 2, 2, 1});
    long fact = 1;
    for (int N = 1; N <= 6; ++N) {
        fact *= N;
        const auto W = poincare_polynomial(N);
        long sum = 0;
        for (long c : W) sum += c;
        CHECK(sum == fact);  // value at t = 1
    }
    CHECK_THROWS_AS(poincare_polynomial(9), std::invalid_argument);
}
