#include "hypcr/m0n.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <tuple>

using namespace hypcr;

TEST_CASE("n = 6 sector list, in order") {
    auto secs = sectors_m0n(6);
    REQUIRE(secs.size() == 9);

    CHECK(secs[0].N == 2);
    CHECK(secs[0].k == 3);
    CHECK(secs[0].a == 0);
    CHECK(secs[0].label.members == std::vector<long long>{1});
    CHECK(secs[0].label.kind == IdentKind::Full);
    CHECK(secs[0].coarse.symmetry == CoarseSymmetry::TwoSwapped);

    CHECK(secs[1].N == 2);
    CHECK(secs[1].k == 2);
    CHECK(secs[1].a == 2);
    CHECK(secs[1].coarse.symmetry == CoarseSymmetry::TwoSwapped);

    CHECK(secs[2].N == 3);
    CHECK(secs[2].a == 0);
    CHECK(secs[2].label.members == std::vector<long long>{1, 2});
    CHECK(secs[2].label.kind == IdentKind::Inv);

    CHECK(secs[3].N == 4);
    CHECK(secs[3].a == 2);
    CHECK(secs[3].label.members == std::vector<long long>{1, 3});

    for (int i = 4; i < 8; ++i) {
        CHECK(secs[i].N == 5);
        CHECK(secs[i].a == 1);
        CHECK(secs[i].coarse.symmetry == CoarseSymmetry::TwoFixed);
        CHECK(secs[i].label.members == std::vector<long long>{i - 3});
    }

    CHECK(secs[8].N == 6);
    CHECK(secs[8].a == 0);
    CHECK(secs[8].label.members == std::vector<long long>{1, 5});
}

TEST_CASE("small sector counts") {
    CHECK(sectors_m0n(3).size() == 2);
    CHECK(sectors_m0n(4).size() == 5);
    CHECK(sectors_m0n(5).size() == 6);
    CHECK(sectors_m0n(6).size() == 9);
    CHECK(sectors_m0n(7).size() == 10);
    CHECK(sectors_m0n(8).size() == 13);
    CHECK_THROWS_AS(sectors_m0n(2), std::invalid_argument);
}

TEST_CASE("counting law per decomposition, genus 0") {
    for (long long n = 3; n <= 40; ++n) {
        std::map<std::pair<long long, long long>, long long> counts;
        for (const M0nSector& s : sectors_m0n(n)) {
            CHECK(s.k * s.N + s.a == n);
            CHECK(s.k >= 1);
            CHECK(s.coarse.k == s.k);
            CHECK(s.coarse.dimension() <= n - 3);
            CHECK((s.coarse.symmetry == CoarseSymmetry::TwoFixed) == (s.a == 1));
            ++counts[{s.N, s.a}];
        }
        for (long long N = 2; N <= n; ++N)
            for (auto [k, a] : decompositions(n, N)) {
                long long expected;
                if (N == 2)
                    expected = 1;
                else if (a == 1)
                    expected = phi(N);
                else
                    expected = phi(N) / 2;  // Inv classes; phi(N) even for N > 2
                CHECK(counts[{N, a}] == expected);
            }
    }
}

TEST_CASE("inertia Poincare polynomials of small stacks") {
    CHECK(inertia_poincare_m0n(3).str() == "3");
    CHECK(inertia_poincare_m0n(4).str() == "6 + 1*q^1");
    CHECK(inertia_poincare_m0n(5).str() == "7 + 1*q^1");
    CHECK(inertia_poincare_m0n(6).str() == "10 + 3*q^1");
    CHECK(inertia_poincare_m0n(6).total() == 13);
}

TEST_CASE("enumeration is deterministic") {
    auto a = sectors_m0n(12);
    auto b = sectors_m0n(12);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].N == b[i].N);
        CHECK(a[i].a == b[i].a);
        CHECK(a[i].label == b[i].label);
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
        auto key = [](const M0nSector& s) {
            return std::tuple(s.N, s.a, s.label.rep());
        };
        CHECK(key(a[i - 1]) < key(a[i]));
    }
}
