#include "hypcr/characters.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

using namespace hypcr;

namespace {

// Independent totient: count coprime residues directly.
long long phi_by_count(long long m) {
    if (m == 1) return 1;
    long long c = 0;
    for (long long u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) ++c;
    return c;
}

}  // namespace

TEST_CASE("totient matches a direct count") {
    CHECK(phi(1) == 1);
    CHECK(phi(5) == 4);
    CHECK(phi(12) == 4);
    for (long long m = 1; m <= 200; ++m) CHECK(phi(m) == phi_by_count(m));
    CHECK_THROWS_AS(phi(0), std::invalid_argument);
}

TEST_CASE("units are the ascending coprime residues") {
    CHECK(units(1) == std::vector<long long>{0});
    CHECK(units(2) == std::vector<long long>{1});
    CHECK(units(4) == std::vector<long long>{1, 3});
    CHECK(units(5) == std::vector<long long>{1, 2, 3, 4});
    CHECK(units(12) == std::vector<long long>{1, 5, 7, 11});
    for (long long m = 2; m <= 100; ++m)
        CHECK(static_cast<long long>(units(m).size()) == phi(m));
}

TEST_CASE("inverse-identified classes pair u with m-u") {
    auto cls = unit_classes(4, IdentKind::Inv);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].members == std::vector<long long>{1, 3});

    cls = unit_classes(3, IdentKind::Inv);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].members == std::vector<long long>{1, 2});

    cls = unit_classes(2, IdentKind::Inv);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].members == std::vector<long long>{1});
}

TEST_CASE("twist-identified classes follow u -> u*(m/2-1)") {
    auto cls = unit_classes(4, IdentKind::Twist);
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].members == std::vector<long long>{1});
    CHECK(cls[1].members == std::vector<long long>{3});

    cls = unit_classes(8, IdentKind::Twist);
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].members == std::vector<long long>{1, 3});
    CHECK(cls[1].members == std::vector<long long>{5, 7});

    cls = unit_classes(12, IdentKind::Twist);
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].members == std::vector<long long>{1, 5});
    CHECK(cls[1].members == std::vector<long long>{7, 11});
}

TEST_CASE("twist identification requires 4 | m") {
    CHECK_THROWS_AS(unit_classes(6, IdentKind::Twist), std::invalid_argument);
    CHECK_THROWS_AS(unit_classes(2, IdentKind::Twist), std::invalid_argument);
    CHECK_THROWS_WITH(unit_classes(6, IdentKind::Twist),
                      "twisted identification not involutive for this modulus");
    CHECK_THROWS_AS(twist_image(1, 10), std::invalid_argument);
}

TEST_CASE("classes partition the units for every kind") {
    for (long long m = 1; m <= 200; ++m) {
        for (IdentKind kind : {IdentKind::Full, IdentKind::Inv, IdentKind::Twist}) {
            if (kind == IdentKind::Twist && m % 4 != 0) continue;
            auto classes = unit_classes(m, kind);
            std::set<long long> covered;
            long long prev_rep = -1;
            for (const auto& c : classes) {
                CHECK(c.rep() > prev_rep);
                prev_rep = c.rep();
                CHECK((c.members.size() == 1 || c.members.size() == 2));
                for (long long u : c.members) {
                    CHECK(std::gcd(u, m) == 1);
                    CHECK(!covered.count(u));
                    covered.insert(u);
                }
                // closure under the identification
                for (long long u : c.members) {
                    long long v = kind == IdentKind::Full ? u
                                  : kind == IdentKind::Inv ? inverse_image(u, m)
                                                           : twist_image(u, m);
                    CHECK(c.contains(v));
                }
            }
            auto us = units(m);
            CHECK(covered == std::set<long long>(us.begin(), us.end()));
            if (kind == IdentKind::Full)
                CHECK(static_cast<long long>(classes.size()) == phi(m));
        }
        // the twist map is an involution on units whenever it is defined
        if (m % 4 == 0)
            for (long long u : units(m)) CHECK(twist_image(twist_image(u, m), m) == u);
    }
}

TEST_CASE("decompositions n = kN + a, ascending in a") {
    using P = std::pair<long long, long long>;
    CHECK(decompositions(6, 3) == std::vector<P>{{2, 0}});
    CHECK(decompositions(6, 2) == std::vector<P>{{3, 0}, {2, 2}});
    CHECK(decompositions(6, 5) == std::vector<P>{{1, 1}});
    CHECK(decompositions(6, 7).empty());
    CHECK(decompositions(6, 4) == std::vector<P>{{1, 2}});
    for (long long n = 3; n <= 50; ++n)
        for (long long N = 2; N <= n + 2; ++N) {
            auto ds = decompositions(n, N);
            if (N > 2) CHECK(ds.size() <= 1);
            long long prev_a = -1;
            for (auto [k, a] : ds) {
                CHECK(k >= 1);
                CHECK(a >= 0);
                CHECK(a <= 2);
                CHECK(k * N + a == n);
                CHECK(a > prev_a);
                prev_a = a;
            }
        }
}
