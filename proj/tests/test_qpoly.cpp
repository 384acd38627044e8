#include "hypcr/qpoly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hypcr;

namespace {

QPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<long long> nterms(0, 5), num(0, 12), den(1, 6), coeff(1, 4);
    QPolynomial p;
    long long n = nterms(rng);
    for (long long i = 0; i < n; ++i)
        p += QPolynomial::monomial(Rational(num(rng), den(rng)), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("monomials and addition") {
    QPolynomial p = QPolynomial::monomial(Rational(1, 2));
    p += QPolynomial::monomial(Rational(1, 2), 2);
    CHECK(p.coeff(Rational(1, 2)) == 3);
    CHECK(p.total() == 3);
    CHECK(QPolynomial::monomial(Rational(2), 0).is_zero());
    CHECK((QPolynomial::zero() + p) == p);
    CHECK_THROWS_AS(QPolynomial::monomial(Rational(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(QPolynomial::monomial(Rational(1), -1), std::domain_error);
}

TEST_CASE("multiplication adds exponents") {
    QPolynomial a = QPolynomial::monomial(Rational(1, 2));
    QPolynomial b = QPolynomial::monomial(Rational(1, 3));
    CHECK((a * b).coeff(Rational(5, 6)) == 1);
    QPolynomial one = QPolynomial::one();
    CHECK((a * one) == a);
    CHECK((a * QPolynomial::zero()).is_zero());
}

TEST_CASE("shift and scale") {
    QPolynomial p = p0_swap(2);  // 1 + q
    QPolynomial s = p.shifted(Rational(1, 2));
    CHECK(s.coeff(Rational(1, 2)) == 1);
    CHECK(s.coeff(Rational(3, 2)) == 1);
    CHECK(s.total() == p.total());
    CHECK(p.shifted(Rational(0)) == p);
    CHECK_THROWS_AS(p.shifted(Rational(-1)), std::domain_error);
    CHECK(p.scaled(3).total() == 3 * p.total());
    CHECK(p.scaled(0).is_zero());
    CHECK_THROWS_AS(p.scaled(-1), std::domain_error);
}

TEST_CASE("totals evaluate at q = 1") {
    QPolynomial p = QPolynomial::monomial(Rational(0)) + QPolynomial::monomial(Rational(1), 2) +
                    QPolynomial::monomial(Rational(2));
    CHECK(p.total() == 4);
    CHECK(QPolynomial::zero().total() == 0);
    QPolynomial halves =
        QPolynomial::monomial(Rational(1, 2)) + QPolynomial::monomial(Rational(3, 2));
    CHECK(halves.total() == 2);
}

TEST_CASE("generator polynomials for the two symmetry types") {
    CHECK(p0_two_fixed(1) == QPolynomial::one());
    CHECK(p0_two_fixed(3).str() == "1 + 1*q^1 + 1*q^2");
    CHECK(p0_two_fixed(5).total() == 5);

    CHECK(p0_swap(1) == QPolynomial::one());
    CHECK(p0_swap(2).str() == "1 + 1*q^1");
    CHECK(p0_swap(6).str() == "1 + 2*q^1 + 1*q^2");
    for (long long k = 2; k <= 40; ++k) {
        CHECK(p0_two_fixed(k).total() == k);
        CHECK(p0_swap(k).total() == 2 * ((k - 2) / 4 + 1));
    }
    CHECK_THROWS_AS(p0_two_fixed(0), std::invalid_argument);
    CHECK_THROWS_AS(p0_swap(0), std::invalid_argument);
}

TEST_CASE("canonical rendering is ascending with explicit coefficients") {
    QPolynomial p = QPolynomial::monomial(Rational(0), 2) +
                    QPolynomial::monomial(Rational(1, 2)) +
                    QPolynomial::monomial(Rational(12, 5), 2) + QPolynomial::monomial(Rational(3), 4);
    CHECK(p.str() == "2 + 1*q^(1/2) + 2*q^(12/5) + 4*q^3");
    CHECK(QPolynomial::zero().str() == "0");
}

TEST_CASE("ring laws hold on random polynomials") {
    std::mt19937 rng(911);
    for (int trial = 0; trial < 200; ++trial) {
        QPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).total() == a.total() + b.total());
        CHECK((a * b).total() == a.total() * b.total());
        CHECK(a.shifted(Rational(2, 3)).total() == a.total());
        for (const auto& [e, coef] : a.terms()) {
            CHECK(e >= Rational(0));
            CHECK(coef > 0);
        }
    }
}
