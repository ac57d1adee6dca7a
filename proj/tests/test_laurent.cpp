#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include <random>

#include "fgltheta/laurent.hpp"

using namespace fgltheta;
using Z = mpz_class;
using LS = laurent_series<Z>;

TEST_CASE("window semantics: exact zero below, error above", "[laurent]") {
    LS f = LS::monomial("x", -2, 3, -1, Z(5));
    CHECK(f.lo() == -2);
    CHECK(f.hi() == 3);
    CHECK(f.coeff(-5) == 0); // below the floor: exactly zero
    CHECK(f.coeff(-1) == 5);
    CHECK_THROWS_AS(f.coeff(3), std::out_of_range);
    CHECK(f.valuation() == -1);
    CHECK_THROWS_AS(LS::zeros("x", 2, 2, Z(0)), std::invalid_argument);
}

TEST_CASE("addition intersects certainty", "[laurent]") {
    LS a = LS::monomial("x", -1, 4, 0, Z(1));
    LS b = LS::monomial("x", -3, 2, -3, Z(1));
    LS s = a + b;
    CHECK(s.lo() == -3);
    CHECK(s.hi() == 2);
    CHECK(s.coeff(-3) == 1);
    CHECK(s.coeff(0) == 1);
}

TEST_CASE("multiplication windows track hidden-term entry points", "[laurent]") {
    // a = x^-1 + ... certified below x^3, b = x^2 + ... certified below x^4:
    // unknown terms of a enter the product at >= 3 + 2, of b at >= 4 - 1.
    LS a = LS::monomial("x", -1, 3, -1, Z(1));
    LS b = LS::monomial("x", 2, 4, 2, Z(1));
    LS p = a * b;
    CHECK(p.lo() == 1);
    CHECK(p.hi() == 3);
    CHECK(p.coeff(1) == 1);

    // shifted() is exact reindexing: no certainty is lost
    CHECK(a.shifted(3).lo() == 2);
    CHECK(a.shifted(3).hi() == 6);
}

TEST_CASE("inversion factors the lowest tracked monomial", "[laurent]") {
    // f = x^-2 (1 - x): f^-1 = x^2 (1 + x + x^2 + ...)
    LS f = LS::zeros("x", -2, 4, Z(0));
    f.set_coeff(-2, Z(1));
    f.set_coeff(-1, Z(-1));
    LS g = f.inverse();
    CHECK(g.lo() == 2);
    CHECK(g.hi() == 8); // [-v, hi - 2v) with v = -2
    for (int k = 2; k < 8; ++k)
        CHECK(g.coeff(k) == 1);

    // leading coefficient must be a unit
    LS bad = LS::monomial("x", -2, 3, -2, Z(2));
    CHECK_THROWS_AS(bad.inverse(), non_unit_leading_coefficient);
    CHECK_THROWS_AS(LS::zeros("x", 0, 3, Z(0)).inverse(),
                    non_unit_leading_coefficient);
}

TEST_CASE("negative powers route through the inverse", "[laurent]") {
    LS f = LS::monomial("x", 1, 5, 1, Z(1)) + LS::monomial("x", 1, 5, 2, Z(1));
    LS p = f.pow(-2);
    // f^-1 = x^-1 - 1 + x - x^2 + ...; square it
    CHECK(p.coeff(-2) == 1);
    CHECK(p.coeff(-1) == -2);
    CHECK(p.coeff(0) == 3);
    CHECK(f.pow(0).coeff(0) == 1);
    CHECK((f.pow(2) - f * f).all_zero());
}

TEST_CASE("restriction must be a subwindow", "[laurent]") {
    LS f = LS::monomial("x", -1, 4, 2, Z(9));
    LS r = f.restricted(0, 3);
    CHECK(r.lo() == 0);
    CHECK(r.hi() == 3);
    CHECK(r.coeff(2) == 9);
    CHECK_THROWS_AS(f.restricted(-2, 3), std::invalid_argument);
    CHECK_THROWS_AS(f.restricted(0, 5), std::invalid_argument);
}

TEST_CASE("from_trunc embeds at window [0, order)", "[laurent]") {
    auto t = trunc_series<Z>::monomial("x", 4, 1, Z(3));
    LS f = LS::from_trunc(t);
    CHECK(f.lo() == 0);
    CHECK(f.hi() == 4);
    CHECK(f.coeff(1) == 3);
}

TEST_CASE("mixed variables are rejected", "[laurent]") {
    LS a = LS::monomial("x", 0, 2, 0, Z(1));
    LS b = LS::monomial("y", 0, 2, 0, Z(1));
    CHECK_THROWS_AS(a + b, mismatched_domains);
    CHECK_THROWS_AS(a * b, mismatched_domains);
}

TEST_CASE("inverse round-trips on random unit-led series", "[laurent]") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 40; ++i) {
        LS f = LS::zeros("x", -3, 5, Z(0));
        f.set_coeff(-3, Z(1));
        for (int k = -2; k < 5; ++k)
            f.set_coeff(k, Z(d(rng)));
        LS g = f.inverse();
        LS p = f * g;
        // product is 1 on its certified window
        CHECK(p.coeff(0) == 1);
        for (int k = p.lo(); k < p.hi(); ++k)
            CHECK(p.coeff(k) == (k == 0 ? 1 : 0));
    }
}
