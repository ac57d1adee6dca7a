#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fgltheta/padic.hpp"

using namespace fgltheta;

TEST_CASE("construction masks to the stated digit count", "[padic]") {
    padic_approx x(0x1ffull, 8);
    CHECK(x.value() == 0xff);
    CHECK(x.digits() == 8);
    CHECK_THROWS_AS(padic_approx(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(padic_approx(1, 65), std::invalid_argument);
}

TEST_CASE("canonical and signed representatives", "[padic]") {
    // -4 mod 2^16 = 65532; the signed minimal representative recovers -4.
    auto x = padic_approx::from_int(-4, 16);
    CHECK(x.value() == 65532);
    CHECK(x.signed_minimal() == -4);
    CHECK(x.str() == "-4 (mod 2^16)");

    auto y = padic_approx::from_int(-4, 64);
    CHECK(y.value() == 18446744073709551612ull);
    CHECK(y.signed_minimal() == -4);

    // 2^(d-1) is its own signed representative (right-closed interval).
    padic_approx half(1ull << 7, 8);
    CHECK(half.signed_minimal() == 128);
}

TEST_CASE("arithmetic propagates the minimum precision", "[padic]") {
    auto a = padic_approx::from_int(100, 16);
    auto b = padic_approx::from_int(3, 8);
    CHECK((a + b).digits() == 8);
    CHECK((a - b).digits() == 8);
    CHECK((a * b).digits() == 8);
    CHECK((a + b).value() == 103);
    CHECK((a * b).value() == (300 & 0xff));
}

TEST_CASE("Newton inversion of odd residues", "[padic]") {
    // 3^-1 mod 2^6 = 43 since 3 * 43 = 129 = 1 + 2^7.
    CHECK(padic_approx::from_int(3, 6).inv().value() == 43);
    CHECK(padic_approx::from_int(3, 64).inv().value() == 12297829382473034411ull);
    CHECK_THROWS_AS(padic_approx::from_int(6, 8).inv(), not_a_unit);

    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        padic_approx x(rng() | 1ull, 64);
        CHECK((x * x.inv()).value() == 1);
        CHECK(x.inv().digits() == 64);
    }
}

TEST_CASE("exact division by powers of two", "[padic]") {
    auto x = padic_approx::from_int(12, 16);
    auto q = x.exact_div_pow2(2);
    CHECK(q.value() == 3);
    CHECK(q.digits() == 14); // division by 4 loses two digits
    CHECK_THROWS_AS(x.exact_div_pow2(1).exact_div_pow2(1).exact_div_pow2(1),
                    std::domain_error); // 3 is odd
    CHECK_THROWS_AS(padic_approx::from_int(4, 2).exact_div_pow2(2),
                    precision_exhausted);
    CHECK(x.exact_div_pow2(0) == x);
    CHECK_THROWS_AS(x.exact_div_pow2(-1), std::invalid_argument);
}

TEST_CASE("truncation and congruence", "[padic]") {
    auto x = padic_approx::from_int(1000, 32);
    CHECK(x.truncated(8).value() == (1000 & 0xff));
    CHECK_THROWS_AS(x.truncated(33), std::invalid_argument);
    // congruence compares residues mod 2^min(digits)
    CHECK(congruent(padic_approx::from_int(259, 16), padic_approx::from_int(3, 8)));
    CHECK(!congruent(padic_approx::from_int(259, 16), padic_approx::from_int(3, 16)));
}

TEST_CASE("ring axioms on random residues", "[padic]") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        padic_approx a(rng(), 64), b(rng(), 64), c(rng(), 64);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a + (-a)).is_zero());
    }
}
