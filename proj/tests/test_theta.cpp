#include <catch2/catch_amalgamated.hpp>

#include "fgltheta/theta.hpp"

using namespace fgltheta;
using P2 = padic_approx;
using LS = laurent_series<P2>;

TEST_CASE("the cubic-parameter series c(s)", "[theta]") {
    c_series c = c_series::solve(64, 14);
    CHECK(c.digits() == 64);
    CHECK(c.order() == 14);
    CHECK(c.series().var() == s_var());

    const long long want[] = {-1,
                              -4,
                              -48,
                              -768,
                              -14080,
                              -279552,
                              -5849088,
                              -127008768,
                              -2835283968LL,
                              -64664371200LL,
                              -1500213411840LL,
                              -35293558210560LL,
                              -839986685411328LL,
                              -20188397943390208LL};
    for (int j = 0; j < 14; ++j) {
        CHECK(c.series().coeff(j) == P2::from_int(want[j], 64));
        CHECK(c.series().coeff(j).signed_minimal() == want[j]);
    }

    // c = -1 + (multiple of 4): every non-constant coefficient divides by 4.
    for (int j = 1; j < 14; ++j)
        CHECK_NOTHROW(c.series().coeff(j).exact_div_pow2(2));

    // Fixed-point residual c + 1 - 4 s c^3 vanishes identically.
    auto s = trunc_series<P2>::monomial(s_var(), 14, 1, P2::from_int(1, 64));
    auto one = trunc_series<P2>::constant(s_var(), 14, P2::from_int(1, 64));
    auto c3 = c.series() * c.series() * c.series();
    auto resid = c.series() + one - (s * c3).scaled(P2::from_int(4, 64));
    CHECK(resid.all_zero());

    CHECK_THROWS_AS(c_series::solve(4, 8), std::invalid_argument);
    CHECK_THROWS_AS(c_series::solve(64, 1), std::invalid_argument);
}

TEST_CASE("alpha lives on exponents 1 mod 3 and solves its cubic", "[theta]") {
    c_series c = c_series::solve(32, 4);
    LS alpha = alpha_of_ti(c);
    CHECK(alpha.var() == ti_var());
    CHECK(alpha.lo() == 1);
    CHECK(alpha.hi() == 11); // [1, 3K - 1)
    CHECK(alpha.coeff(1).signed_minimal() == -2); // 2 c_0
    CHECK(alpha.coeff(4).signed_minimal() == -8); // 2 c_1
    CHECK(alpha.coeff(2).is_zero());
    CHECK(alpha.coeff(3).is_zero());
    CHECK(alpha.coeff(5).is_zero());

    // alpha^3 - t alpha - 2 = 0 on the certified window, at short and
    // long truncation alike.
    c_series c2 = c_series::solve(32, 2);
    LS r2 = alpha_cubic_residual(c2);
    CHECK(r2.lo() == -1);
    CHECK(r2.hi() == 4);
    CHECK(r2.all_zero());
    CHECK(alpha_cubic_residual(c).all_zero());
    CHECK(alpha_cubic_residual(c_series::solve(64, 16)).all_zero());
}

TEST_CASE("doubling series in the inverted variable", "[theta]") {
    c_series c = c_series::solve(32, 8);
    LS P = psi2_of_t(c);
    CHECK(P.var() == ti_var());
    CHECK(P.lo() == -2);
    // Leading term: psi2 = t^2 + lower order, i.e. coefficient 1 at ti^-2.
    CHECK(P.coeff(-2) == P2::from_int(1, 32));
    CHECK(P.coeff(-1).is_zero());

    // Re-expressed in t the leading coefficient sits at the window top,
    // where inversion has no certified leading unit: the model refuses to
    // invert on the wrong side.
    LS Pt = LS::zeros("t", -(P.hi() - 1), -P.lo() + 1, P2::from_int(0, 32));
    for (int k = P.lo(); k < P.hi(); ++k)
        Pt.set_coeff(-k, P.coeff(k));
    CHECK_THROWS_AS(Pt.inverse(), non_unit_leading_coefficient);
}

TEST_CASE("clean run: stable with exact certificates", "[theta]") {
    theta_report rep = run_theta(64, 8);
    CHECK(rep.digits == 64);
    CHECK(rep.order == 8);
    CHECK(rep.injection == injection_mode::none);
    CHECK(rep.verdict() == "STABLE");
    CHECK(rep.theta_defined);
    CHECK(rep.alpha_residual_zero);
    CHECK(rep.negative_power_degrees.empty());
    CHECK(rep.odd_coefficient_degrees.empty());
    CHECK(rep.fractional_exponents.empty());

    CHECK(rep.psi2_s.var() == s_var());
    CHECK(rep.psi2_s.lo() == 2);
    CHECK(rep.psi2_s.hi() == 11); // [2, K + 3)

    const long long psi2[] = {1,           30,        768,         18928,
                              462000,      11270688,  275728512,   6772663296LL,
                              167081846016LL};
    const long long th[] = {0,           15,       384,        9464,
                            231000,      5635344,  137864256,  3386331648LL,
                            83540923008LL};
    for (int k = 0; k < 9; ++k) {
        CHECK(rep.psi2_s.coeff(2 + k) == P2::from_int(psi2[k], 64));
        // Halving costs exactly one certified binary digit.
        CHECK(rep.theta.coeff(2 + k) == P2::from_int(th[k], 63));
    }
    CHECK(rep.theta.coeff(2).value() == 0);
    CHECK(rep.c.coeff(0) == P2::from_int(-1, 64));
}

TEST_CASE("injected inverse-variable term is caught by parity", "[theta]") {
    theta_report rep = run_theta(32, 8, injection_mode::t_inverse);
    CHECK(rep.verdict() == "UNSTABLE");
    CHECK_FALSE(rep.theta_defined);
    CHECK(rep.negative_power_degrees.empty());
    CHECK(rep.fractional_exponents.empty());
    REQUIRE_FALSE(rep.odd_coefficient_degrees.empty());
    bool has3 = false;
    for (int d : rep.odd_coefficient_degrees)
        has3 = has3 || d == 3;
    CHECK(has3);

    const long long inj[] = {1, 27, 654, 15546, 369663, 8839101};
    for (int k = 0; k < 6; ++k)
        CHECK(rep.psi2_s.coeff(2 + k) == P2::from_int(inj[k], 32));
}

TEST_CASE("injected reciprocal power trips both certificates", "[theta]") {
    theta_report rep = run_theta(32, 8, injection_mode::x_power);
    CHECK(rep.verdict() == "UNSTABLE");
    REQUIRE(rep.negative_power_degrees.size() == 1);
    CHECK(rep.negative_power_degrees[0] == -1);
    CHECK_FALSE(rep.theta_defined); // the planted coefficient 1 is odd too
    bool odd_m1 = false;
    for (int d : rep.odd_coefficient_degrees)
        odd_m1 = odd_m1 || d == -1;
    CHECK(odd_m1);

    theta_report both = run_theta(32, 8, injection_mode::both);
    CHECK(both.verdict() == "UNSTABLE");
    CHECK_FALSE(both.negative_power_degrees.empty());
    CHECK_FALSE(both.odd_coefficient_degrees.empty());
}

TEST_CASE("verdict labels and injection names", "[theta]") {
    CHECK(to_string(injection_mode::none) == "none");
    CHECK(to_string(injection_mode::t_inverse) == "t-inverse");
    CHECK(to_string(injection_mode::x_power) == "x-power");
    CHECK(to_string(injection_mode::both) == "both");

    theta_report rep = run_theta(16, 2);
    CHECK(rep.verdict() == "STABLE");
}
