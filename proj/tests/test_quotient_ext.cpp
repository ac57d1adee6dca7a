#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include <random>

#include "fgltheta/quotient_ext.hpp"
#include "fgltheta/trunc_series.hpp"

using namespace fgltheta;
using Q = mpq_class;
using QE = quotient_ext<Q>;

TEST_CASE("products reduce through d^3 = t d + 2", "[quotient]") {
    Q t(5);
    QE d = QE::d_gen(t);
    QE d2 = d * d;
    CHECK(d2 == QE::make(Q(0), Q(0), Q(1), t));
    QE d3 = d2 * d;
    CHECK(d3 == QE::make(Q(2), Q(5), Q(0), t));
    QE d4 = d3 * d;
    CHECK(d4 == QE::make(Q(0), Q(2), Q(5), t));
    CHECK(d4 == d2 * d2);

    QE x = QE::make(Q(1), Q(-2), Q(3), t);
    QE assembled = QE::from_base(Q(1), t) + QE::from_base(Q(-2), t) * d +
                   QE::from_base(Q(3), t) * d2;
    CHECK(x == assembled);
}

TEST_CASE("norm is the determinant of multiplication", "[quotient]") {
    Q t(5);
    QE d = QE::d_gen(t);
    // Constant term of d^3 - t d - 2 is -2, so the norm of d is 2.
    CHECK(d.norm_det() == 2);
    CHECK(QE::from_base(Q(3), t).norm_det() == 27);

    std::mt19937 rng(421u);
    std::uniform_int_distribution<int> small(-5, 5);
    auto rand_elem = [&]() {
        return QE::make(Q(small(rng)), Q(small(rng)), Q(small(rng)), t);
    };
    for (int trial = 0; trial < 20; ++trial) {
        QE x = rand_elem();
        QE y = rand_elem();
        CHECK((x * y).norm_det() == x.norm_det() * y.norm_det());
    }
}

TEST_CASE("inversion through the adjugate", "[quotient]") {
    Q t(5);
    QE d = QE::d_gen(t);
    // d (d^2 - 5) = 2, so 1/d = (d^2 - 5) / 2.
    QE dinv = d.inverse();
    CHECK(dinv == QE::make(Q(-5, 2), Q(0), Q(1, 2), t));
    CHECK(d * dinv == QE::from_base(Q(1), t));

    // t = 5 makes the cubic split off (d + 2): that factor is a zero
    // divisor, so its norm vanishes and inversion refuses.
    QE zd = d + QE::from_base(Q(2), t);
    CHECK(zd.norm_det() == 0);
    CHECK_THROWS_AS(zd.inverse(), not_a_unit);
    CHECK_THROWS_AS(zero_like(d).inverse(), not_a_unit);

    std::mt19937 rng(422u);
    std::uniform_int_distribution<int> small(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        QE x = QE::make(Q(small(rng)), Q(small(rng)), Q(small(rng)), t);
        if (!is_unit(x))
            continue;
        CHECK(x * x.inverse() == one_like(x));
    }
}

TEST_CASE("evaluation at a root is a ring homomorphism", "[quotient]") {
    // d = -2 satisfies d^3 = 5 d + 2, so evaluation there must respect
    // both operations.
    Q t(5);
    Q alpha(-2);
    auto embed = [](const Q& c) { return c; };
    std::mt19937 rng(423u);
    std::uniform_int_distribution<int> small(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        QE x = QE::make(Q(small(rng)), Q(small(rng)), Q(small(rng)), t);
        QE y = QE::make(Q(small(rng)), Q(small(rng)), Q(small(rng)), t);
        CHECK((x * y).eval(alpha, embed) == x.eval(alpha, embed) * y.eval(alpha, embed));
        CHECK((x + y).eval(alpha, embed) == x.eval(alpha, embed) + y.eval(alpha, embed));
    }

    // Evaluating at the generator itself reconstructs the canonical form.
    QE x = QE::make(Q(4), Q(-1), Q(7), t);
    QE back = x.eval(QE::d_gen(t), [&](const Q& c) { return QE::from_base(c, t); });
    CHECK(back == x);
}

TEST_CASE("mixed parameters are rejected", "[quotient]") {
    QE x = QE::d_gen(Q(5));
    QE y = QE::d_gen(Q(7));
    CHECK_THROWS_AS(x + y, mismatched_domains);
    CHECK_THROWS_AS(x * y, mismatched_domains);
    CHECK(x != y);
}

TEST_CASE("series-coefficient base ring", "[quotient]") {
    using TS = trunc_series<Q>;
    using QES = quotient_ext<TS>;
    TS t = TS::monomial("t", 6, 1, Q(1));
    QES d = QES::d_gen(t);
    QES d3 = d * d * d;
    CHECK(d3.c0() == TS::monomial("t", 6, 0, Q(2)));
    CHECK(d3.c1() == t);
    CHECK(is_zero(d3.c2()));

    // norm of d is the negated constant term of the cubic: the series 2.
    CHECK(d.norm_det() == TS::monomial("t", 6, 0, Q(2)));

    QES u = QES::make(TS::monomial("t", 6, 0, Q(1)) + t, t, zero_like(t), t);
    CHECK(u * u.inverse() == one_like(u));
}
