#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "padic.hpp"
#include "realization.hpp"
#include "trunc_series.hpp"

namespace fgltheta {

// All t-side Laurent data is stored in the variable ti = t^(-1), so that the
// lowest tracked exponent of psi2(t) is ti^(-2) (= t^2) with unit
// coefficient 1. Inversion factors out the lowest tracked monomial, which
// must be a unit; in the t-variable the same series would lead with an even
// alpha-coefficient and inversion would (correctly) refuse.
inline const std::string& ti_var() {
    static const std::string v = "t_inv";
    return v;
}
inline const std::string& s_var() {
    static const std::string v = "s";
    return v;
}

// The unique solution c in Z2[[s]] of c = -1 + 4*s*c^3, computed to the
// requested order by fixed-point iteration (one certified coefficient per
// step, so `order` steps suffice) and then re-verified: the residual must
// vanish identically, c(0) must be -1, and every non-constant coefficient
// must be divisible by 4.
class c_series {
  public:
    static c_series solve(int digits, int order) {
        if (digits < 8)
            throw std::invalid_argument("c_series: need digits >= 8");
        if (order < 2)
            throw std::invalid_argument("c_series: need order >= 2");
        auto minus_one = trunc_series<padic_approx>::constant(
            s_var(), order, padic_approx::from_int(-1, digits));
        auto four_s = trunc_series<padic_approx>::monomial(
            s_var(), order, 1, padic_approx::from_int(4, digits));
        auto c = minus_one;
        for (int i = 0; i < order; ++i)
            c = minus_one + four_s * (c * c * c);
        auto residual = c - (minus_one + four_s * (c * c * c));
        if (!residual.all_zero())
            throw internal_mismatch("c_series: fixed-point residual is nonzero");
        if (!congruent(c.coeff(0), padic_approx::from_int(-1, digits)))
            throw internal_mismatch("c_series: constant term is not -1");
        for (int j = 1; j < order; ++j)
            if (c.coeff(j).value() % 4 != 0)
                throw internal_mismatch(
                    "c_series: coefficient of s^" + std::to_string(j) +
                    " is not divisible by 4");
        return c_series(c, digits);
    }

    const trunc_series<padic_approx>& series() const { return c_; }
    int digits() const { return digits_; }
    int order() const { return c_.order(); }

  private:
    c_series(trunc_series<padic_approx> c, int digits)
        : c_(std::move(c)), digits_(digits) {}
    trunc_series<padic_approx> c_;
    int digits_;
};

// alpha = 2*c(s)*t^(-1), supported on ti-exponents 1 + 3j.
inline laurent_series<padic_approx> alpha_of_ti(const c_series& c) {
    int K = c.order();
    auto a = laurent_series<padic_approx>::zeros(
        ti_var(), 1, 3 * K - 1, padic_approx::from_int(0, c.digits()));
    padic_approx two = padic_approx::from_int(2, c.digits());
    for (int j = 0; j < K; ++j)
        a.set_coeff(1 + 3 * j, two * c.series().coeff(j));
    return a;
}

// alpha^3 - t*alpha - 2 over the window the arithmetic certifies. This is
// an exact identity (it equals 2*(4*s*c^3 - c - 1) after substitution), so
// a nonzero value means the series plumbing is broken.
inline laurent_series<padic_approx> alpha_cubic_residual(const c_series& c) {
    int K = c.order();
    int wide = 3 * K + 2;
    auto alpha = alpha_of_ti(c);
    auto t_mon = laurent_series<padic_approx>::monomial(
        ti_var(), -1, wide, -1, padic_approx::from_int(1, c.digits()));
    auto two_mon = laurent_series<padic_approx>::monomial(
        ti_var(), -1, wide, 0, padic_approx::from_int(2, c.digits()));
    return alpha * alpha * alpha - t_mon * alpha - two_mon;
}

// psi2(t) = t^2 + 3*alpha - alpha^2*t, cross-checked against the closed
// form t^2 * (1 + s*(6c - 4c^2)) before being returned.
inline laurent_series<padic_approx> psi2_of_t(const c_series& c) {
    int K = c.order();
    int digits = c.digits();
    int wide = 3 * K + 2;
    auto alpha = alpha_of_ti(c);
    auto t_mon = laurent_series<padic_approx>::monomial(
        ti_var(), -1, wide, -1, padic_approx::from_int(1, digits));
    auto t_sq = laurent_series<padic_approx>::monomial(
        ti_var(), -2, wide, -2, padic_approx::from_int(1, digits));
    auto direct =
        t_sq + alpha.scaled(padic_approx::from_int(3, digits)) - alpha * alpha * t_mon;

    // Closed form: coefficient of s^(j+1) is (6c - 4c^2)_j, sitting at
    // ti-exponent 3j + 1; the leading t^2 sits at ti-exponent -2.
    auto d = c.series().scaled(padic_approx::from_int(6, digits)) -
             (c.series() * c.series()).scaled(padic_approx::from_int(4, digits));
    auto closed = laurent_series<padic_approx>::zeros(
        ti_var(), -2, 3 * K - 1, padic_approx::from_int(0, digits));
    closed.set_coeff(-2, padic_approx::from_int(1, digits));
    for (int j = 0; j < K; ++j)
        closed.set_coeff(3 * j + 1, d.coeff(j));

    int lo = std::max(direct.lo(), closed.lo());
    int hi = std::min(direct.hi(), closed.hi());
    for (int k = lo; k < hi; ++k)
        if (!congruent(direct.coeff(k), closed.coeff(k)))
            throw internal_mismatch(
                "psi2_of_t: direct and closed-form expansions disagree at ti^" +
                std::to_string(k));
    return direct.restricted(lo, hi);
}

// Fault-injection hooks for the negative controls: each one perturbs the
// pipeline at the stage named, and the downstream certificates must notice.
enum class injection_mode {
    none,
    t_inverse, // add t^(-1) to psi2(t): breaks 2-divisibility downstream
    x_power,   // add s^(-1) to psi2(s): breaks the no-negative-powers window
    both,
};

inline std::string to_string(injection_mode m) {
    switch (m) {
    case injection_mode::none:
        return "none";
    case injection_mode::t_inverse:
        return "t-inverse";
    case injection_mode::x_power:
        return "x-power";
    case injection_mode::both:
        return "both";
    }
    return "?";
}

struct theta_report {
    int digits;
    int order;
    injection_mode injection;
    trunc_series<padic_approx> c;
    laurent_series<padic_approx> psi2_s;
    laurent_series<padic_approx> theta;
    bool theta_defined;
    bool alpha_residual_zero;
    std::vector<int> negative_power_degrees;  // s-degrees < 0 carrying mass
    std::vector<int> odd_coefficient_degrees; // s-degrees where /2 fails
    std::vector<int> fractional_exponents;    // ti-exponents not divisible by 3
    std::string verdict() const {
        return (negative_power_degrees.empty() && odd_coefficient_degrees.empty() &&
                fractional_exponents.empty())
                   ? "STABLE"
                   : "UNSTABLE";
    }
};

// Runs the whole power-operation pipeline at precision (digits, order):
// solve for c, expand psi2(t), push s = t^(-3) through (psi2 image of s is
// psi2(t)^(-3)), re-express in s, and halve psi2(s) - s^2 to get theta.
// The report carries the certificates instead of a bare yes/no.
inline theta_report run_theta(int digits, int order,
                              injection_mode injection = injection_mode::none) {
    c_series c = c_series::solve(digits, order);
    bool alpha_ok = alpha_cubic_residual(c).all_zero();

    auto P = psi2_of_t(c);
    if (injection == injection_mode::t_inverse || injection == injection_mode::both)
        P = P + laurent_series<padic_approx>::monomial(
                    ti_var(), P.lo(), P.hi(), 1, padic_approx::from_int(1, digits));

    // s = t^(-3) maps to psi2(t)^(-3); the lowest tracked monomial of P is
    // t^2 with coefficient 1, so the inversion is legitimate.
    auto S_ti = P.inverse().pow(3);

    // Re-express from ti to s = ti^3. Mass away from exponents divisible by
    // 3 cannot be written in s; those exponents are reported, not dropped
    // silently.
    std::vector<int> fractional;
    int s_lo = S_ti.lo() >= 0 ? (S_ti.lo() + 2) / 3 : -((-S_ti.lo()) / 3);
    int s_hi = (S_ti.hi() - 1 >= 0 ? (S_ti.hi() - 1) / 3 : -((-(S_ti.hi() - 1) + 2) / 3)) + 1;
    auto S_s = laurent_series<padic_approx>::zeros(
        s_var(), s_lo, s_hi, padic_approx::from_int(0, digits));
    for (int k = S_ti.lo(); k < S_ti.hi(); ++k) {
        if (is_zero(S_ti.coeff(k)))
            continue;
        if (k % 3 != 0) {
            fractional.push_back(k);
            continue;
        }
        S_s.set_coeff(k / 3, S_ti.coeff(k));
    }

    if (injection == injection_mode::x_power || injection == injection_mode::both)
        S_s = S_s + laurent_series<padic_approx>::monomial(
                        s_var(), -1, S_s.hi(), -1, padic_approx::from_int(1, digits));

    // Negative s-powers are detected through the localized model: in the
    // reciprocal variable x = s^(-1) they become positive x-powers, which
    // the K(1)-acyclic window forbids.
    std::vector<int> negative;
    auto recip = reexpress_reciprocal(S_s, "x");
    auto mem = membership(recip, localized_kind::k1_zero);
    for (const auto& [x_exp, coeff] : mem.violations)
        negative.push_back(-x_exp);

    // theta = (psi2(s) - s^2) / 2, taken coefficientwise and exactly.
    auto diff = S_s - laurent_series<padic_approx>::monomial(
                          s_var(), S_s.lo(), S_s.hi(), 2,
                          padic_approx::from_int(1, digits));
    std::vector<int> odd;
    for (int k = diff.lo(); k < diff.hi(); ++k)
        if (diff.coeff(k).value() % 2 != 0)
            odd.push_back(k);

    bool theta_defined = odd.empty();
    auto theta = laurent_series<padic_approx>::zeros(
        s_var(), 0, 1, padic_approx::from_int(0, digits - 1));
    if (theta_defined) {
        theta = laurent_series<padic_approx>::zeros(
            s_var(), diff.lo(), diff.hi(), padic_approx::from_int(0, digits - 1));
        for (int k = diff.lo(); k < diff.hi(); ++k)
            theta.set_coeff(k, diff.coeff(k).exact_div_pow2(1));
    }

    return theta_report{digits,
                        order,
                        injection,
                        c.series(),
                        S_s,
                        theta,
                        theta_defined,
                        alpha_ok,
                        std::move(negative),
                        std::move(odd),
                        std::move(fractional)};
}

} // namespace fgltheta
