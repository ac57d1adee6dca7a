#pragma once

#include <string>

#include "errors.hpp"
#include "trunc_series.hpp"

namespace fgltheta {

// y^2 + a1*xy + a3*y = x^3 + a2*x^2 + a4*x + a6 over a coefficient domain D.
template <class D>
struct weierstrass_curve {
    D a1, a2, a3, a4, a6;

    weierstrass_curve(D a1_, D a2_, D a3_, D a4_, D a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)),
          a4(std::move(a4_)), a6(std::move(a6_)) {
        if (!same_context(a1, a2) || !same_context(a1, a3) || !same_context(a1, a4) ||
            !same_context(a1, a6))
            throw mismatched_domains("weierstrass_curve: coefficients from different contexts");
    }

    // Curves of the shape y^2 + A*xy + B*y = x^3 with B a unit carry the
    // marked 3-torsion point (0, 0) at the origin.
    bool has_gamma1_shape() const {
        return is_zero(a2) && is_zero(a4) && is_zero(a6) && is_unit(a3);
    }

    std::string str() const {
        return "y^2 + (" + to_display(a1) + ")xy + (" + to_display(a3) +
               ")y = x^3 + (" + to_display(a2) + ")x^2 + (" + to_display(a4) +
               ")x + (" + to_display(a6) + ")";
    }
};

template <class D>
struct affine_point {
    D x, y;
};

// Defining-equation residual; zero exactly when the point lies on the curve.
template <class D>
D curve_residual(const weierstrass_curve<D>& E, const affine_point<D>& P) {
    return P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y - P.x * P.x * P.x -
           E.a2 * P.x * P.x - E.a4 * P.x - E.a6;
}

template <class D>
bool on_curve(const weierstrass_curve<D>& E, const affine_point<D>& P) {
    return is_zero(curve_residual(E, P));
}

// P has order dividing 2 iff P = -P, i.e. 2y + a1*x + a3 = 0.
template <class D>
bool is_two_torsion(const weierstrass_curve<D>& E, const affine_point<D>& P) {
    if (!on_curve(E, P))
        throw not_on_curve("is_two_torsion: point fails the curve equation");
    D cond = P.y + P.y + E.a1 * P.x + E.a3;
    return is_zero(cond);
}

// Formal expansion of w = -1/y as a series in z = -x/y along the curve:
// w solves w = z^3 + a1*z*w + a2*z^2*w + a3*w^2 + a4*z*w^2 + a6*w^3.
// Iterating from w0 = z^3 gains at least one certified z-degree per step;
// the result is certified through z^K (stored at truncation order K + 1).
template <class D>
trunc_series<D> expand_w(const weierstrass_curve<D>& E, int K,
                         const std::string& var = "z") {
    if (K < 3)
        throw std::invalid_argument("expand_w: need K >= 3");
    int order = K + 1;
    trunc_series<D> z = trunc_series<D>::monomial(var, order, 1, one_like(E.a1));
    trunc_series<D> z2 = z * z;
    trunc_series<D> z3 = z2 * z;
    trunc_series<D> w = z3;
    for (int step = 0; step < K; ++step) {
        trunc_series<D> w2 = w * w;
        w = z3 + z.scaled(E.a1) * w + z2.scaled(E.a2) * w + w2.scaled(E.a3) +
            z.scaled(E.a4) * w2 + (w2 * w).scaled(E.a6);
    }
    return w;
}

// Residual of the defining relation; exactly zero through the certified order.
template <class D>
trunc_series<D> expand_w_residual(const weierstrass_curve<D>& E,
                                  const trunc_series<D>& w) {
    int order = w.order();
    trunc_series<D> z =
        trunc_series<D>::monomial(w.var(), order, 1, one_like(E.a1));
    trunc_series<D> z2 = z * z;
    trunc_series<D> z3 = z2 * z;
    trunc_series<D> w2 = w * w;
    return w - (z3 + z.scaled(E.a1) * w + z2.scaled(E.a2) * w + w2.scaled(E.a3) +
                z.scaled(E.a4) * w2 + (w2 * w).scaled(E.a6));
}

} // namespace fgltheta
