#pragma once

#include <map>
#include <string>

#include "bivar.hpp"
#include "errors.hpp"
#include "graded.hpp"
#include "trunc_series.hpp"
#include "weierstrass.hpp"

namespace fgltheta {

// Formal group law of a Weierstrass curve in the coordinate z = -x/y,
// w = -1/y, built by the chord construction:
//
//   the line through (z1, w(z1)) and (z2, w(z2)) has slope
//   lambda = (w(z1) - w(z2))/(z1 - z2) and intercept nu = w(z1) - lambda*z1;
//   substituting w = lambda*z + nu into the Weierstrass relation leaves a
//   cubic in z whose roots are z1, z2 and the third chord intersection
//
//     z3 = -z1 - z2 - (a1*L + a2*N + a3*L^2 + 2*a4*L*N + 3*a6*L^2*N)
//                     / (1 + a2*L + a4*L^2 + a6*L^3)
//
//   (L = lambda, N = nu; numerator and denominator are the degree-2 and
//   degree-3 elementary-symmetric data of that cubic). The group law is
//   F(z1, z2) = i(z3) with the formal inverse i(z) = -z*(1 - a1*z - a3*w)^{-1}.
//
// F(z, 0) = z, symmetry, and the z1*z2 coefficient -a1 are enforced at
// construction; a violation means an arithmetic defect, not bad input.
template <class D>
class formal_group_law {
  public:
    static formal_group_law from_curve(const weierstrass_curve<D>& E, int K,
                                       const std::string& var = "z") {
        if (K < 3)
            throw std::invalid_argument("formal_group_law: need order K >= 3");
        trunc_series<D> w = expand_w(E, K, var); // order K + 1

        bivar_series<D> lam = divided_difference(w); // order K
        bivar_series<D> w1 = embed_z1(w.truncated(K), K);
        bivar_series<D> z1m =
            bivar_series<D>::monomial(K, 1, 0, one_like(E.a1));
        bivar_series<D> z2m =
            bivar_series<D>::monomial(K, 0, 1, one_like(E.a1));
        bivar_series<D> nu = w1 - lam * z1m;

        D two = from_int_like(E.a1, 2);
        D three = from_int_like(E.a1, 3);
        bivar_series<D> lam2 = lam * lam;
        bivar_series<D> num = lam.scaled(E.a1) + nu.scaled(E.a2) +
                              lam2.scaled(E.a3) + (lam * nu).scaled(two * E.a4) +
                              (lam2 * nu).scaled(three * E.a6);
        bivar_series<D> den =
            bivar_series<D>::monomial(K, 0, 0, one_like(E.a1)) + lam.scaled(E.a2) +
            lam2.scaled(E.a4) + (lam2 * lam).scaled(E.a6);
        bivar_series<D> z3 = -(z1m + z2m) - num * den.inverse();

        // Formal inverse from the same w-series, one order higher than F.
        trunc_series<D> z_univ =
            trunc_series<D>::monomial(var, K + 1, 1, one_like(E.a1));
        trunc_series<D> unit =
            trunc_series<D>::constant(var, K + 1, one_like(E.a1)) -
            z_univ.scaled(E.a1) - w.scaled(E.a3);
        trunc_series<D> inv_series = -(z_univ * unit.inverse());

        bivar_series<D> F = compose(inv_series, z3);
        return formal_group_law(E, K, var, std::move(F), std::move(inv_series));
    }

    const bivar_series<D>& F() const { return F_; }
    const trunc_series<D>& inverse_series() const { return inv_series_; }
    const weierstrass_curve<D>& curve() const { return curve_; }
    int order() const { return K_; }
    const std::string& var() const { return var_; }

    // [n](z), certified to order K. [0] = 0, [n+1] = F([n], z), [-n] = [n](i).
    trunc_series<D> n_series(long n) const {
        auto it = n_cache_.find(n);
        if (it != n_cache_.end())
            return it->second;
        return compute_n(n);
    }

    trunc_series<D> two_series() const { return n_series(2); }

    // F(F(z1,z2), z3) - F(z1, F(z2,z3)) at trivariate truncation tri_order.
    trivar_series<D> associativity_residual(int tri_order) const {
        int K = std::min(tri_order, K_);
        bivar_series<D> Ft = F_.truncated(K);
        trivar_series<D> F12 = trivar_series<D>::embed(Ft, 0, 1, K);
        trivar_series<D> F23 = trivar_series<D>::embed(Ft, 1, 2, K);
        trivar_series<D> z1t = trivar_series<D>::zeros(K, F_.proto());
        z1t.set_coeff(1, 0, 0, one_like(F_.proto()));
        trivar_series<D> z3t = trivar_series<D>::zeros(K, F_.proto());
        z3t.set_coeff(0, 0, 1, one_like(F_.proto()));
        return eval_bivar(Ft, F12, z3t) - eval_bivar(Ft, z1t, F23);
    }

  private:
    formal_group_law(const weierstrass_curve<D>& E, int K, std::string var,
                     bivar_series<D> F, trunc_series<D> inv_series)
        : curve_(E), K_(K), var_(std::move(var)), F_(std::move(F)),
          inv_series_(std::move(inv_series)) {
        check_invariants();
        trunc_series<D> z = trunc_series<D>::monomial(var_, K_, 1, one_like(curve_.a1));
        n_cache_.emplace(0, trunc_series<D>::zeros(var_, K_, zero_like(curve_.a1)));
        n_cache_.emplace(1, z);
        for (long n = 2; n <= 3; ++n)
            n_cache_.emplace(n, eval_bivar(F_, n_cache_.at(n - 1), z));
        trunc_series<D> inv_t = inv_series_.truncated(K_);
        n_cache_.emplace(-1, inv_t);
        n_cache_.emplace(-2, compose(n_cache_.at(2), inv_t));
    }

    void check_invariants() const {
        trunc_series<D> z =
            trunc_series<D>::monomial(var_, K_, 1, one_like(curve_.a1));
        if (!(F_.restrict_z2_zero(var_) == z))
            throw internal_mismatch("formal_group_law: F(z, 0) != z");
        if (!(F_.restrict_z1_zero(var_) == z))
            throw internal_mismatch("formal_group_law: F(0, z) != z");
        if (!(F_ == F_.swapped()))
            throw internal_mismatch("formal_group_law: F is not symmetric");
        if (K_ >= 3 && !(F_.coeff(1, 1) == -curve_.a1))
            throw internal_mismatch("formal_group_law: z1*z2 coefficient is not -a1");
        trunc_series<D> back = eval_bivar(
            F_, trunc_series<D>::monomial(var_, K_, 1, one_like(curve_.a1)),
            inv_series_.truncated(K_));
        if (!back.all_zero())
            throw internal_mismatch("formal_group_law: F(z, i(z)) != 0");
    }

    trunc_series<D> compute_n(long n) const {
        if (n < 0) {
            trunc_series<D> pos = n_series(-n);
            return compose(pos, n_cache_.at(-1));
        }
        trunc_series<D> z =
            trunc_series<D>::monomial(var_, K_, 1, one_like(curve_.a1));
        trunc_series<D> acc = n_cache_.at(3);
        for (long m = 4; m <= n; ++m)
            acc = eval_bivar(F_, acc, z);
        return acc;
    }

    weierstrass_curve<D> curve_;
    int K_;
    std::string var_;
    bivar_series<D> F_;
    trunc_series<D> inv_series_;
    std::map<long, trunc_series<D>> n_cache_;
};

// Height residues of a group law over the graded ring Z_(2)[a, b]:
// v1 = coefficient of z^2 in [2](z) mod 2; v2 = coefficient of z^4 in [2](z)
// mod (2, v1). Reduction mod v1 is supported for the shapes that actually
// occur: v1 = 0 (reduce mod 2 only) and v1 = unit * a.
struct v1v2_residues {
    graded_poly v1;
    graded_poly v2;
};

inline v1v2_residues residual_v1_v2(const formal_group_law<graded_poly>& G) {
    if (G.order() < 5)
        throw std::invalid_argument("residual_v1_v2: need order >= 5");
    trunc_series<graded_poly> two = G.two_series();
    graded_poly v1 = two.coeff(2).mod2();
    graded_poly c4 = two.coeff(4);
    graded_poly v2;
    if (v1.is_zero_poly())
        v2 = c4.mod2();
    else if (v1.is_unit_multiple_of_a())
        v2 = c4.mod2_mod_a();
    else
        throw unsupported_operation(
            "residual_v1_v2: reduction mod v1 implemented only for v1 = 0 or "
            "v1 = unit * a");
    return {v1, v2};
}

} // namespace fgltheta
