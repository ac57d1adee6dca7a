#pragma once

#include <gmpxx.h>

#include <string>

#include "domain.hpp"
#include "errors.hpp"
#include "quotient_ext.hpp"
#include "trunc_series.hpp"
#include "weierstrass.hpp"

namespace fgltheta {

// --- cube roots -------------------------------------------------------------
//
// The isogeny normalization needs a cube root of the unit D3 = a3 + r*a1 + 2w.
// Generic domains only support the trivial case; richer domains provide an
// overload. The contract: the returned u satisfies u^3 == x exactly, or the
// function throws unsupported_operation.

template <class D>
D cube_root(const D& x) {
    if (x == one_like(x))
        return x;
    throw unsupported_operation("cube_root: only the trivial root is available here");
}

inline bool exact_rational_cbrt(const mpq_class& x, mpq_class& out) {
    mpz_class num = x.get_num(), den = x.get_den();
    bool negative = num < 0;
    mpz_class an = abs(num), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), an.get_mpz_t(), 3))
        return false;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3))
        return false;
    out = mpq_class(negative ? mpz_class(-rn) : rn, rd);
    return true;
}

// Cube root in Q[[t]][d]/(d^3 - t*d - 2): seed with a monomial c*d^j matching
// the t = 0 fiber (where d^3 = 2, so (c*d^j)^3 = c^3 * 2^j is rational), then
// sharpen t-adically with Newton's iteration u <- (2u^3 + x) / (3u^2), which
// doubles the certified t-order each step. The result is verified against
// u^3 == x exactly before being returned.
inline quotient_ext<trunc_series<mpq_class>>
cube_root(const quotient_ext<trunc_series<mpq_class>>& x) {
    using base = trunc_series<mpq_class>;
    using ext = quotient_ext<base>;
    const base& t = x.t();
    int K = t.order();

    mpq_class g0 = x.c0().coeff(0);
    if (!is_zero(x.c1().coeff(0)) || !is_zero(x.c2().coeff(0)))
        throw unsupported_operation(
            "cube_root: t = 0 fiber is not rational; no monomial seed");
    ext u = ext::from_base(base::zeros(t.var(), K, x.c0().proto()), t);
    bool seeded = false;
    mpq_class pow2 = 1;
    for (int j = 0; j <= 2 && !seeded; ++j) {
        mpq_class c;
        if (exact_rational_cbrt(g0 / pow2, c)) {
            base cs = base::constant(t.var(), K, c);
            ext dj = ext::from_base(base::constant(t.var(), K, 1), t);
            ext d = ext::d_gen(t);
            for (int m = 0; m < j; ++m)
                dj = dj * d;
            u = dj * ext::from_base(cs, t);
            seeded = true;
        }
        pow2 *= 2;
    }
    if (!seeded)
        throw unsupported_operation("cube_root: t = 0 fiber has no rational cube root");

    ext three = ext::from_base(base::constant(t.var(), K, 3), t);
    ext two = ext::from_base(base::constant(t.var(), K, 2), t);
    int steps = 2;
    for (int reach = 1; reach < K; reach *= 2)
        ++steps;
    for (int it = 0; it < steps; ++it)
        u = (two * u * u * u + x) * ring_inv(three * u * u);
    if (!(u * u * u == x))
        throw unsupported_operation("cube_root: Newton iteration did not converge");
    return u;
}

// --- Velu's 2-isogeny --------------------------------------------------------

template <class D>
struct velu_result {
    weierstrass_curve<D> image;     // normalized when `normalized`, else = raw
    weierstrass_curve<D> raw_image; // direct Velu output
    bool normalized;
    // Variable change x = u^2 x' + r, y = u^3 y' + u^2 s x' + w taking the raw
    // image to `image`; meaningful only when `normalized`.
    D r, s, u, w_shift;
};

// Image of a point under the isogeny with kernel {O, P0}: the translation
// X = x + tQ/(x - x0), Y = y - tQ*(a1*(x - x0) + y - y0)/(x - x0)^2.
// Defined away from the kernel fiber, i.e. x - x0 must be a unit.
template <class D>
affine_point<D> velu_map_point(const weierstrass_curve<D>& E,
                               const affine_point<D>& kernel,
                               const affine_point<D>& Q) {
    const D& x0 = kernel.x;
    const D& y0 = kernel.y;
    D two = from_int_like(E.a1, 2);
    D three = from_int_like(E.a1, 3);
    D tQ = three * x0 * x0 + two * E.a2 * x0 + E.a4 - E.a1 * y0;
    D dx = Q.x - x0;
    if (!is_unit(dx))
        throw not_a_unit("velu_map_point: point lies over the kernel fiber");
    D dx_inv = ring_inv(dx);
    D X = Q.x + tQ * dx_inv;
    D Y = Q.y - tQ * (E.a1 * dx + Q.y - y0) * dx_inv * dx_inv;
    return {X, Y};
}

template <class D>
velu_result<D> velu_two_isogeny(const weierstrass_curve<D>& E,
                                const affine_point<D>& P) {
    if (!is_two_torsion(E, P)) // throws not_on_curve for off-curve points
        throw kernel_not_two_torsion("velu_two_isogeny: kernel point is not 2-torsion");

    const D& x0 = P.x;
    const D& y0 = P.y;
    D two = from_int_like(E.a1, 2);
    D three = from_int_like(E.a1, 3);
    D four = from_int_like(E.a1, 4);
    D five = from_int_like(E.a1, 5);
    D seven = from_int_like(E.a1, 7);

    // For a 2-torsion kernel point the vertical component g^y = 2y0 + a1*x0 + a3
    // vanishes, leaving the translation data tQ = g^x and wQ = x0 * g^x.
    D tQ = three * x0 * x0 + two * E.a2 * x0 + E.a4 - E.a1 * y0;
    D wQ = tQ * x0;
    weierstrass_curve<D> raw(E.a1, E.a2, E.a3,
                             E.a4 - five * tQ,
                             E.a6 - (E.a1 * E.a1 + four * E.a2) * tQ - seven * wQ);

    if (!(E.has_gamma1_shape() && is_unit(x0))) {
        D z = zero_like(E.a1);
        return {raw, raw, false, z, z, z, z};
    }

    // The domain carries the marked 3-torsion point (0, 0); its image pins the
    // unique renormalization of the raw curve back to y^2 + A*xy + B*y = x^3.
    affine_point<D> img0 = velu_map_point(E, P, affine_point<D>{zero_like(E.a1), zero_like(E.a1)});
    if (!on_curve(raw, img0))
        throw internal_mismatch("velu_two_isogeny: image of (0,0) misses the raw image curve");

    const D& r = img0.x;
    const D& w = img0.y;
    D D3 = raw.a3 + r * raw.a1 + two * w;
    if (!is_unit(D3))
        throw not_a_unit("velu_two_isogeny: normalization scale a3 + r*a1 + 2w is not a unit");
    D D3_inv = ring_inv(D3);
    D s = (raw.a4 + two * r * raw.a2 - w * raw.a1 + three * r * r) * D3_inv;

    // With (r, w) on the curve and s as above, the a2, a4, a6 components of
    // the transformed curve must vanish identically.
    D a2_check = raw.a2 - s * raw.a1 + three * r - s * s;
    D a4_check = raw.a4 - s * raw.a3 + two * r * raw.a2 - (w + r * s) * raw.a1 +
                 three * r * r - two * s * w;
    D a6_check = raw.a6 + r * raw.a4 + r * r * raw.a2 + r * r * r - w * raw.a3 -
                 w * w - r * w * raw.a1;
    if (!is_zero(a2_check) || !is_zero(a4_check) || !is_zero(a6_check))
        throw internal_mismatch("velu_two_isogeny: renormalization residuals are nonzero");

    D u = cube_root(D3);
    if (!(u * u * u == D3) || !is_unit(u))
        throw internal_mismatch("velu_two_isogeny: invalid cube root");
    D u_inv = ring_inv(u);
    D A = (raw.a1 + two * s) * u_inv;
    D B = D3 * ring_inv(u * u * u);
    if (!(B == one_like(B)))
        throw internal_mismatch("velu_two_isogeny: normalized b-coefficient is not 1");

    weierstrass_curve<D> image(A, zero_like(A), B, zero_like(A), zero_like(A));
    return {image, raw, true, r, s, u, w};
}

} // namespace fgltheta
