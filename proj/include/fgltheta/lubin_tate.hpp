#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fgl.hpp"
#include "trunc_series.hpp"
#include "witt.hpp"

namespace fgltheta {

// Element of the Lubin-Tate ring W(F4)[[u1]][u^(+-1)] at working precision
// (N digits, u1-order K): a finite sum over u-exponents of truncated
// u1-series with Witt coefficients. u is graded (|u| = 2, |u1| = 0), so the
// u-exponent map is exact — only the u1-direction is truncated.
//
// The group G = F4^x x| Gal acts by ring automorphisms:
//   zeta:  u1 -> zeta*u1,  u -> zeta^{-1}*u,  coefficients fixed;
//   sigma: u1 -> u1,       u -> u,            coefficients by Frobenius.
class lt_elem {
  public:
    using series = trunc_series<witt_f4>;

    static lt_elem zero(int digits, int order) { return lt_elem(digits, order); }
    static lt_elem witt_const(int digits, int order, const witt_f4& c) {
        lt_elem e(digits, order);
        e.add_component(0, series::constant(var_name(), order, c));
        return e;
    }
    static lt_elem from_int(int digits, int order, long long v) {
        return witt_const(digits, order, witt_f4::from_int(v, digits));
    }
    static lt_elem u1_power(int digits, int order, int j) {
        lt_elem e(digits, order);
        e.add_component(0, series::monomial(var_name(), order, j,
                                            witt_f4::from_int(1, digits)));
        return e;
    }
    static lt_elem u_power(int digits, int order, int k) {
        lt_elem e(digits, order);
        e.add_component(k, series::constant(var_name(), order,
                                            witt_f4::from_int(1, digits)));
        return e;
    }
    static lt_elem from_series(int digits, int order, int u_exp, const series& f) {
        if (f.order() != order)
            throw mismatched_domains("lt_elem: series order does not match context");
        lt_elem e(digits, order);
        e.add_component(u_exp, f);
        return e;
    }

    int digits() const { return digits_; }
    int order() const { return order_; }
    static const std::string& var_name() {
        static const std::string v = "u1";
        return v;
    }

    const std::map<int, series>& components() const { return comps_; }
    series component(int u_exp) const {
        auto it = comps_.find(u_exp);
        return it == comps_.end() ? zero_series() : it->second;
    }

    bool is_zero_elem() const { return comps_.empty(); }
    // Unit detection covers the shapes this library inverts: a single
    // u-monomial whose u1-series has a unit constant term. Multi-monomial
    // elements may well be units of the full ring; they are out of scope.
    bool is_unit_elem() const {
        return comps_.size() == 1 && is_unit(comps_.begin()->second);
    }
    lt_elem inverse() const {
        if (comps_.size() != 1)
            throw unsupported_operation(
                "lt_elem: inversion is supported only for single u-monomials");
        lt_elem out(digits_, order_);
        out.add_component(-comps_.begin()->first, comps_.begin()->second.inverse());
        return out;
    }

    lt_elem operator-() const {
        lt_elem out(digits_, order_);
        for (const auto& [k, f] : comps_)
            out.add_component(k, -f);
        return out;
    }
    friend lt_elem operator+(const lt_elem& x, const lt_elem& y) {
        x.require_compatible(y);
        lt_elem out = x;
        for (const auto& [k, f] : y.comps_)
            out.add_component(k, f);
        return out;
    }
    friend lt_elem operator-(const lt_elem& x, const lt_elem& y) { return x + (-y); }
    friend lt_elem operator*(const lt_elem& x, const lt_elem& y) {
        x.require_compatible(y);
        lt_elem out(x.digits_, x.order_);
        for (const auto& [kx, fx] : x.comps_)
            for (const auto& [ky, fy] : y.comps_)
                out.add_component(kx + ky, fx * fy);
        return out;
    }

    lt_elem act_zeta() const {
        lt_elem out(digits_, order_);
        witt_f4 w[3] = {witt_f4::from_int(1, digits_), witt_f4::omega(digits_),
                        witt_f4::omega(digits_) * witt_f4::omega(digits_)};
        for (const auto& [k, f] : comps_) {
            series g = zero_series();
            for (int j = 0; j < order_; ++j) {
                int tw = ((j - k) % 3 + 3) % 3;
                g.set_coeff(j, f.coeff(j) * w[tw]);
            }
            out.add_component(k, g);
        }
        return out;
    }
    lt_elem act_sigma() const {
        lt_elem out(digits_, order_);
        for (const auto& [k, f] : comps_) {
            series g = zero_series();
            for (int j = 0; j < order_; ++j)
                g.set_coeff(j, f.coeff(j).frobenius());
            out.add_component(k, g);
        }
        return out;
    }

    // Degree of a homogeneous element (single u-exponent k: degree 2k).
    bool homogeneous_degree(int& deg) const {
        if (comps_.size() != 1)
            return false;
        deg = 2 * comps_.begin()->first;
        return true;
    }

    friend bool operator==(const lt_elem& x, const lt_elem& y) {
        return x.digits_ == y.digits_ && x.order_ == y.order_ && x.comps_ == y.comps_;
    }
    friend bool operator!=(const lt_elem& x, const lt_elem& y) { return !(x == y); }

    std::string str() const {
        if (comps_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, f] : comps_) {
            if (!first)
                out += " + ";
            out += "u^" + std::to_string(k) + "*[" + f.str() + "]";
            first = false;
        }
        return out;
    }

  private:
    lt_elem(int digits, int order) : digits_(digits), order_(order) {
        if (digits < 1 || order < 1)
            throw std::invalid_argument("lt_elem: bad context");
    }
    series zero_series() const {
        return series::zeros(var_name(), order_, witt_f4::from_int(0, digits_));
    }
    void add_component(int u_exp, const series& f) {
        auto it = comps_.find(u_exp);
        if (it == comps_.end()) {
            if (!f.all_zero())
                comps_.emplace(u_exp, f);
            return;
        }
        series sum = it->second + f;
        if (sum.all_zero())
            comps_.erase(it);
        else
            it->second = sum;
    }
    void require_compatible(const lt_elem& y) const {
        if (digits_ != y.digits_ || order_ != y.order_)
            throw mismatched_domains("lt_elem: mixed precision contexts");
    }

    int digits_;
    int order_;
    std::map<int, series> comps_;
};

inline lt_elem zero_like(const lt_elem& x) { return lt_elem::zero(x.digits(), x.order()); }
inline lt_elem one_like(const lt_elem& x) {
    return lt_elem::from_int(x.digits(), x.order(), 1);
}
inline lt_elem from_int_like(const lt_elem& x, long long v) {
    return lt_elem::from_int(x.digits(), x.order(), v);
}
inline bool is_zero(const lt_elem& x) { return x.is_zero_elem(); }
inline bool is_unit(const lt_elem& x) { return x.is_unit_elem(); }
inline lt_elem ring_inv(const lt_elem& x) { return x.inverse(); }
inline bool same_context(const lt_elem& x, const lt_elem& y) {
    return x.digits() == y.digits() && x.order() == y.order();
}
inline std::string to_display(const lt_elem& x) { return x.str(); }

// Exact projector onto the zeta-fixed part: averaging over the odd-order
// subgroup <zeta> is legitimate 2-adically because 1/3 is a unit.
inline lt_elem project_c3(const lt_elem& e) {
    lt_elem z1 = e.act_zeta();
    lt_elem z2 = z1.act_zeta();
    witt_f4 third = witt_f4::from_int(3, e.digits()).inv();
    return (e + z1 + z2) * lt_elem::witt_const(e.digits(), e.order(), third);
}

// --- mod-2 reductions used by the height diagnostics -------------------------

inline bool witt_zero_mod2(const witt_f4& c) {
    return (c.re().value() & 1) == 0 && (c.im().value() & 1) == 0;
}
// e == 0 in B/2?
inline bool lt_zero_mod2(const lt_elem& e) {
    for (const auto& [k, f] : e.components())
        for (int j = 0; j < f.order(); ++j)
            if (!witt_zero_mod2(f.coeff(j)))
                return false;
    return true;
}
// e == 0 in B/(2, u1)?
inline bool lt_zero_mod2_u1(const lt_elem& e) {
    for (const auto& [k, f] : e.components())
        if (!witt_zero_mod2(f.coeff(0)))
            return false;
    return true;
}
// e a unit of B/(2, u1) = F4[u^(+-1)], i.e. a single nonzero u-monomial?
inline bool lt_unit_mod2_u1(const lt_elem& e) {
    int nonzero = 0;
    for (const auto& [k, f] : e.components())
        if (!witt_zero_mod2(f.coeff(0)))
            ++nonzero;
    return nonzero == 1;
}

// Height pattern of a 2-series over the Lubin-Tate ring:
//   h1: [2](z) = (unit)*z^2 + O(z^3) mod 2        (the z-coefficient dies);
//   h2: [2](z) = (unit)*z^4 + O(z^5) mod (2, u1)  (z^2, z^3 die as well).
struct height_report {
    bool h1 = false;
    bool h2 = false;
};

inline height_report height_diagnostics(const trunc_series<lt_elem>& two_series) {
    if (two_series.order() < 5)
        throw std::invalid_argument("height_diagnostics: need [2] to order >= 5");
    height_report rep;
    rep.h1 = lt_zero_mod2(two_series.coeff(1)) && !lt_zero_mod2(two_series.coeff(2));
    rep.h2 = lt_zero_mod2_u1(two_series.coeff(2)) && lt_zero_mod2_u1(two_series.coeff(3)) &&
             lt_unit_mod2_u1(two_series.coeff(4));
    return rep;
}

inline height_report height_diagnostics(const formal_group_law<lt_elem>& G) {
    return height_diagnostics(G.two_series());
}

// --- invariants of the G-action ----------------------------------------------

// Degree-0 fixed subring, certified at (digits, order). For the coefficient
// c of u1^j (a free rank-1 W-module), the fixedness conditions are linear:
//   zeta-fixed:  (omega^j - 1) * c = 0  — forces c = 0 when omega^j - 1 is a
//                unit, i.e. whenever j is not divisible by 3;
//   sigma-fixed: c - sigma(c) = im(c) * (1 + 2*omega) = 0 — forces im(c) = 0
//                because 1 + 2*omega has odd norm.
// kernel_ranks[j] records the W-rank of the solution space as a Z/2^N-module
// (1 when j % 3 == 0, else 0); the fixed subring is the span of {u1^(3m)}
// with Z/2^N coefficients — the image of Z2[[x]] under x -> u1^3.
struct lt_invariants_report {
    int digits = 0;
    int order = 0;
    std::vector<int> fixed_exponents;
    std::vector<int> kernel_ranks;
    bool basis_fixed_verified = false;
    bool matches_x_image = false;
};

inline lt_invariants_report lubin_tate_invariants(int digits, int order) {
    if (digits < 2 || order < 4)
        throw std::invalid_argument("lubin_tate_invariants: need digits >= 2, order >= 4");
    lt_invariants_report rep;
    rep.digits = digits;
    rep.order = order;

    witt_f4 one = witt_f4::from_int(1, digits);
    witt_f4 omega = witt_f4::omega(digits);
    witt_f4 two_omega_plus_one = one + omega + omega; // 1 + 2w, norm 3
    for (int j = 0; j < order; ++j) {
        witt_f4 wj = one;
        for (int m = 0; m < j % 3; ++m)
            wj = wj * omega;
        int rank;
        if (is_unit(wj - one))
            rank = 0; // zeta-condition already forces c = 0
        else if (is_unit(two_omega_plus_one))
            rank = 1; // sigma-condition forces c into Z/2^N
        else
            rank = 2;
        rep.kernel_ranks.push_back(rank);
        if (rank >= 1)
            rep.fixed_exponents.push_back(j);
    }

    rep.basis_fixed_verified = true;
    for (int j : rep.fixed_exponents) {
        lt_elem e = lt_elem::u1_power(digits, order, j);
        if (!(e.act_zeta() == e) || !(e.act_sigma() == e))
            rep.basis_fixed_verified = false;
    }

    bool pattern_ok = true;
    for (int j = 0; j < order; ++j)
        if ((rep.kernel_ranks[j] == 1) != (j % 3 == 0))
            pattern_ok = false;
    rep.matches_x_image = pattern_ok && rep.basis_fixed_verified;
    return rep;
}

// --- linear independence of the orbit of beta = zeta * (1 + u + u^2) --------

namespace detail {
inline mpz_class int_det(std::vector<std::vector<mpz_class>> m) {
    // Fraction-free Gaussian elimination (Bareiss).
    std::size_t n = m.size();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline int f2_rank(std::vector<std::vector<int>> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] % 2 == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(rank) && rows[i][c] % 2 != 0)
                for (std::size_t j = 0; j < cols; ++j)
                    rows[i][j] = (rows[i][j] + rows[rank][j]) % 2;
        ++rank;
    }
    return rank;
}
} // namespace detail

// The 6 G-translates of beta = zeta*(1 + u + u^2), written out over the
// Z2-basis {1, omega} x {1, u, u^2}: a 6x6 integer matrix. An odd
// determinant certifies that the translates span a free module of rank
// |G| = 6. Each single u-degree only contributes a rank-2 block mod 2 —
// the degreewise and total statements differ, so both are reported.
struct orbit_report {
    mpz_class det;
    bool det_odd = false;
    std::vector<int> degreewise_ranks;
};

inline orbit_report orbit_independence(int digits) {
    int order = 2; // u1 plays no role in beta's orbit
    lt_elem beta = lt_elem::zero(digits, order);
    witt_f4 omega = witt_f4::omega(digits);
    for (int i = 0; i <= 2; ++i)
        beta = beta + lt_elem::u_power(digits, order, i) *
                          lt_elem::witt_const(digits, order, omega);

    std::vector<lt_elem> translates;
    lt_elem base = beta;
    for (int eps = 0; eps <= 1; ++eps) {
        lt_elem g = (eps == 0) ? beta : beta.act_sigma();
        for (int a = 0; a <= 2; ++a) {
            translates.push_back(g);
            g = g.act_zeta();
        }
    }

    std::vector<std::vector<mpz_class>> m;
    for (const lt_elem& tr : translates) {
        std::vector<mpz_class> row;
        for (int i = 0; i <= 2; ++i) {
            witt_f4 c = tr.component(i).coeff(0);
            row.emplace_back(static_cast<long>(c.re().signed_minimal()));
            row.emplace_back(static_cast<long>(c.im().signed_minimal()));
        }
        m.push_back(std::move(row));
    }

    orbit_report rep;
    rep.det = detail::int_det(m);
    rep.det_odd = mpz_odd_p(rep.det.get_mpz_t());
    for (int i = 0; i <= 2; ++i) {
        std::vector<std::vector<int>> block;
        for (const auto& row : m)
            block.push_back({mpz_odd_p(row[2 * i].get_mpz_t()) ? 1 : 0,
                             mpz_odd_p(row[2 * i + 1].get_mpz_t()) ? 1 : 0});
        rep.degreewise_ranks.push_back(detail::f2_rank(block));
    }
    return rep;
}

// The Lubin-Tate instance of the graded model curve: y^2 + a*xy + b*y = x^3
// specialized along a -> u1*u, b -> u^3.
inline weierstrass_curve<lt_elem> lubin_tate_curve(int digits, int order) {
    lt_elem a = lt_elem::from_series(
        digits, order, 1,
        trunc_series<witt_f4>::monomial(lt_elem::var_name(), order, 1,
                                        witt_f4::from_int(1, digits)));
    lt_elem b = lt_elem::u_power(digits, order, 3);
    lt_elem z = lt_elem::zero(digits, order);
    return weierstrass_curve<lt_elem>(a, z, b, z, z);
}

} // namespace fgltheta
