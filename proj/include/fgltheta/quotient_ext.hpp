#pragma once

#include <string>

#include "domain.hpp"
#include "errors.hpp"
#include "trunc_series.hpp"

namespace fgltheta {

// Free rank-3 extension of a base ring D: adjoin d with d^3 = t*d + 2 for a
// fixed parameter t in D. Elements are kept in canonical form
// c0 + c1*d + c2*d^2; products reduce via d^3 -> t*d + 2 and
// d^4 -> t*d^2 + 2*d. Inversion goes through the adjugate of the 3x3
// multiplication matrix, so it needs (and checks) only that the determinant
// is a unit in D.
template <class D>
class quotient_ext {
  public:
    static quotient_ext make(const D& c0, const D& c1, const D& c2, const D& t) {
        return quotient_ext(c0, c1, c2, t);
    }
    static quotient_ext from_base(const D& x, const D& t) {
        return quotient_ext(x, zero_like(t), zero_like(t), t);
    }
    static quotient_ext d_gen(const D& t) {
        return quotient_ext(zero_like(t), one_like(t), zero_like(t), t);
    }

    const D& c0() const { return c0_; }
    const D& c1() const { return c1_; }
    const D& c2() const { return c2_; }
    const D& t() const { return t_; }

    bool is_zero_elem() const {
        return fgltheta::is_zero(c0_) && fgltheta::is_zero(c1_) && fgltheta::is_zero(c2_);
    }

    quotient_ext operator-() const { return quotient_ext(-c0_, -c1_, -c2_, t_); }

    friend quotient_ext operator+(const quotient_ext& x, const quotient_ext& y) {
        x.require_compatible(y);
        return quotient_ext(x.c0_ + y.c0_, x.c1_ + y.c1_, x.c2_ + y.c2_, x.t_);
    }
    friend quotient_ext operator-(const quotient_ext& x, const quotient_ext& y) {
        return x + (-y);
    }
    friend quotient_ext operator*(const quotient_ext& x, const quotient_ext& y) {
        x.require_compatible(y);
        D r0 = x.c0_ * y.c0_;
        D r1 = x.c0_ * y.c1_ + x.c1_ * y.c0_;
        D r2 = x.c0_ * y.c2_ + x.c1_ * y.c1_ + x.c2_ * y.c0_;
        D r3 = x.c1_ * y.c2_ + x.c2_ * y.c1_;
        D r4 = x.c2_ * y.c2_;
        D two = from_int_like(x.t_, 2);
        return quotient_ext(r0 + two * r3,
                            r1 + x.t_ * r3 + two * r4,
                            r2 + x.t_ * r4, x.t_);
    }

    // Determinant of multiplication-by-x on the basis {1, d, d^2}; x is a
    // unit exactly when this is a unit in D.
    D norm_det() const {
        D m00 = c0_, m01 = scale2(c2_), m02 = scale2(c1_);
        D m10 = c1_, m11 = c0_ + t_ * c2_, m12 = t_ * c1_ + scale2(c2_);
        D m20 = c2_, m21 = c1_, m22 = c0_ + t_ * c2_;
        return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
               m02 * (m10 * m21 - m11 * m20);
    }

    quotient_ext inverse() const {
        D m00 = c0_, m01 = scale2(c2_), m02 = scale2(c1_);
        D m10 = c1_, m11 = c0_ + t_ * c2_, m12 = t_ * c1_ + scale2(c2_);
        D m20 = c2_, m21 = c1_, m22 = c0_ + t_ * c2_;
        D minor0 = m11 * m22 - m12 * m21;
        D minor1 = m10 * m22 - m12 * m20;
        D minor2 = m10 * m21 - m11 * m20;
        D det = m00 * minor0 - m01 * minor1 + m02 * minor2;
        if (!fgltheta::is_unit(det))
            throw not_a_unit("quotient_ext: determinant is not a unit in the base ring");
        D det_inv = fgltheta::ring_inv(det);
        return quotient_ext(minor0 * det_inv, -(minor1 * det_inv), minor2 * det_inv, t_);
    }

    // Image under the base-ring homomorphism sending d to alpha; embed maps
    // base coefficients into alpha's ring.
    template <class R, class F>
    R eval(const R& alpha, F&& embed) const {
        return embed(c0_) + embed(c1_) * alpha + embed(c2_) * alpha * alpha;
    }

    friend bool operator==(const quotient_ext& x, const quotient_ext& y) {
        return x.t_ == y.t_ && x.c0_ == y.c0_ && x.c1_ == y.c1_ && x.c2_ == y.c2_;
    }
    friend bool operator!=(const quotient_ext& x, const quotient_ext& y) {
        return !(x == y);
    }

    std::string str() const {
        return "(" + to_display(c0_) + ") + (" + to_display(c1_) + ")*d + (" +
               to_display(c2_) + ")*d^2";
    }

  private:
    quotient_ext(D c0, D c1, D c2, D t)
        : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)), t_(std::move(t)) {}

    D scale2(const D& x) const { return from_int_like(t_, 2) * x; }

    void require_compatible(const quotient_ext& y) const {
        if (!fgltheta::same_context(t_, y.t_) || !(t_ == y.t_))
            throw mismatched_domains("quotient_ext: parameters t differ");
    }

    D c0_, c1_, c2_, t_;
};

template <class D>
quotient_ext<D> zero_like(const quotient_ext<D>& x) {
    return quotient_ext<D>::from_base(zero_like(x.t()), x.t());
}
template <class D>
quotient_ext<D> one_like(const quotient_ext<D>& x) {
    return quotient_ext<D>::from_base(one_like(x.t()), x.t());
}
template <class D>
quotient_ext<D> from_int_like(const quotient_ext<D>& x, long v) {
    return quotient_ext<D>::from_base(from_int_like(x.t(), v), x.t());
}
template <class D>
bool is_zero(const quotient_ext<D>& x) {
    return x.is_zero_elem();
}
template <class D>
bool is_unit(const quotient_ext<D>& x) {
    return is_unit(x.norm_det());
}
template <class D>
quotient_ext<D> ring_inv(const quotient_ext<D>& x) {
    return x.inverse();
}
template <class D>
bool same_context(const quotient_ext<D>& x, const quotient_ext<D>& y) {
    return same_context(x.t(), y.t()) && x.t() == y.t();
}
template <class D>
std::string to_display(const quotient_ext<D>& x) {
    return x.str();
}

} // namespace fgltheta
