#pragma once

#include <string>

#include "padic.hpp"

namespace fgltheta {

// W(F4) truncated mod 2^N: elements re + im*w with w^2 + w + 1 = 0.
// The Frobenius lift sends w to w^2 = -1 - w, i.e. sigma(a + b w) = (a - b) - b w;
// the Teichmueller lift of a generator of F4* is w itself (exactly a cube root
// of unity: w^3 = 1 holds on the nose, not just mod 2).
class witt_f4 {
  public:
    witt_f4(padic_approx re, padic_approx im) : re_(re), im_(im) {}

    static witt_f4 from_int(long long v, int digits) {
        return witt_f4(padic_approx::from_int(v, digits),
                       padic_approx::from_int(0, digits));
    }
    static witt_f4 omega(int digits) {
        return witt_f4(padic_approx::from_int(0, digits),
                       padic_approx::from_int(1, digits));
    }

    const padic_approx& re() const { return re_; }
    const padic_approx& im() const { return im_; }
    int digits() const { return std::min(re_.digits(), im_.digits()); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    // Unit iff nonzero in the residue field F4 = W(F4)/2.
    bool is_unit() const { return re_.is_unit() || im_.is_unit(); }

    witt_f4 operator-() const { return witt_f4(-re_, -im_); }

    friend witt_f4 operator+(const witt_f4& a, const witt_f4& b) {
        return witt_f4(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend witt_f4 operator-(const witt_f4& a, const witt_f4& b) {
        return witt_f4(a.re_ - b.re_, a.im_ - b.im_);
    }
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w  using w^2 = -1 - w.
    friend witt_f4 operator*(const witt_f4& a, const witt_f4& b) {
        padic_approx ac = a.re_ * b.re_, bd = a.im_ * b.im_;
        padic_approx ad_bc = a.re_ * b.im_ + a.im_ * b.re_;
        return witt_f4(ac - bd, ad_bc - bd);
    }

    // sigma(a + bw) = (a - b) - b w ; order two on the nose.
    witt_f4 frobenius() const { return witt_f4(re_ - im_, -im_); }

    // Galois norm a^2 - ab + b^2 = x * sigma(x); a 2-adic unit iff x is a unit.
    padic_approx norm() const { return re_ * re_ - re_ * im_ + im_ * im_; }

    witt_f4 inv() const {
        if (!is_unit())
            throw not_a_unit("witt_f4::inv: element reduces to 0 in F4");
        witt_f4 conj = frobenius();
        padic_approx ninv = norm().inv();
        return witt_f4(conj.re_ * ninv, conj.im_ * ninv);
    }

    friend bool operator==(const witt_f4& a, const witt_f4& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const witt_f4& a, const witt_f4& b) { return !(a == b); }

    std::string str() const {
        return re_.str() + " + (" + im_.str() + ")*w";
    }

  private:
    padic_approx re_, im_;
};

inline witt_f4 zero_like(const witt_f4& x) {
    return witt_f4::from_int(0, x.digits());
}
inline witt_f4 one_like(const witt_f4& x) {
    return witt_f4::from_int(1, x.digits());
}
inline witt_f4 from_int_like(const witt_f4& x, long long v) {
    return witt_f4::from_int(v, x.digits());
}
inline bool is_zero(const witt_f4& x) { return x.is_zero(); }
inline bool is_unit(const witt_f4& x) { return x.is_unit(); }
inline witt_f4 ring_inv(const witt_f4& x) { return x.inv(); }
inline bool same_context(const witt_f4&, const witt_f4&) { return true; }
inline std::string to_display(const witt_f4& x) { return x.str(); }

} // namespace fgltheta
