#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "trunc_series.hpp"

namespace fgltheta {

// Laurent series with bounded principal part over a tracked window
// [lo, hi): the element lies in var^lo * D[[var]] and its coefficients are
// certified for exponents below hi. Addition intersects certainty; the
// product window floor is the sum of floors and its ceiling the honest
// min(val(a) + hi(b), val(b) + hi(a)). Inversion factors the lowest tracked
// nonzero monomial, which must carry a unit coefficient.
template <class D>
class laurent_series {
  public:
    laurent_series(std::string var, int lo, std::vector<D> coeffs)
        : var_(std::move(var)), lo_(lo), c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("laurent_series: empty window");
    }

    static laurent_series zeros(const std::string& var, int lo, int hi, const D& proto) {
        if (hi <= lo)
            throw std::invalid_argument("laurent_series::zeros: empty window");
        return laurent_series(var, lo,
                              std::vector<D>(static_cast<std::size_t>(hi - lo), zero_like(proto)));
    }
    static laurent_series monomial(const std::string& var, int lo, int hi, int k, const D& coeff) {
        laurent_series s = zeros(var, lo, hi, coeff);
        s.set_coeff(k, coeff);
        return s;
    }
    static laurent_series from_trunc(const trunc_series<D>& f) {
        std::vector<D> out;
        out.reserve(static_cast<std::size_t>(f.order()));
        for (int k = 0; k < f.order(); ++k)
            out.push_back(f.coeff(k));
        return laurent_series(f.var(), 0, std::move(out));
    }

    const std::string& var() const { return var_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()); }
    const D& proto() const { return c_[0]; }

    bool knows(int k) const { return k >= lo_ && k < hi(); }
    // Coefficient of var^k; exact zero below the floor, error above the ceiling.
    D coeff(int k) const {
        if (k < lo_)
            return zero_like(proto());
        if (k >= hi())
            throw std::out_of_range("laurent_series::coeff: exponent above certified window");
        return c_[static_cast<std::size_t>(k - lo_)];
    }
    void set_coeff(int k, const D& v) {
        if (!knows(k))
            throw std::out_of_range("laurent_series::set_coeff: exponent outside window");
        c_[static_cast<std::size_t>(k - lo_)] = v;
    }

    // Lowest exponent with a nonzero tracked coefficient; hi() if none.
    int valuation() const {
        for (int k = lo_; k < hi(); ++k)
            if (!is_zero(c_[static_cast<std::size_t>(k - lo_)]))
                return k;
        return hi();
    }
    bool all_zero() const { return valuation() == hi(); }

    laurent_series operator-() const {
        std::vector<D> out;
        out.reserve(c_.size());
        for (const D& x : c_)
            out.push_back(-x);
        return laurent_series(var_, lo_, std::move(out));
    }

    friend laurent_series operator+(const laurent_series& a, const laurent_series& b) {
        a.require_same_var(b);
        int lo = std::min(a.lo_, b.lo_);
        int hi = std::min(a.hi(), b.hi());
        if (hi <= lo)
            throw std::invalid_argument("laurent_series::+: certified windows do not overlap");
        laurent_series out = zeros(a.var_, lo, hi, a.proto());
        for (int k = lo; k < hi; ++k)
            out.set_coeff(k, a.coeff(k) + b.coeff(k));
        return out;
    }
    friend laurent_series operator-(const laurent_series& a, const laurent_series& b) {
        return a + (-b);
    }
    friend laurent_series operator*(const laurent_series& a, const laurent_series& b) {
        a.require_same_var(b);
        int va = a.valuation(), vb = b.valuation();
        int lo = a.lo_ + b.lo_;
        // hidden terms of a enter at >= hi(a) + vb, of b at >= hi(b) + va
        int hi = std::min(a.hi() + vb, b.hi() + va);
        if (hi <= lo)
            hi = lo + 1; // fully unknown beyond an O(var^lo) bound; keep a slot
        laurent_series out = zeros(a.var_, lo, hi, a.proto());
        for (int i = a.lo_; i < a.hi(); ++i) {
            if (!is_zero(a.coeff(i))) {
                for (int j = b.lo_; j < b.hi() && i + j < hi; ++j)
                    out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
            }
        }
        return out;
    }

    laurent_series scaled(const D& s) const {
        std::vector<D> out;
        out.reserve(c_.size());
        for (const D& x : c_)
            out.push_back(x * s);
        return laurent_series(var_, lo_, std::move(out));
    }

    // Multiplication by var^m (m of either sign): exact reindexing.
    laurent_series shifted(int m) const { return laurent_series(var_, lo_ + m, c_); }

    laurent_series restricted(int lo, int hi) const {
        if (lo < lo_ || hi > this->hi() || hi <= lo)
            throw std::invalid_argument("laurent_series::restricted: not a subwindow");
        return laurent_series(var_, lo,
                              std::vector<D>(c_.begin() + (lo - lo_), c_.begin() + (hi - lo_)));
    }

    // Inverse: factor f = u * var^v * (1 + w) off the lowest nonzero monomial,
    // u a unit, val(w) >= 1; then f^-1 = u^-1 var^-v sum (-w)^k, certified on
    // [-v, hi - 2v).
    laurent_series inverse() const {
        int v = valuation();
        if (v == hi())
            throw non_unit_leading_coefficient(
                "laurent_series::inverse: no nonzero tracked coefficient");
        const D lead = coeff(v);
        if (!is_unit(lead))
            throw non_unit_leading_coefficient(
                "laurent_series::inverse: lowest nonzero coefficient is not a unit");
        D u_inv = ring_inv(lead);
        int K = hi() - v; // number of certified coefficients of (1 + w)
        trunc_series<D> unit_part = trunc_series<D>::zeros(var_, K, proto());
        for (int k = 0; k < K; ++k)
            unit_part.set_coeff(k, coeff(v + k) * u_inv);
        trunc_series<D> inv_unit = unit_part.inverse();
        laurent_series out = zeros(var_, -v, -v + K, proto());
        for (int k = 0; k < K; ++k)
            out.set_coeff(-v + k, inv_unit.coeff(k) * u_inv);
        return out;
    }

    laurent_series pow(int e) const {
        if (e < 0)
            return inverse().pow(-e);
        if (e == 0) {
            laurent_series out = zeros(var_, 0, std::max(1, hi()), proto());
            out.set_coeff(0, one_like(proto()));
            return out;
        }
        laurent_series acc = *this;
        for (int i = 1; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    friend bool operator==(const laurent_series& a, const laurent_series& b) {
        return a.var_ == b.var_ && a.lo_ == b.lo_ && a.c_ == b.c_;
    }
    friend bool operator!=(const laurent_series& a, const laurent_series& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        bool first = true;
        for (int k = lo_; k < hi(); ++k) {
            if (is_zero(coeff(k)))
                continue;
            if (!first)
                out += " + ";
            out += "(" + to_display(coeff(k)) + ")";
            if (k != 0)
                out += "*" + var_ + "^" + std::to_string(k);
            first = false;
        }
        if (first)
            out = "0";
        return out + " + O(" + var_ + "^" + std::to_string(hi()) + ")";
    }

  private:
    void require_same_var(const laurent_series& other) const {
        if (var_ != other.var_)
            throw mismatched_domains("laurent_series: mixed variables '" + var_ + "' and '" +
                                     other.var_ + "'");
    }

    std::string var_;
    int lo_;
    std::vector<D> c_;
};

} // namespace fgltheta
