#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "domain.hpp"
#include "errors.hpp"

namespace fgltheta {

// Dense truncated power series over a coefficient domain D. A series of
// order K certifies its coefficients modulo var^K; every operation truncates
// to the order it can actually certify (the shortest operand for ring ops,
// min(K_f * val(g), K_g) for composition) and never silently inflates it.
template <class D>
class trunc_series {
  public:
    trunc_series(std::string var, std::vector<D> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("trunc_series: order must be at least 1");
    }

    static trunc_series zeros(const std::string& var, int order, const D& proto) {
        if (order < 1)
            throw std::invalid_argument("trunc_series::zeros: order must be at least 1");
        return trunc_series(var, std::vector<D>(static_cast<std::size_t>(order), zero_like(proto)));
    }
    static trunc_series constant(const std::string& var, int order, const D& value) {
        trunc_series s = zeros(var, order, value);
        s.c_[0] = value;
        return s;
    }
    // The monomial coeff * var^k.
    static trunc_series monomial(const std::string& var, int order, int k, const D& coeff) {
        trunc_series s = zeros(var, order, coeff);
        if (k < 0 || k >= order)
            throw std::invalid_argument("trunc_series::monomial: exponent outside window");
        s.c_[static_cast<std::size_t>(k)] = coeff;
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()); }
    const D& proto() const { return c_[0]; }

    const D& coeff(int k) const {
        if (k < 0 || k >= order())
            throw std::out_of_range("trunc_series::coeff: exponent outside certified window");
        return c_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, const D& v) {
        if (k < 0 || k >= order())
            throw std::out_of_range("trunc_series::set_coeff: exponent outside certified window");
        c_[static_cast<std::size_t>(k)] = v;
    }

    // Index of the first nonzero tracked coefficient; order() when the whole
    // tracked window vanishes.
    int valuation() const {
        for (int k = 0; k < order(); ++k)
            if (!is_zero(c_[static_cast<std::size_t>(k)]))
                return k;
        return order();
    }

    bool all_zero() const { return valuation() == order(); }

    trunc_series truncated(int new_order) const {
        if (new_order < 1 || new_order > order())
            throw std::invalid_argument("trunc_series::truncated: bad order");
        return trunc_series(var_, std::vector<D>(c_.begin(), c_.begin() + new_order));
    }

    trunc_series operator-() const {
        std::vector<D> out;
        out.reserve(c_.size());
        for (const D& x : c_)
            out.push_back(-x);
        return trunc_series(var_, std::move(out));
    }

    friend trunc_series operator+(const trunc_series& a, const trunc_series& b) {
        a.require_same_var(b);
        int K = std::min(a.order(), b.order());
        std::vector<D> out;
        out.reserve(static_cast<std::size_t>(K));
        for (int k = 0; k < K; ++k)
            out.push_back(a.c_[static_cast<std::size_t>(k)] + b.c_[static_cast<std::size_t>(k)]);
        return trunc_series(a.var_, std::move(out));
    }
    friend trunc_series operator-(const trunc_series& a, const trunc_series& b) {
        return a + (-b);
    }
    friend trunc_series operator*(const trunc_series& a, const trunc_series& b) {
        a.require_same_var(b);
        int K = std::min(a.order(), b.order());
        trunc_series out = zeros(a.var_, K, a.proto());
        for (int i = 0; i < K; ++i) {
            if (is_zero(a.c_[static_cast<std::size_t>(i)]))
                continue;
            for (int j = 0; i + j < K; ++j)
                out.c_[static_cast<std::size_t>(i + j)] =
                    out.c_[static_cast<std::size_t>(i + j)] +
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        return out;
    }

    trunc_series scaled(const D& s) const {
        std::vector<D> out;
        out.reserve(c_.size());
        for (const D& x : c_)
            out.push_back(x * s);
        return trunc_series(var_, std::move(out));
    }

    trunc_series plus_constant(const D& s) const {
        trunc_series out = *this;
        out.c_[0] = out.c_[0] + s;
        return out;
    }

    // Multiplication by var^k; the certified order honestly grows with it.
    trunc_series shifted_up(int k) const {
        if (k < 0)
            throw std::invalid_argument("trunc_series::shifted_up: negative shift");
        std::vector<D> out(static_cast<std::size_t>(order() + k), zero_like(proto()));
        for (int i = 0; i < order(); ++i)
            out[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
        return trunc_series(var_, std::move(out));
    }

    // Exact division by var^k; the low coefficients must vanish.
    trunc_series shifted_down(int k) const {
        if (k < 0 || k >= order())
            throw std::invalid_argument("trunc_series::shifted_down: bad shift");
        for (int i = 0; i < k; ++i)
            if (!is_zero(c_[static_cast<std::size_t>(i)]))
                throw std::domain_error("trunc_series::shifted_down: series not divisible by var^k");
        return trunc_series(var_, std::vector<D>(c_.begin() + k, c_.end()));
    }

    // Multiplicative inverse; the constant term must be a unit of D.
    trunc_series inverse() const {
        if (!is_unit(c_[0]))
            throw non_unit_leading_coefficient(
                "trunc_series::inverse: constant term is not a unit");
        D u_inv = ring_inv(c_[0]);
        int K = order();
        // f = c0 (1 - w) with val(w) >= 1 ; f^-1 = c0^-1 sum w^k.
        trunc_series w = zeros(var_, K, proto());
        for (int k = 1; k < K; ++k)
            w.c_[static_cast<std::size_t>(k)] = -(c_[static_cast<std::size_t>(k)] * u_inv);
        trunc_series acc = constant(var_, K, one_like(proto()));
        trunc_series pw = constant(var_, K, one_like(proto()));
        for (int k = 1; k < K; ++k) {
            pw = pw * w;
            if (pw.all_zero())
                break;
            acc = acc + pw;
        }
        return acc.scaled(u_inv);
    }

    trunc_series pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("trunc_series::pow: negative exponent");
        trunc_series acc = constant(var_, order(), one_like(proto()));
        for (int i = 0; i < e; ++i)
            acc = acc * *this;
        return acc;
    }

    // Termwise formal derivative; one order is honestly lost.
    trunc_series derivative() const {
        if (order() < 2)
            throw std::invalid_argument("trunc_series::derivative: order too small");
        std::vector<D> out;
        out.reserve(c_.size() - 1);
        for (int k = 1; k < order(); ++k)
            out.push_back(c_[static_cast<std::size_t>(k)] * from_int_like(proto(), k));
        return trunc_series(var_, std::move(out));
    }

    friend bool operator==(const trunc_series& a, const trunc_series& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const trunc_series& a, const trunc_series& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        bool first = true;
        for (int k = 0; k < order(); ++k) {
            if (is_zero(c_[static_cast<std::size_t>(k)]))
                continue;
            if (!first)
                out += " + ";
            out += "(" + to_display(c_[static_cast<std::size_t>(k)]) + ")";
            if (k > 0)
                out += "*" + var_ + "^" + std::to_string(k);
            first = false;
        }
        if (first)
            out = "0";
        return out + " + O(" + var_ + "^" + std::to_string(order()) + ")";
    }

  private:
    void require_same_var(const trunc_series& other) const {
        if (var_ != other.var_)
            throw mismatched_domains("trunc_series: mixed variables '" + var_ + "' and '" +
                                     other.var_ + "'");
    }

    std::string var_;
    std::vector<D> c_;
};

// Substitution f(g) for g with zero constant term. The result is certified
// modulo var^min(order(f) * val(g), order(g)): the error term of f enters at
// valuation order(f)*val(g), the error term of g at order(g).
template <class D>
trunc_series<D> compose(const trunc_series<D>& f, const trunc_series<D>& g) {
    if (!is_zero(g.coeff(0)))
        throw nonzero_constant_term("compose: inner series has nonzero constant term");
    int v = g.valuation();
    long long certified = (v >= g.order())
                              ? g.order() // g == 0 on its window: f(0) is exact there
                              : std::min<long long>(static_cast<long long>(f.order()) * v,
                                                    g.order());
    int K = static_cast<int>(certified);
    trunc_series<D> gt = g.truncated(K);
    trunc_series<D> acc = trunc_series<D>::zeros(g.var(), K, g.proto());
    for (int i = f.order() - 1; i >= 1; --i) {
        acc = acc.plus_constant(f.coeff(i));
        acc = acc * gt;
    }
    return acc.plus_constant(f.coeff(0));
}

template <class D>
trunc_series<D> zero_like(const trunc_series<D>& x) {
    return trunc_series<D>::zeros(x.var(), x.order(), x.proto());
}
template <class D>
trunc_series<D> one_like(const trunc_series<D>& x) {
    return trunc_series<D>::constant(x.var(), x.order(), one_like(x.proto()));
}
template <class D>
trunc_series<D> from_int_like(const trunc_series<D>& x, long long v) {
    return trunc_series<D>::constant(x.var(), x.order(), from_int_like(x.proto(), v));
}
template <class D>
bool is_zero(const trunc_series<D>& x) {
    return x.all_zero();
}
// Unit in the power-series ring: unit constant term.
template <class D>
bool is_unit(const trunc_series<D>& x) {
    return is_unit(x.coeff(0));
}
template <class D>
trunc_series<D> ring_inv(const trunc_series<D>& x) {
    return x.inverse();
}
template <class D>
bool same_context(const trunc_series<D>& a, const trunc_series<D>& b) {
    return a.var() == b.var();
}
template <class D>
std::string to_display(const trunc_series<D>& x) {
    return x.str();
}

} // namespace fgltheta
