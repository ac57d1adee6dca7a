#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "trunc_series.hpp"

namespace fgltheta {

// Dense bivariate power series in (z1, z2), truncated by total degree:
// coefficients are certified for i + j < order. Storage is a rectangular
// order x order table; entries with i + j >= order stay identically zero.
template <class D>
class bivar_series {
  public:
    static bivar_series zeros(int order, const D& proto) {
        if (order < 1)
            throw std::invalid_argument("bivar_series::zeros: order must be at least 1");
        return bivar_series(order,
                            std::vector<D>(static_cast<std::size_t>(order) * order,
                                           zero_like(proto)));
    }
    static bivar_series monomial(int order, int i, int j, const D& coeff) {
        bivar_series s = zeros(order, coeff);
        s.set_coeff(i, j, coeff);
        return s;
    }

    int order() const { return order_; }
    const D& proto() const { return c_[0]; }

    const D& coeff(int i, int j) const {
        check_range(i, j);
        return c_[idx(i, j)];
    }
    void set_coeff(int i, int j, const D& v) {
        check_range(i, j);
        if (i + j >= order_)
            throw std::out_of_range("bivar_series::set_coeff: beyond certified total degree");
        c_[idx(i, j)] = v;
    }

    int valuation() const {
        for (int d = 0; d < order_; ++d)
            for (int i = 0; i <= d; ++i)
                if (!is_zero(c_[idx(i, d - i)]))
                    return d;
        return order_;
    }
    bool all_zero() const { return valuation() == order_; }

    bivar_series truncated(int new_order) const {
        if (new_order < 1 || new_order > order_)
            throw std::invalid_argument("bivar_series::truncated: bad order");
        bivar_series out = zeros(new_order, proto());
        for (int i = 0; i < new_order; ++i)
            for (int j = 0; i + j < new_order; ++j)
                out.c_[out.idx(i, j)] = c_[idx(i, j)];
        return out;
    }

    bivar_series operator-() const {
        bivar_series out = *this;
        for (D& x : out.c_)
            x = -x;
        return out;
    }

    friend bivar_series operator+(const bivar_series& a, const bivar_series& b) {
        int K = std::min(a.order_, b.order_);
        bivar_series out = zeros(K, a.proto());
        for (int i = 0; i < K; ++i)
            for (int j = 0; i + j < K; ++j)
                out.c_[out.idx(i, j)] = a.c_[a.idx(i, j)] + b.c_[b.idx(i, j)];
        return out;
    }
    friend bivar_series operator-(const bivar_series& a, const bivar_series& b) {
        return a + (-b);
    }
    friend bivar_series operator*(const bivar_series& a, const bivar_series& b) {
        int K = std::min(a.order_, b.order_);
        bivar_series out = zeros(K, a.proto());
        for (int i1 = 0; i1 < K; ++i1)
            for (int j1 = 0; i1 + j1 < K; ++j1) {
                const D& x = a.c_[a.idx(i1, j1)];
                if (is_zero(x))
                    continue;
                for (int i2 = 0; i1 + j1 + i2 < K; ++i2)
                    for (int j2 = 0; i1 + j1 + i2 + j2 < K; ++j2) {
                        const D& y = b.c_[b.idx(i2, j2)];
                        if (is_zero(y))
                            continue;
                        std::size_t p = out.idx(i1 + i2, j1 + j2);
                        out.c_[p] = out.c_[p] + x * y;
                    }
            }
        return out;
    }

    bivar_series scaled(const D& s) const {
        bivar_series out = *this;
        for (D& x : out.c_)
            x = x * s;
        return out;
    }
    bivar_series plus_constant(const D& s) const {
        bivar_series out = *this;
        out.c_[0] = out.c_[0] + s;
        return out;
    }

    // Reciprocal via the geometric series; the constant term must be a unit.
    bivar_series inverse() const {
        const D& c0 = c_[0];
        if (!is_unit(c0))
            throw not_a_unit("bivar_series::inverse: constant term is not a unit");
        D u_inv = ring_inv(c0);
        // f = c0 * (1 - w) with val(w) >= 1; 1/f = (1 + w + w^2 + ...) / c0.
        bivar_series w = zeros(order_, proto());
        for (int i = 0; i < order_; ++i)
            for (int j = 0; i + j < order_; ++j) {
                if (i == 0 && j == 0)
                    continue;
                w.c_[w.idx(i, j)] = -(c_[idx(i, j)] * u_inv);
            }
        bivar_series acc = monomial(order_, 0, 0, one_like(proto()));
        bivar_series pw = acc;
        for (int k = 1; k < order_; ++k) {
            pw = pw * w;
            if (pw.all_zero())
                break;
            acc = acc + pw;
        }
        return acc.scaled(u_inv);
    }

    bivar_series swapped() const {
        bivar_series out = zeros(order_, proto());
        for (int i = 0; i < order_; ++i)
            for (int j = 0; i + j < order_; ++j)
                out.c_[out.idx(j, i)] = c_[idx(i, j)];
        return out;
    }

    // Substitute z2 = 0 (resp. z1 = 0): the univariate restriction.
    trunc_series<D> restrict_z2_zero(const std::string& var) const {
        trunc_series<D> out = trunc_series<D>::zeros(var, order_, proto());
        for (int i = 0; i < order_; ++i)
            out.set_coeff(i, c_[idx(i, 0)]);
        return out;
    }
    trunc_series<D> restrict_z1_zero(const std::string& var) const {
        trunc_series<D> out = trunc_series<D>::zeros(var, order_, proto());
        for (int j = 0; j < order_; ++j)
            out.set_coeff(j, c_[idx(0, j)]);
        return out;
    }

    friend bool operator==(const bivar_series& a, const bivar_series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const bivar_series& a, const bivar_series& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        bool first = true;
        for (int d = 0; d < order_; ++d)
            for (int i = d; i >= 0; --i) {
                int j = d - i;
                if (is_zero(c_[idx(i, j)]))
                    continue;
                if (!first)
                    out += " + ";
                out += "(" + to_display(c_[idx(i, j)]) + ")";
                if (i > 0)
                    out += "*z1^" + std::to_string(i);
                if (j > 0)
                    out += "*z2^" + std::to_string(j);
                first = false;
            }
        if (first)
            out = "0";
        return out + " + O(deg " + std::to_string(order_) + ")";
    }

  private:
    bivar_series(int order, std::vector<D> c) : order_(order), c_(std::move(c)) {}
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * order_ + j;
    }
    void check_range(int i, int j) const {
        if (i < 0 || j < 0 || i >= order_ || j >= order_)
            throw std::out_of_range("bivar_series: index outside table");
    }

    int order_;
    std::vector<D> c_;
};

// Embeddings of a univariate series along one of the two slots. The target
// order may not exceed the argument's certified order: an embedding never
// invents certified zero coefficients.
template <class D>
bivar_series<D> embed_z1(const trunc_series<D>& f, int order) {
    if (order > f.order())
        throw std::invalid_argument("embed_z1: target order exceeds certified order");
    bivar_series<D> out = bivar_series<D>::zeros(order, f.proto());
    for (int i = 0; i < order; ++i)
        out.set_coeff(i, 0, f.coeff(i));
    return out;
}
template <class D>
bivar_series<D> embed_z2(const trunc_series<D>& f, int order) {
    if (order > f.order())
        throw std::invalid_argument("embed_z2: target order exceeds certified order");
    bivar_series<D> out = bivar_series<D>::zeros(order, f.proto());
    for (int j = 0; j < order; ++j)
        out.set_coeff(0, j, f.coeff(j));
    return out;
}

// (f(z1) - f(z2)) / (z1 - z2) as a bivariate series: the coefficient of
// z^k in f spreads over all monomials z1^i z2^j with i + j = k - 1. The
// unknown coefficient of z^order(f) would land in total degree
// order(f) - 1, so the result is certified one degree lower than f.
template <class D>
bivar_series<D> divided_difference(const trunc_series<D>& f) {
    if (f.order() < 2)
        throw std::invalid_argument("divided_difference: order must be at least 2");
    bivar_series<D> out = bivar_series<D>::zeros(f.order() - 1, f.proto());
    for (int k = 1; k < f.order(); ++k) {
        const D& c = f.coeff(k);
        if (is_zero(c))
            continue;
        for (int i = 0; i < k; ++i)
            out.set_coeff(i, k - 1 - i, c);
    }
    return out;
}

// Substitute the bivariate g (with g(0,0) = 0) into the univariate f.
// Certified total degree: min(order(f) * val(g), order(g)).
template <class D>
bivar_series<D> compose(const trunc_series<D>& f, const bivar_series<D>& g) {
    if (!is_zero(g.coeff(0, 0)))
        throw nonzero_constant_term("compose: bivariate argument has nonzero constant term");
    int v = std::max(1, g.valuation());
    long long certified = (g.valuation() >= g.order())
                              ? g.order()
                              : std::min<long long>(static_cast<long long>(f.order()) * v,
                                                    g.order());
    int K = static_cast<int>(certified);
    bivar_series<D> gt = g.truncated(K);
    bivar_series<D> acc = bivar_series<D>::zeros(K, g.proto());
    for (int i = f.order() - 1; i >= 1; --i) {
        acc = acc.plus_constant(f.coeff(i));
        acc = acc * gt;
    }
    return acc.plus_constant(f.coeff(0));
}

// Evaluate F(g1(z), g2(z)) for univariate arguments of valuation >= 1.
template <class D>
trunc_series<D> eval_bivar(const bivar_series<D>& F, const trunc_series<D>& g1,
                           const trunc_series<D>& g2) {
    if (g1.var() != g2.var())
        throw mismatched_domains("eval_bivar: argument variables differ");
    if (!is_zero(g1.coeff(0)) || !is_zero(g2.coeff(0)))
        throw nonzero_constant_term("eval_bivar: arguments must have zero constant term");
    int v1 = std::max(1, std::min(g1.valuation(), g1.order()));
    int v2 = std::max(1, std::min(g2.valuation(), g2.order()));
    long long certified = std::min<long long>(
        {static_cast<long long>(F.order()) * std::min(v1, v2),
         static_cast<long long>(g1.order()), static_cast<long long>(g2.order())});
    int K = static_cast<int>(certified);
    trunc_series<D> a = g1.truncated(std::min(K, g1.order()));
    trunc_series<D> b = g2.truncated(std::min(K, g2.order()));
    trunc_series<D> out = trunc_series<D>::zeros(g1.var(), K, g1.proto());
    // Horner along z2 for each fixed z1-power, then Horner along z1.
    for (int i = F.order() - 1; i >= 0; --i) {
        trunc_series<D> row = trunc_series<D>::zeros(g1.var(), K, g1.proto());
        for (int j = F.order() - 1 - i; j >= 1; --j) {
            row = row.plus_constant(F.coeff(i, j));
            row = row * b;
        }
        row = row.plus_constant(F.coeff(i, 0));
        out = out * a + row;
    }
    return out;
}

// Dense trivariate series truncated by total degree; the validation helper
// behind associativity checks. Rectangular storage like bivar_series.
template <class D>
class trivar_series {
  public:
    static trivar_series zeros(int order, const D& proto) {
        if (order < 1)
            throw std::invalid_argument("trivar_series::zeros: order must be at least 1");
        std::size_t n = static_cast<std::size_t>(order);
        return trivar_series(order, std::vector<D>(n * n * n, zero_like(proto)));
    }

    int order() const { return order_; }
    const D& proto() const { return c_[0]; }

    const D& coeff(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    void set_coeff(int i, int j, int k, const D& v) {
        if (i + j + k >= order_)
            throw std::out_of_range("trivar_series::set_coeff: beyond certified degree");
        c_[idx(i, j, k)] = v;
    }

    bool all_zero() const {
        for (const D& x : c_)
            if (!is_zero(x))
                return false;
        return true;
    }

    trivar_series operator-() const {
        trivar_series out = *this;
        for (D& x : out.c_)
            x = -x;
        return out;
    }
    friend trivar_series operator+(const trivar_series& a, const trivar_series& b) {
        int K = std::min(a.order_, b.order_);
        trivar_series out = zeros(K, a.proto());
        for (int i = 0; i < K; ++i)
            for (int j = 0; i + j < K; ++j)
                for (int k = 0; i + j + k < K; ++k)
                    out.c_[out.idx(i, j, k)] = a.c_[a.idx(i, j, k)] + b.c_[b.idx(i, j, k)];
        return out;
    }
    friend trivar_series operator-(const trivar_series& a, const trivar_series& b) {
        return a + (-b);
    }
    friend trivar_series operator*(const trivar_series& a, const trivar_series& b) {
        int K = std::min(a.order_, b.order_);
        trivar_series out = zeros(K, a.proto());
        for (int i1 = 0; i1 < K; ++i1)
            for (int j1 = 0; i1 + j1 < K; ++j1)
                for (int k1 = 0; i1 + j1 + k1 < K; ++k1) {
                    const D& x = a.c_[a.idx(i1, j1, k1)];
                    if (is_zero(x))
                        continue;
                    int d1 = i1 + j1 + k1;
                    for (int i2 = 0; d1 + i2 < K; ++i2)
                        for (int j2 = 0; d1 + i2 + j2 < K; ++j2)
                            for (int k2 = 0; d1 + i2 + j2 + k2 < K; ++k2) {
                                const D& y = b.c_[b.idx(i2, j2, k2)];
                                if (is_zero(y))
                                    continue;
                                std::size_t p = out.idx(i1 + i2, j1 + j2, k1 + k2);
                                out.c_[p] = out.c_[p] + x * y;
                            }
                }
        return out;
    }

    trivar_series plus_constant(const D& s) const {
        trivar_series out = *this;
        out.c_[0] = out.c_[0] + s;
        return out;
    }

    // Embeddings of bivariate series along a chosen pair of the three slots.
    static trivar_series embed(const bivar_series<D>& f, int slot_a, int slot_b, int order) {
        trivar_series out = zeros(order, f.proto());
        int K = std::min(order, f.order());
        for (int i = 0; i < K; ++i)
            for (int j = 0; i + j < K; ++j) {
                int e[3] = {0, 0, 0};
                e[slot_a] = i;
                e[slot_b] = j;
                out.c_[out.idx(e[0], e[1], e[2])] = f.coeff(i, j);
            }
        return out;
    }

  private:
    trivar_series(int order, std::vector<D> c) : order_(order), c_(std::move(c)) {}
    std::size_t idx(int i, int j, int k) const {
        std::size_t n = static_cast<std::size_t>(order_);
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }

    int order_;
    std::vector<D> c_;
};

// Substitute a trivariate argument (valuation >= 1) into the univariate f.
// Certified degree: min(order(f), order(g)) since val(g) >= 1.
template <class D>
trivar_series<D> compose(const trunc_series<D>& f, const trivar_series<D>& g) {
    if (!is_zero(g.coeff(0, 0, 0)))
        throw nonzero_constant_term("compose: trivariate argument has nonzero constant term");
    int K = std::min(f.order(), g.order());
    trivar_series<D> acc = trivar_series<D>::zeros(K, g.proto());
    for (int i = f.order() - 1; i >= 1; --i) {
        acc = acc.plus_constant(f.coeff(i));
        acc = acc * g;
    }
    return acc.plus_constant(f.coeff(0));
}

// Evaluate the bivariate F at a pair of trivariate arguments of valuation >= 1.
template <class D>
trivar_series<D> eval_bivar(const bivar_series<D>& F, const trivar_series<D>& g1,
                            const trivar_series<D>& g2) {
    if (!is_zero(g1.coeff(0, 0, 0)) || !is_zero(g2.coeff(0, 0, 0)))
        throw nonzero_constant_term("eval_bivar: arguments must have zero constant term");
    int K = std::min({F.order(), g1.order(), g2.order()});
    trivar_series<D> out = trivar_series<D>::zeros(K, g1.proto());
    for (int i = F.order() - 1; i >= 0; --i) {
        trivar_series<D> row = trivar_series<D>::zeros(K, g1.proto());
        for (int j = F.order() - 1 - i; j >= 1; --j) {
            row = row.plus_constant(F.coeff(i, j));
            row = row * g2;
        }
        row = row.plus_constant(F.coeff(i, 0));
        out = out * g1 + row;
    }
    return out;
}

} // namespace fgltheta
