#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "errors.hpp"

namespace fgltheta {

// Element of the graded polynomial ring Z[a, b] with |a| = 2, |b| = 6,
// viewed inside the 2-local ring Z_(2)[a, b]: integer coefficients, but
// "unit" means an odd constant. Sparse storage keyed by the exponent
// pair (i, j) of a^i b^j; the degree of that monomial is 2i + 6j.
class graded_poly {
  public:
    using key = std::pair<int, int>;

    graded_poly() = default;

    static graded_poly constant(const mpz_class& c) {
        graded_poly p;
        if (c != 0)
            p.terms_[{0, 0}] = c;
        return p;
    }
    static graded_poly constant(long c) { return constant(mpz_class(c)); }
    static graded_poly gen_a() { return monomial(1, 0, 1); }
    static graded_poly gen_b() { return monomial(0, 1, 1); }
    static graded_poly monomial(int i, int j, const mpz_class& c) {
        if (i < 0 || j < 0)
            throw std::invalid_argument("graded_poly: negative exponent");
        graded_poly p;
        if (c != 0)
            p.terms_[{i, j}] = c;
        return p;
    }

    const std::map<key, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    bool is_zero_poly() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == key{0, 0});
    }

    static int monomial_degree(const key& k) { return 2 * k.first + 6 * k.second; }

    // Degree of a nonzero homogeneous element; -1 for 0 or mixed degrees.
    int homogeneous_degree() const {
        if (terms_.empty())
            return -1;
        int d = monomial_degree(terms_.begin()->first);
        for (const auto& [k, c] : terms_)
            if (monomial_degree(k) != d)
                return -1;
        return d;
    }

    graded_poly operator-() const {
        graded_poly out;
        for (const auto& [k, c] : terms_)
            out.terms_[k] = -c;
        return out;
    }
    friend graded_poly operator+(const graded_poly& x, const graded_poly& y) {
        graded_poly out = x;
        for (const auto& [k, c] : y.terms_) {
            mpz_class s = out.coeff(k.first, k.second) + c;
            if (s == 0)
                out.terms_.erase(k);
            else
                out.terms_[k] = s;
        }
        return out;
    }
    friend graded_poly operator-(const graded_poly& x, const graded_poly& y) {
        return x + (-y);
    }
    friend graded_poly operator*(const graded_poly& x, const graded_poly& y) {
        graded_poly out;
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                key k{kx.first + ky.first, kx.second + ky.second};
                mpz_class s = out.coeff(k.first, k.second) + cx * cy;
                if (s == 0)
                    out.terms_.erase(k);
                else
                    out.terms_[k] = s;
            }
        return out;
    }

    // Coefficientwise reduction mod 2 (image in F2[a, b]).
    graded_poly mod2() const {
        graded_poly out;
        for (const auto& [k, c] : terms_)
            if (mpz_odd_p(c.get_mpz_t()))
                out.terms_[k] = 1;
        return out;
    }
    // Reduction mod (2, a): mod 2, then drop every monomial divisible by a.
    graded_poly mod2_mod_a() const {
        graded_poly out;
        for (const auto& [k, c] : terms_)
            if (k.first == 0 && mpz_odd_p(c.get_mpz_t()))
                out.terms_[k] = 1;
        return out;
    }

    // Unit (odd) constant times the bare generator a (resp. b)?
    bool is_unit_multiple_of_a() const {
        return terms_.size() == 1 && terms_.begin()->first == key{1, 0} &&
               mpz_odd_p(terms_.begin()->second.get_mpz_t());
    }
    bool is_unit_multiple_of_b() const {
        return terms_.size() == 1 && terms_.begin()->first == key{0, 1} &&
               mpz_odd_p(terms_.begin()->second.get_mpz_t());
    }

    friend bool operator==(const graded_poly& x, const graded_poly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const graded_poly& x, const graded_poly& y) { return !(x == y); }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            mpz_class ac = abs(c);
            if (first)
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            first = false;
            bool has_var = k.first > 0 || k.second > 0;
            if (!has_var || ac != 1)
                out += ac.get_str();
            if (k.first > 0) {
                if (out.size() && out.back() != '-' && ac != 1)
                    out += "*";
                out += "a";
                if (k.first > 1)
                    out += "^" + std::to_string(k.first);
            }
            if (k.second > 0) {
                if (k.first > 0 || ac != 1)
                    out += "*";
                out += "b";
                if (k.second > 1)
                    out += "^" + std::to_string(k.second);
            }
        }
        return out;
    }

  private:
    std::map<key, mpz_class> terms_;
};

inline graded_poly zero_like(const graded_poly&) { return graded_poly(); }
inline graded_poly one_like(const graded_poly&) { return graded_poly::constant(1); }
inline graded_poly from_int_like(const graded_poly&, long v) {
    return graded_poly::constant(v);
}
inline bool is_zero(const graded_poly& x) { return x.is_zero_poly(); }
// Units of Z_(2)[a, b] are the odd constants.
inline bool is_unit(const graded_poly& x) {
    return x.is_constant() && !x.is_zero_poly() &&
           mpz_odd_p(x.coeff(0, 0).get_mpz_t());
}
// Only +-1 have inverses representable with integer coefficients; other odd
// constants are units of the 2-local ring but live outside this model.
inline graded_poly ring_inv(const graded_poly& x) {
    if (x.coeff(0, 0) == 1 && x.is_constant())
        return x;
    if (x.coeff(0, 0) == -1 && x.is_constant())
        return x;
    if (is_unit(x))
        throw unsupported_operation(
            "graded_poly: inverse of an odd constant other than +-1 is not "
            "integer-representable");
    throw not_a_unit("graded_poly: not a unit");
}
inline bool same_context(const graded_poly&, const graded_poly&) { return true; }
inline std::string to_display(const graded_poly& x) { return x.str(); }

} // namespace fgltheta
