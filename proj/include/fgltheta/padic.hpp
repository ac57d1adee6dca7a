#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace fgltheta {

// Truncated 2-adic integer: a canonical residue mod 2^digits together with the
// number of binary digits actually known. Arithmetic propagates the minimum of
// the operand precisions and never reports more digits than it can certify.
// Division by a unit (odd value) preserves precision; exact division by 2
// costs one digit.
class padic_approx {
  public:
    static constexpr int max_digits = 64;

    padic_approx(std::uint64_t value, int digits) : digits_(digits) {
        if (digits < 1 || digits > max_digits)
            throw std::invalid_argument("padic_approx: digits must lie in [1, 64]");
        value_ = value & mask(digits);
    }

    static padic_approx from_int(long long v, int digits) {
        return padic_approx(static_cast<std::uint64_t>(v), digits);
    }

    std::uint64_t value() const { return value_; }
    int digits() const { return digits_; }

    // Representative in (-2^(digits-1), 2^(digits-1)] as a signed integer.
    long long signed_minimal() const {
        if (digits_ == 64)
            return static_cast<long long>(value_); // two's complement wrap is exact here
        std::uint64_t half = 1ull << (digits_ - 1);
        if (value_ > half)
            return static_cast<long long>(value_) - static_cast<long long>(1ull << digits_);
        return static_cast<long long>(value_);
    }

    bool is_zero() const { return value_ == 0; }
    bool is_unit() const { return (value_ & 1ull) != 0; }

    padic_approx operator-() const { return padic_approx(~value_ + 1, digits_); }

    friend padic_approx operator+(const padic_approx& a, const padic_approx& b) {
        int d = std::min(a.digits_, b.digits_);
        return padic_approx(a.value_ + b.value_, d);
    }
    friend padic_approx operator-(const padic_approx& a, const padic_approx& b) {
        int d = std::min(a.digits_, b.digits_);
        return padic_approx(a.value_ - b.value_, d);
    }
    friend padic_approx operator*(const padic_approx& a, const padic_approx& b) {
        int d = std::min(a.digits_, b.digits_);
        return padic_approx(a.value_ * b.value_, d);
    }

    // Inverse of an odd residue by Newton lifting: x -> x(2 - ax) doubles the
    // number of correct binary digits, and x = a is already correct mod 8.
    padic_approx inv() const {
        if (!is_unit())
            throw not_a_unit("padic_approx::inv: even value has no inverse mod 2^N");
        std::uint64_t a = value_, x = a;
        for (int i = 0; i < 5; ++i)
            x *= 2ull - a * x;
        return padic_approx(x, digits_);
    }

    // Exact division by 2^k. Requires the residue to be divisible by 2^k;
    // the result is known to k fewer digits.
    padic_approx exact_div_pow2(int k) const {
        if (k < 0)
            throw std::invalid_argument("padic_approx::exact_div_pow2: negative shift");
        if (k == 0)
            return *this;
        if (digits_ - k < 1)
            throw precision_exhausted("padic_approx::exact_div_pow2: no digits left");
        if (k >= 64 || (value_ & mask(k)) != 0)
            throw std::domain_error("padic_approx::exact_div_pow2: value not divisible by 2^k");
        return padic_approx(value_ >> k, digits_ - k);
    }

    // Truncate to fewer known digits (never a gain).
    padic_approx truncated(int digits) const {
        if (digits > digits_)
            throw std::invalid_argument("padic_approx::truncated: cannot gain digits");
        return padic_approx(value_, digits);
    }

    friend bool operator==(const padic_approx& a, const padic_approx& b) {
        return a.digits_ == b.digits_ && a.value_ == b.value_;
    }
    friend bool operator!=(const padic_approx& a, const padic_approx& b) { return !(a == b); }

    // Agreement of the residues modulo 2^min(digits): the meaningful notion of
    // equality across mixed precisions.
    friend bool congruent(const padic_approx& a, const padic_approx& b) {
        int d = std::min(a.digits_, b.digits_);
        return ((a.value_ ^ b.value_) & mask(d)) == 0;
    }

    std::string str() const {
        return std::to_string(signed_minimal()) + " (mod 2^" + std::to_string(digits_) + ")";
    }

  private:
    static std::uint64_t mask(int d) { return d >= 64 ? ~0ull : (1ull << d) - 1; }

    std::uint64_t value_;
    int digits_;
};

// Domain interface used by the generic series/curve templates.
inline padic_approx zero_like(const padic_approx& x) { return padic_approx(0, x.digits()); }
inline padic_approx one_like(const padic_approx& x) { return padic_approx(1, x.digits()); }
inline padic_approx from_int_like(const padic_approx& x, long long v) {
    return padic_approx::from_int(v, x.digits());
}
inline bool is_zero(const padic_approx& x) { return x.is_zero(); }
inline bool is_unit(const padic_approx& x) { return x.is_unit(); }
inline padic_approx ring_inv(const padic_approx& x) { return x.inv(); }
inline bool same_context(const padic_approx&, const padic_approx&) { return true; }
inline std::string to_display(const padic_approx& x) { return x.str(); }

} // namespace fgltheta
