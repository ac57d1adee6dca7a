#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

// Coefficient-domain glue. The series and curve templates consume any type
// providing ring operators +, -, *, unary -, operator==, plus the free
// functions below (context-aware constructors, unit tests, inversion).
// GMP's exact integers and rationals are adapted here; the project's own
// domains ship their overloads next to their class definitions.

namespace fgltheta {

// --- exact integers (model of Z, used where 2-locality enters via the checks
// themselves rather than the arithmetic) ---
inline mpz_class zero_like(const mpz_class&) { return mpz_class(0); }
inline mpz_class one_like(const mpz_class&) { return mpz_class(1); }
inline mpz_class from_int_like(const mpz_class&, long long v) {
    return mpz_class(static_cast<long>(v));
}
inline bool is_zero(const mpz_class& x) { return x == 0; }
inline bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
inline mpz_class ring_inv(const mpz_class& x) {
    if (!is_unit(x))
        throw not_a_unit("mpz: only +/-1 are invertible");
    return x;
}
inline bool same_context(const mpz_class&, const mpz_class&) { return true; }
inline std::string to_display(const mpz_class& x) { return x.get_str(); }

// --- exact rationals (the 2-inverted check ring's coefficients) ---
inline mpq_class zero_like(const mpq_class&) { return mpq_class(0); }
inline mpq_class one_like(const mpq_class&) { return mpq_class(1); }
inline mpq_class from_int_like(const mpq_class&, long long v) {
    return mpq_class(static_cast<long>(v));
}
inline bool is_zero(const mpq_class& x) { return x == 0; }
inline bool is_unit(const mpq_class& x) { return x != 0; }
inline mpq_class ring_inv(const mpq_class& x) {
    if (x == 0)
        throw not_a_unit("mpq: zero has no inverse");
    return mpq_class(1) / x;
}
inline bool same_context(const mpq_class&, const mpq_class&) { return true; }
inline std::string to_display(const mpq_class& x) {
    mpq_class c(x);
    c.canonicalize();
    return c.get_str();
}

// A rational is 2-integral when its reduced denominator is odd.
inline bool two_integral(const mpq_class& x) {
    mpq_class c(x);
    c.canonicalize();
    return mpz_odd_p(c.get_den().get_mpz_t()) != 0;
}

} // namespace fgltheta
