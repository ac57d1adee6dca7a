#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fgl.hpp"
#include "graded.hpp"
#include "laurent.hpp"

namespace fgltheta {

// The graded coefficient rings in play are 2-local polynomial rings on at
// most one generator of degree 2 ("a") and one of degree 6 ("b").
struct graded_ring_spec {
    std::vector<int> generator_degrees; // subset of {2, 6}

    bool has_degree(int d) const {
        return std::find(generator_degrees.begin(), generator_degrees.end(), d) !=
               generator_degrees.end();
    }
    void validate() const {
        for (int d : generator_degrees)
            if (d != 2 && d != 6)
                throw unsupported_operation(
                    "graded_ring_spec: only generators of degree 2 and 6 are modeled");
        if (std::count(generator_degrees.begin(), generator_degrees.end(), 2) > 1 ||
            std::count(generator_degrees.begin(), generator_degrees.end(), 6) > 1)
            throw unsupported_operation("graded_ring_spec: duplicate generator degree");
    }
};

// Monomial count of the graded ring in a given degree (finite because all
// generator degrees are positive).
inline int monomial_count(const graded_ring_spec& A, int degree) {
    if (degree < 0 || degree % 2 != 0)
        return 0;
    int count = 0;
    int max_i = A.has_degree(2) ? degree / 2 : 0;
    for (int i = 0; i <= max_i; ++i) {
        int rest = degree - 2 * i;
        if (rest == 0)
            ++count;
        else if (A.has_degree(6) && rest % 6 == 0)
            ++count;
    }
    return count;
}

// The four axioms of a realization datum (graded ring + formal group law):
//   (i)   the ring is concentrated in nonnegative degrees;
//   (ii)  each degree is a finite free Z_(2)-module;
//   (iii) (2, v1, v2) is a regular sequence, checked through graded leading
//         terms: v1 must be a unit multiple of the degree-2 generator in
//         A/(2), v2 a unit multiple of the degree-6 generator in A/(2, v1);
//   (iv)  A/(2, v1, v2) is F_2, concentrated in degree 0.
// Failures are verdicts, not errors.
struct realization_report {
    bool nonneg_grading = false;
    bool degreewise_finite_free = false;
    bool regular_sequence = false;
    bool residue_field_f2 = false;
    graded_poly v1, v2;
    std::vector<int> monomial_counts; // degrees 0, 2, ..., 12 witness for (ii)

    bool all_pass() const {
        return nonneg_grading && degreewise_finite_free && regular_sequence &&
               residue_field_f2;
    }
};

inline realization_report
check_realization_problem(const graded_ring_spec& A,
                          const formal_group_law<graded_poly>& G) {
    A.validate();
    if (G.order() < 5)
        throw std::invalid_argument("check_realization_problem: need order >= 5");
    realization_report rep;

    rep.nonneg_grading = true;
    for (int d : A.generator_degrees)
        if (d < 0)
            rep.nonneg_grading = false;

    rep.degreewise_finite_free = true;
    for (int d : A.generator_degrees)
        if (d <= 0)
            rep.degreewise_finite_free = false; // degree-0 generator => infinite rank
    for (int deg = 0; deg <= 12; deg += 2)
        rep.monomial_counts.push_back(monomial_count(A, deg));

    v1v2_residues res = residual_v1_v2(G);
    rep.v1 = res.v1;
    rep.v2 = res.v2;
    rep.regular_sequence = A.has_degree(2) && res.v1.is_unit_multiple_of_a() &&
                           A.has_degree(6) && res.v2.is_unit_multiple_of_b();

    // Quotient by (2, v1, v2): a generator dies exactly when some v is a unit
    // multiple of it; the quotient is F_2 in degree 0 iff every generator dies.
    bool a_killed = res.v1.is_unit_multiple_of_a() || res.v2.is_unit_multiple_of_a();
    bool b_killed = res.v1.is_unit_multiple_of_b() || res.v2.is_unit_multiple_of_b();
    rep.residue_field_f2 = (!A.has_degree(2) || a_killed) && (!A.has_degree(6) || b_killed);

    return rep;
}

// --- truncated models of the localized coefficient rings ---------------------
//
// All three models live inside Laurent series in x over a 2-adic coefficient
// domain: "k1_zero" is Z2[x^-1]^ (no positive x-powers), "k2_zero" is Z2[[x]]
// (no negative x-powers), "k2k1_zero" admits the whole tracked window.
enum class localized_kind { k1_zero, k2_zero, k2k1_zero };

inline std::string to_string(localized_kind k) {
    switch (k) {
    case localized_kind::k1_zero:
        return "k1_zero";
    case localized_kind::k2_zero:
        return "k2_zero";
    default:
        return "k2k1_zero";
    }
}

template <class D>
struct membership_report {
    bool member = true;
    std::vector<std::pair<int, D>> violations; // (x-exponent, coefficient)
};

// Membership of a tracked Laurent element in the chosen localized model;
// shrinking the window can only remove potential violations, so the verdict
// is monotone under truncation.
template <class D>
membership_report<D> membership(const laurent_series<D>& e, localized_kind target) {
    membership_report<D> rep;
    for (int k = e.lo(); k < e.hi(); ++k) {
        bool banned = (target == localized_kind::k1_zero && k > 0) ||
                      (target == localized_kind::k2_zero && k < 0);
        if (banned && !is_zero(e.coeff(k))) {
            rep.member = false;
            rep.violations.emplace_back(k, e.coeff(k));
        }
    }
    return rep;
}

// Substitute x -> 1/x: exponent negation, window [lo, hi) -> [1-hi, 1-lo).
template <class D>
laurent_series<D> reexpress_reciprocal(const laurent_series<D>& f,
                                       const std::string& new_var) {
    laurent_series<D> out =
        laurent_series<D>::zeros(new_var, 1 - f.hi(), 1 - f.lo(), f.proto());
    for (int k = f.lo(); k < f.hi(); ++k)
        out.set_coeff(-k, f.coeff(k));
    return out;
}

} // namespace fgltheta
