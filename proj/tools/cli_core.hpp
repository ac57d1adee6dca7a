#pragma once

// Command implementations for the fgltheta CLI. Kept header-only and
// stream-based so the integration tests can drive them without a subprocess
// if they want to; the binary in fgltheta_cli.cpp is a thin argv wrapper.

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgltheta/fgl.hpp"
#include "fgltheta/graded.hpp"
#include "fgltheta/isogeny.hpp"
#include "fgltheta/lubin_tate.hpp"
#include "fgltheta/padic.hpp"
#include "fgltheta/quotient_ext.hpp"
#include "fgltheta/realization.hpp"
#include "fgltheta/theta.hpp"
#include "fgltheta/trunc_series.hpp"
#include "fgltheta/weierstrass.hpp"

namespace fgltheta::cli {

using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 invalid
// configuration or unwritable output, 3 internal mismatch (a cross-check of
// two supposedly equal computations disagreed; a bug, not a verdict).
enum exit_code : int {
    exit_pass = 0,
    exit_failed_verdict = 1,
    exit_invalid_config = 2,
    exit_internal_error = 3,
};

struct run_config {
    int digits = 64;
    int order = 16;
    int fgl_order = 12;
    std::string format = "text"; // text | json | csv
    std::string out_path;        // empty = stdout
    bool inject = false;

    void validate() const {
        if (digits < 8 || digits > 64)
            throw std::invalid_argument("--digits must be in [8, 64]");
        if (order < 2)
            throw std::invalid_argument("--order must be >= 2");
        if (fgl_order < 5)
            throw std::invalid_argument("--fgl-order must be >= 5");
        if (format != "text" && format != "json" && format != "csv")
            throw std::invalid_argument("--format must be text, json or csv");
    }
};

struct check_line {
    std::string name;
    std::string status; // "pass" | "fail" | "not-run"
    std::string detail;
};

inline bool all_checks_pass(const std::vector<check_line>& checks) {
    for (const auto& c : checks)
        if (c.status == "fail")
            return false;
    return true;
}

// --- report rendering ---------------------------------------------------------

inline void render_checks(std::ostream& os, const run_config& cfg,
                          const std::string& command,
                          const std::vector<check_line>& checks,
                          const std::string& verdict) {
    if (cfg.format == "json") {
        ordered_json j;
        j["command"] = command;
        j["precision"] = {{"padic", cfg.digits}, {"order", cfg.order},
                          {"fgl_order", cfg.fgl_order}};
        j["checks"] = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["status"] = c.status;
            if (!c.detail.empty())
                jc["detail"] = c.detail;
            j["checks"].push_back(jc);
        }
        j["verdict"] = verdict;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "check,status\n";
        for (const auto& c : checks)
            os << c.name << "," << c.status << "\n";
        os << "verdict," << verdict << "\n";
    } else {
        os << command << " (digits " << cfg.digits << ", order " << cfg.order
           << ", fgl-order " << cfg.fgl_order << ")\n";
        for (const auto& c : checks) {
            os << "  [" << (c.status == "pass" ? "PASS"
                            : c.status == "fail" ? "FAIL"
                                                 : "SKIP")
               << "] " << c.name;
            if (!c.detail.empty())
                os << " -- " << c.detail;
            os << "\n";
        }
        os << "verdict: " << verdict << "\n";
    }
}

// One row per degree: canonical residue mod 2^N and signed minimal residue.
struct series_row {
    int degree;
    std::uint64_t canonical;
    long long signed_min;
};

inline std::vector<series_row> rows_of_trunc(const trunc_series<padic_approx>& f) {
    std::vector<series_row> rows;
    for (int k = 0; k < f.order(); ++k)
        rows.push_back({k, f.coeff(k).value(), f.coeff(k).signed_minimal()});
    return rows;
}

inline std::vector<series_row> rows_of_laurent(const laurent_series<padic_approx>& f) {
    std::vector<series_row> rows;
    for (int k = std::min(0, f.lo()); k < f.hi(); ++k) {
        if (k < f.lo()) {
            rows.push_back({k, 0, 0}); // exactly zero below the window
            continue;
        }
        rows.push_back({k, f.coeff(k).value(), f.coeff(k).signed_minimal()});
    }
    return rows;
}

inline ordered_json json_of_rows(const std::vector<series_row>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json jr;
        jr["degree"] = r.degree;
        jr["canonical"] = r.canonical;
        jr["signed"] = r.signed_min;
        arr.push_back(jr);
    }
    return arr;
}

inline void csv_block(std::ostream& os, const std::string& name,
                      const std::vector<series_row>& rows) {
    os << "# " << name << "\n";
    os << "degree,coefficient_signed\n";
    for (const auto& r : rows)
        os << r.degree << "," << r.signed_min << "\n";
}

inline void text_block(std::ostream& os, const std::string& name,
                       const std::vector<series_row>& rows) {
    os << name << ":\n";
    os << "  " << std::setw(7) << "degree" << "  " << std::setw(22) << "canonical"
       << "  " << std::setw(22) << "signed" << "\n";
    for (const auto& r : rows)
        os << "  " << std::setw(7) << r.degree << "  " << std::setw(22) << r.canonical
           << "  " << std::setw(22) << r.signed_min << "\n";
}

inline ordered_json residuals_json(const theta_report& rep) {
    ordered_json res;
    res["alpha_cubic_zero"] = rep.alpha_residual_zero;
    res["negative_power_degrees"] = rep.negative_power_degrees;
    res["odd_coefficient_degrees"] = rep.odd_coefficient_degrees;
    res["fractional_exponents"] = rep.fractional_exponents;
    return res;
}

// --- coefficients -------------------------------------------------------------

inline int cmd_coefficients(const run_config& cfg, std::ostream& os) {
    theta_report rep =
        run_theta(cfg.digits, cfg.order,
                  cfg.inject ? injection_mode::t_inverse : injection_mode::none);
    auto c_rows = rows_of_trunc(rep.c);
    auto psi2_rows = rows_of_laurent(rep.psi2_s);
    auto theta_rows = rows_of_laurent(rep.theta);

    if (cfg.format == "json") {
        ordered_json j;
        j["variable"] = "s";
        j["precision"] = {{"padic", cfg.digits}, {"order", cfg.order}};
        j["series"] = {{"c", json_of_rows(c_rows)},
                       {"psi2", json_of_rows(psi2_rows)},
                       {"theta", json_of_rows(theta_rows)}};
        j["verdict"] = rep.verdict();
        j["residuals"] = residuals_json(rep);
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        csv_block(os, "c", c_rows);
        csv_block(os, "psi2", psi2_rows);
        csv_block(os, "theta", theta_rows);
    } else {
        os << "series tables in s (digits " << cfg.digits << ", order " << cfg.order
           << ")\n";
        text_block(os, "c", c_rows);
        text_block(os, "psi2", psi2_rows);
        text_block(os, "theta", theta_rows);
        os << "verdict: " << rep.verdict() << "\n";
    }
    return rep.verdict() == "STABLE" ? exit_pass : exit_failed_verdict;
}

// --- theta ---------------------------------------------------------------------

inline int cmd_theta(const run_config& cfg, std::ostream& os) {
    theta_report rep =
        run_theta(cfg.digits, cfg.order,
                  cfg.inject ? injection_mode::t_inverse : injection_mode::none);
    std::vector<check_line> checks;
    checks.push_back({"alpha-cubic-residual", rep.alpha_residual_zero ? "pass" : "fail",
                      "alpha^3 - t*alpha - 2 == 0 on the certified window"});
    checks.push_back({"no-negative-powers",
                      rep.negative_power_degrees.empty() ? "pass" : "fail",
                      rep.negative_power_degrees.empty()
                          ? ""
                          : "mass at s-degree " +
                                std::to_string(rep.negative_power_degrees.front())});
    checks.push_back({"theta-integrality", rep.theta_defined ? "pass" : "fail",
                      rep.theta_defined
                          ? "psi2(s) - s^2 even coefficientwise"
                          : "odd coefficient at s-degree " +
                                std::to_string(rep.odd_coefficient_degrees.front())});
    checks.push_back({"integral-exponents", rep.fractional_exponents.empty() ? "pass" : "fail",
                      "psi2-image of s supported on integral s-powers"});
    render_checks(os, cfg, "theta", checks, rep.verdict());
    return rep.verdict() == "STABLE" ? exit_pass : exit_failed_verdict;
}

// --- velu ----------------------------------------------------------------------

namespace detail {
// Exact rational -> residue mod 2^N; requires an odd denominator.
inline padic_approx padic_of_mpq(const mpq_class& x, int digits) {
    mpq_class c(x);
    c.canonicalize();
    if (!mpz_odd_p(c.get_den().get_mpz_t()))
        throw std::invalid_argument("padic_of_mpq: denominator is even");
    mpz_class m = mpz_class(1) << digits;
    mpz_class num = c.get_num() % m;
    if (num < 0)
        num += m;
    mpz_class den = c.get_den() % m;
    padic_approx n(num.get_ui(), digits);
    padic_approx d(den.get_ui(), digits);
    return n * d.inv();
}
} // namespace detail

inline int cmd_velu(const run_config& cfg, std::ostream& os) {
    // The kernel point carries a t^3 term, so the series window must reach it.
    if (cfg.order < 4)
        throw std::invalid_argument("velu requires --order >= 4");
    using TS = trunc_series<mpq_class>;
    using QE = quotient_ext<TS>;
    const int ORD = cfg.order;
    TS t = TS::monomial("t", ORD, 1, mpq_class(1));
    TS one = TS::constant("t", ORD, mpq_class(1));
    TS zero = TS::zeros("t", ORD, mpq_class(0));
    auto mk = [&](const TS& c0, const TS& c1, const TS& c2) {
        return QE::make(c0, c1, c2, t);
    };
    QE qzero = QE::from_base(zero, t);
    weierstrass_curve<QE> E(QE::from_base(t, t), qzero, QE::from_base(one, t), qzero,
                            qzero);
    // Resolved 2-torsion point (-d^-2, -d^-3) of y^2 + t*xy + y = x^3.
    QE x0 = mk(TS::monomial("t", ORD, 2, mpq_class(-1, 4)),
               TS::constant("t", ORD, mpq_class(-1, 2)),
               TS::monomial("t", ORD, 1, mpq_class(1, 4)));
    QE y0 = mk(TS::monomial("t", ORD, 3, mpq_class(1, 8)) +
                   TS::constant("t", ORD, mpq_class(-1, 2)),
               TS::monomial("t", ORD, 1, mpq_class(1, 4)),
               TS::monomial("t", ORD, 2, mpq_class(-1, 8)));
    affine_point<QE> P{x0, y0};

    std::vector<check_line> checks;
    checks.push_back({"kernel-on-curve", on_curve(E, P) ? "pass" : "fail",
                      "curve equation holds exactly"});
    checks.push_back({"kernel-two-torsion", is_two_torsion(E, P) ? "pass" : "fail",
                      "2y + a1*x + a3 == 0 exactly"});

    auto R = velu_two_isogeny(E, P);
    checks.push_back({"normalization", R.normalized ? "pass" : "fail",
                      "image restored to y^2 + a*xy + b*y = x^3 shape"});

    // Expected image a-coefficient: t^2 + 3d - t d^2; b-coefficient: 1.
    QE want_a1 = mk(TS::monomial("t", ORD, 2, mpq_class(1)),
                    TS::constant("t", ORD, mpq_class(3)),
                    TS::monomial("t", ORD, 1, mpq_class(-1)));
    bool img_ok = R.image.a1 == want_a1 && R.image.a3 == QE::from_base(one, t) &&
                  is_zero(R.image.a2) && is_zero(R.image.a4) && is_zero(R.image.a6);
    checks.push_back({"image-coefficients", img_ok ? "pass" : "fail",
                      "a -> t^2 + 3d - t*d^2, b -> 1"});

    // The same comparison inside the 2-adic submodel Z2[[t]][d] at N digits.
    bool padic_ok = true;
    auto cmp_component = [&](const TS& got, const TS& want) {
        for (int k = 0; k < ORD; ++k)
            if (!congruent(detail::padic_of_mpq(got.coeff(k), cfg.digits),
                           detail::padic_of_mpq(want.coeff(k), cfg.digits)))
                padic_ok = false;
    };
    cmp_component(R.image.a1.c0(), want_a1.c0());
    cmp_component(R.image.a1.c1(), want_a1.c1());
    cmp_component(R.image.a1.c2(), want_a1.c2());
    cmp_component(R.image.a3.c0(), one);
    checks.push_back({"image-2adic-submodel", padic_ok ? "pass" : "fail",
                      "coefficientwise residues mod 2^" + std::to_string(cfg.digits)});

    bool ok = all_checks_pass(checks);
    render_checks(os, cfg, "velu", checks, ok ? "PASS" : "FAIL");
    return ok ? exit_pass : exit_failed_verdict;
}

// --- lubin-tate ------------------------------------------------------------------

inline int cmd_lubin_tate(const run_config& cfg, std::ostream& os) {
    if (cfg.order < 4)
        throw std::invalid_argument("lubin-tate requires --order >= 4");
    std::vector<check_line> checks;

    auto inv = lubin_tate_invariants(cfg.digits, cfg.order);
    std::string exps;
    for (int j : inv.fixed_exponents)
        exps += (exps.empty() ? "" : ",") + std::to_string(j);
    checks.push_back({"fixed-subring", inv.matches_x_image ? "pass" : "fail",
                      "G-fixed exponents {" + exps + "} = image of x -> u1^3"});

    auto E = lubin_tate_curve(cfg.digits, cfg.order);
    auto G = formal_group_law<lt_elem>::from_curve(E, cfg.fgl_order);
    auto h = height_diagnostics(G);
    checks.push_back({"curve-height", (h.h1 && h.h2) ? "pass" : "fail",
                      "2-series heights (h1, h2) = (true, true)"});

    lt_elem lz = lt_elem::zero(cfg.digits, cfg.order);
    auto two_mult = trunc_series<lt_elem>::zeros("z", 5, lz);
    two_mult.set_coeff(1, lt_elem::from_int(cfg.digits, cfg.order, 2));
    two_mult.set_coeff(2, lt_elem::from_int(cfg.digits, cfg.order, -1));
    auto hm = height_diagnostics(two_mult);
    auto two_add = trunc_series<lt_elem>::zeros("z", 5, lz);
    two_add.set_coeff(1, lt_elem::from_int(cfg.digits, cfg.order, 2));
    auto ha = height_diagnostics(two_add);
    checks.push_back({"control-heights",
                      (hm.h1 && !hm.h2 && !ha.h1 && !ha.h2) ? "pass" : "fail",
                      "multiplicative law (true, false); additive law (false, false)"});

    auto orb = orbit_independence(cfg.digits);
    checks.push_back({"orbit-rank", orb.det_odd ? "pass" : "fail",
                      "6x6 orbit determinant " + orb.det.get_str() + " is odd"});
    bool dr_ok = orb.degreewise_ranks == std::vector<int>{2, 2, 2};
    checks.push_back({"orbit-degreewise", dr_ok ? "pass" : "fail",
                      "mod-2 ranks per u-degree are (2, 2, 2)"});

    bool ok = all_checks_pass(checks);
    render_checks(os, cfg, "lubin-tate", checks, ok ? "PASS" : "FAIL");
    return ok ? exit_pass : exit_failed_verdict;
}

// --- verify ----------------------------------------------------------------------

inline int cmd_verify(const run_config& cfg, std::ostream& os) {
    std::vector<check_line> checks;

    // Graded model curve: y^2 + a*xy + b*y = x^3 over Z_(2)[a, b].
    graded_poly za;
    weierstrass_curve<graded_poly> Eg(graded_poly::gen_a(), za, graded_poly::gen_b(),
                                      za, za);
    auto w = expand_w(Eg, cfg.fgl_order);
    checks.push_back({"w-expansion-residual", expand_w_residual(Eg, w).all_zero()
                                                  ? "pass"
                                                  : "fail",
                      "w = z^3 + a1*zw + ... back-substitutes to zero"});

    auto Gg = formal_group_law<graded_poly>::from_curve(Eg, cfg.fgl_order);
    auto res = residual_v1_v2(Gg);
    bool v_ok = res.v1 == graded_poly::gen_a() && res.v2 == graded_poly::gen_b();
    checks.push_back({"height-residues", v_ok ? "pass" : "fail",
                      "(v1, v2) = (a, b) exactly"});

    graded_ring_spec spec{{2, 6}};
    auto rr = check_realization_problem(spec, Gg);
    checks.push_back({"realization-axioms", rr.all_pass() ? "pass" : "fail",
                      "grading, degreewise rank, regular sequence, F2 quotient"});

    bool assoc_ok =
        Gg.associativity_residual(std::min(cfg.fgl_order, 8)).all_zero();
    checks.push_back({"fgl-associativity", assoc_ok ? "pass" : "fail",
                      "residual zero at trivariate truncation " +
                          std::to_string(std::min(cfg.fgl_order, 8))});

    // Lubin-Tate checks need u1-order >= 4.
    if (cfg.order >= 4) {
        auto inv = lubin_tate_invariants(cfg.digits, cfg.order);
        checks.push_back({"lubin-tate-fixed-subring",
                          inv.matches_x_image ? "pass" : "fail", ""});
        auto Elt = lubin_tate_curve(cfg.digits, cfg.order);
        auto Glt = formal_group_law<lt_elem>::from_curve(Elt, cfg.fgl_order);
        auto h = height_diagnostics(Glt);
        checks.push_back({"lubin-tate-heights", (h.h1 && h.h2) ? "pass" : "fail",
                          "(h1, h2) = (true, true)"});
    } else {
        checks.push_back({"lubin-tate-fixed-subring", "not-run",
                          "requires --order >= 4"});
        checks.push_back({"lubin-tate-heights", "not-run", "requires --order >= 4"});
    }

    // Velu comparison at the configured precision (kernel needs t-order 4).
    if (cfg.order >= 4) {
        std::ostringstream sink;
        run_config vcfg = cfg;
        vcfg.format = "text";
        int rc = cmd_velu(vcfg, sink);
        checks.push_back({"velu-isogeny", rc == exit_pass ? "pass" : "fail",
                          "image matches a -> t^2 + 3d - t*d^2, b -> 1"});
    } else {
        checks.push_back({"velu-isogeny", "not-run", "requires --order >= 4"});
    }

    // Theta pipeline (the main stability statement).
    theta_report rep =
        run_theta(cfg.digits, cfg.order,
                  cfg.inject ? injection_mode::t_inverse : injection_mode::none);
    checks.push_back({"theta-alpha-residual",
                      rep.alpha_residual_zero ? "pass" : "fail", ""});
    checks.push_back({"theta-stability", rep.verdict() == "STABLE" ? "pass" : "fail",
                      "negative powers " +
                          std::to_string(rep.negative_power_degrees.size()) +
                          ", odd coefficients " +
                          std::to_string(rep.odd_coefficient_degrees.size()) +
                          ", fractional exponents " +
                          std::to_string(rep.fractional_exponents.size())});

    bool ok = all_checks_pass(checks);
    std::string verdict = ok ? "STABLE"
                          : rep.verdict() != "STABLE" ? "UNSTABLE"
                                                      : "FAIL";
    render_checks(os, cfg, "verify", checks, verdict);
    return ok ? exit_pass : exit_failed_verdict;
}

} // namespace fgltheta::cli
