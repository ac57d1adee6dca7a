// fgltheta: exact-arithmetic verification of the power operation on the
// Gamma_1(3) elliptic formal group law. See README.md for usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cli_core.hpp"

namespace {

using fgltheta::cli::run_config;

void add_common_flags(CLI::App* cmd, run_config& cfg) {
    cmd->add_option("--digits", cfg.digits,
                    "2-adic working precision N: residues mod 2^N (8..64)")
        ->envname("FGLTHETA_DEFAULT_DIGITS")
        ->capture_default_str();
    cmd->add_option("--order", cfg.order, "series truncation order K (>= 2)")
        ->capture_default_str();
    cmd->add_option("--fgl-order", cfg.fgl_order,
                    "group-law truncation order (>= 5)")
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "report format: text, json or csv")
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path, "write the report to this path");
    cmd->add_flag("--inject-negative-control", cfg.inject,
                  "perturb psi2(t) by t^(-1); every certificate must notice");
}

int emit(const run_config& cfg, const std::string& body) {
    if (cfg.out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << cfg.out_path << "' for writing\n";
        return 1;
    }
    out << body;
    out.flush();
    if (!out) {
        std::cerr << "error: short write to '" << cfg.out_path << "'\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    using namespace fgltheta::cli;

    CLI::App app{"exact verification of the elliptic formal group law and its "
                 "theta power operation"};
    app.require_subcommand(1);

    run_config cfg;
    auto* c_verify = app.add_subcommand("verify", "run every check end to end");
    auto* c_theta = app.add_subcommand("theta", "stability certificates for theta");
    auto* c_coeff =
        app.add_subcommand("coefficients", "tables for c(s), psi2(s), theta(s)");
    auto* c_velu = app.add_subcommand("velu", "2-isogeny image comparison");
    auto* c_lt = app.add_subcommand("lubin-tate", "deformation-ring invariants");
    for (auto* cmd : {c_verify, c_theta, c_coeff, c_velu, c_lt})
        add_common_flags(cmd, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid_config;
    }

    try {
        cfg.validate();
        std::ostringstream body;
        int rc;
        if (c_verify->parsed())
            rc = cmd_verify(cfg, body);
        else if (c_theta->parsed())
            rc = cmd_theta(cfg, body);
        else if (c_coeff->parsed())
            rc = cmd_coefficients(cfg, body);
        else if (c_velu->parsed())
            rc = cmd_velu(cfg, body);
        else
            rc = cmd_lubin_tate(cfg, body);
        if (emit(cfg, body.str()) != 0)
            return exit_invalid_config;
        return rc;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const fgltheta::internal_mismatch& e) {
        std::cerr << "internal mismatch: " << e.what() << "\n";
        return exit_internal_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    }
}
