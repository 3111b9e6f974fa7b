#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "shen_elliptic/csv.hpp"
#include "shen_elliptic/errors.hpp"
#include "shen_elliptic/hypergeometric.hpp"
#include "shen_elliptic/shen.hpp"
#include "shen_elliptic/signature.hpp"
#include "shen_elliptic/verify.hpp"
#include "shen_elliptic/weierstrass.hpp"

namespace se = shen_elliptic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitDomain = 2;
constexpr int kExitPole = 3;

double default_tolerance() {
    if (const char* env = std::getenv("SHEN_ELL_TOL")) {
        try {
            const double tol = std::stod(env);
            if (tol > 0.0) return tol;
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
        std::cerr << "warning: ignoring invalid SHEN_ELL_TOL='" << env << "'\n";
    }
    return 1e-8;
}

se::Modulus modulus_from_flag(double kappa2) {
    return se::Modulus::from_kappa_squared(kappa2); // throws domain_error outside (0,1)
}

int cmd_eval(int signature, double kappa2, const std::string& z_text) {
    const se::Signature& sig = se::Signature::from_order(signature);
    const se::Modulus m = modulus_from_flag(kappa2);
    const se::ComplexValue z = se::csv::parse_complex(z_text);

    const se::ShenFunction f(sig, m);
    const se::ComplexValue fv = f(z);
    se::ComplexValue pv;
    try {
        pv = f.weierstrass().p(z);
    } catch (const se::pole_error&) {
        pv = se::ComplexValue(std::numeric_limits<double>::infinity(), 0.0);
    }

    std::cout << "signature,kappa2,z_re,z_im,f_re,f_im,p_re,p_im\n";
    std::cout << signature << ',' << se::csv::format_real(kappa2) << ','
              << se::csv::format_complex_pair(z) << ','
              << se::csv::format_complex_pair(fv) << ','
              << se::csv::format_complex_pair(pv) << '\n';
    return kExitOk;
}

int cmd_periods(int signature, double kappa2) {
    const se::Signature& sig = se::Signature::from_order(signature);
    const se::Modulus m = modulus_from_flag(kappa2);

    const se::HalfPeriods hyp = se::shen_half_periods(sig, m);
    const se::HalfPeriods quad =
        se::half_periods_from_invariants(se::signature_invariants(sig, m));
    const se::ComplexValue ratio = se::period_ratio(sig, m);

    std::cout << "omega,omega_prime_imag,ratio_imag,omega_quadrature,"
                 "omega_prime_quadrature_imag\n";
    std::cout << se::csv::format_real(hyp.omega) << ','
              << se::csv::format_real(hyp.omega_prime.imag()) << ','
              << se::csv::format_real(ratio.imag()) << ','
              << se::csv::format_real(quad.omega) << ','
              << se::csv::format_real(quad.omega_prime.imag()) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite_name, double tol) {
    const se::verify::Suite suite = se::verify::suite_from_name(suite_name);
    const auto records = se::verify::run_suite(suite, tol);

    std::cout << "name,kappa2,residual,threshold,status\n";
    bool all_pass = true;
    for (const auto& r : records) {
        all_pass = all_pass && r.pass;
        std::cout << r.name << ',' << se::csv::format_real(r.kappa2) << ','
                  << se::csv::format_real(r.residual) << ','
                  << se::csv::format_real(r.threshold) << ','
                  << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_table(int signature, double kappa2, int grid, const std::string& output) {
    const se::Signature& sig = se::Signature::from_order(signature);
    const se::Modulus m = modulus_from_flag(kappa2);
    if (grid < 2) throw se::domain_error("grid must be at least 2");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output.empty() && output != "-") {
        file.open(output);
        if (!file) throw se::domain_error("cannot open output path '" + output + "'");
        out = &file;
    }

    const se::ShenFunction f(sig, m);
    const double four_k = 4.0 * se::complete_K(sig, m);

    *out << "u,dn_real,dn_from_wp,abs_diff\n";
    for (int i = 0; i < grid; ++i) {
        const double u = four_k * static_cast<double>(i) / (grid - 1);
        const double by_real = sig.tag() == se::SignatureTag::Three
                                   ? se::dn3_real(m, u)
                                   : se::dn4_real(m, u);
        const double by_wp = f(se::ComplexValue(u, 0.0)).real();
        *out << se::csv::format_real(u) << ',' << se::csv::format_real(by_real) << ','
             << se::csv::format_real(by_wp) << ','
             << se::csv::format_real(std::abs(by_real - by_wp)) << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical suite for the elliptic functions dn3/dn4, their "
                 "coperiodic Weierstrass functions, and the quadratic/cubic "
                 "modular transformations"};
    app.require_subcommand(1);

    int signature = 4;
    double kappa2 = 0.5;
    std::string z_text = "0+0i";
    std::string suite_name = "all";
    double tol = default_tolerance();
    int grid = 33;
    std::string output;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--signature", signature, "signature family, 3 or 4")
            ->check(CLI::IsMember({3, 4}));
        sub->add_option("--kappa2", kappa2, "modulus squared, strictly inside (0,1)");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate dn and wp at one point");
    add_common(eval);
    eval->add_option("--z", z_text, "complex argument, e.g. 0.3+0.2i");

    CLI::App* periods = app.add_subcommand(
        "periods", "closed-form and quadrature half periods plus period ratio");
    add_common(periods);

    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--suite", suite_name,
                       "all|hypergeometric|weierstrass|modular|shen");
    verify->add_option("--tol", tol, "base tolerance for default-threshold checks");

    CLI::App* table = app.add_subcommand("table", "CSV table of dn over [0, 4K]");
    add_common(table);
    table->add_option("--grid", grid, "number of rows (>= 2)");
    table->add_option("--output", output, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(signature, kappa2, z_text);
        if (app.got_subcommand(periods)) return cmd_periods(signature, kappa2);
        if (app.got_subcommand(verify)) return cmd_verify(suite_name, tol);
        if (app.got_subcommand(table)) return cmd_table(signature, kappa2, grid, output);
    } catch (const se::pole_error& e) {
        std::cerr << "pole error: " << e.what() << '\n';
        return kExitPole;
    } catch (const se::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitDomain;
}
