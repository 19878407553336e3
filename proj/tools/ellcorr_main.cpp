#include <CLI11.hpp>
#include <iostream>

#include "ellcorr/parser.hpp"
#include "ellcorr/report.hpp"

using namespace ellcorr;

namespace {

int do_verify(int row, double tol, int samples, uint64_t seed, const std::string& format) {
    SuiteConfig cfg;
    cfg.row = row;
    cfg.tol = tol;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.format = format == "csv" ? ReportFormat::CSV
               : format == "text" ? ReportFormat::TEXT
                                  : ReportFormat::JSON;
    VerificationReport rep = run_suite(cfg);
    std::cout << emit(rep, cfg.format);
    return rep.all_pass() ? 0 : 1;
}

int do_fuchs(int row_filter) {
    RowParams params;
    for (int row = 1; row <= 6; ++row) {
        if (row_filter != 0 && row_filter != row)
            continue;
        CanonicalRow cr = canonical_row(row, params);
        FuchsReport fr = fuchs_report(cr.eq);
        if (fr.balances.empty()) {
            std::cout << "row " << row << ": " << fr.note << "\n";
            continue;
        }
        for (const BalanceAnalysis& ba : fr.balances) {
            std::cout << "row " << row << ": q = " << ba.bal.q
                      << ", u0 = " << format_complex(ba.bal.u0)
                      << (ba.bal.charted ? " (chart)" : "") << ", K = " << ba.K << ", indices =";
            for (Cx idx : ba.indicial.roots)
                std::cout << ' ' << format_complex(idx);
            std::cout << ", free constants = " << ba.free_constants << "\n";
        }
    }
    return 0;
}

int do_fit(const std::string& family, int k, const std::string& g2, const std::string& g3) {
    FamilyKind kind = family == "wp"      ? FamilyKind::WP
                    : family == "wpprime" ? FamilyKind::WP_PRIME
                    : family == "wp2"     ? FamilyKind::WP2
                                          : FamilyKind::WP3;
    SolutionFamily fam{kind, {parse_complex(g2), parse_complex(g3)}, Cx(0), Mobius(), Cx(0)};
    LaurentSeries base = family_base_series(fam, 36);
    RationalFn R = fit_binomial_sweep(base, k);
    std::cout << "(u')^" << k << " = " << format_rational(R) << "\n";
    return 0;
}

int do_eval(const std::string& g2, const std::string& g3, const std::string& z) {
    WpPair w = wp_eval_pair(parse_complex(z), {parse_complex(g2), parse_complex(g3)});
    std::cout << "wp = " << format_complex(w.p) << "\n";
    std::cout << "wp' = " << format_complex(w.pprime) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"residual certification for the canonical Schwarzian equations and their "
                 "first-order binomial partners"};
    app.require_subcommand(1);

    int row = 0;
    double tol = 1e-8;
    int samples = 32;
    uint64_t seed = 42;
    std::string format = "json";
    CLI::App* verify = app.add_subcommand("verify", "run all certifications and emit a report");
    verify->add_option("--row", row, "restrict to one row")->check(CLI::Range(1, 6));
    verify->add_option("--tol", tol, "pass threshold for residuals");
    verify->add_option("--samples", samples, "sample points per certification")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    int fuchs_row = 0;
    CLI::App* fuchs = app.add_subcommand("fuchs", "print the movable-singularity analysis");
    fuchs->add_option("--row", fuchs_row, "restrict to one row")->check(CLI::Range(1, 6));

    std::string fit_family;
    int fit_k = 0;
    std::string fit_g2 = "3", fit_g3 = "1";
    CLI::App* fit = app.add_subcommand("fit", "fit (u')^k = R(u) from a family's series");
    fit->add_option("--family", fit_family, "series to expand")
        ->required()
        ->check(CLI::IsMember({"wp", "wpprime", "wp2", "wp3"}));
    fit->add_option("--k", fit_k, "derivative power")->required()->check(CLI::PositiveNumber);
    fit->add_option("--g2", fit_g2, "invariant g2");
    fit->add_option("--g3", fit_g3, "invariant g3");

    std::string eval_g2 = "0", eval_g3 = "0", eval_z;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a kernel function");
    CLI::App* eval_wp = eval->add_subcommand("wp", "wp and wp' at a point");
    eval_wp->add_option("--g2", eval_g2, "invariant g2");
    eval_wp->add_option("--g3", eval_g3, "invariant g3");
    eval_wp->add_option("--z", eval_z, "evaluation point, e.g. \"0.5+0.2i\"")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify))
            return do_verify(row, tol, samples, seed, format);
        if (app.got_subcommand(fuchs))
            return do_fuchs(fuchs_row);
        if (app.got_subcommand(fit))
            return do_fit(fit_family, fit_k, fit_g2, fit_g3);
        if (app.got_subcommand(eval)) {
            if (!eval->got_subcommand(eval_wp)) {
                std::cerr << "error: eval requires the wp subcommand\n";
                return 2;
            }
            return do_eval(eval_g2, eval_g3, eval_z);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
