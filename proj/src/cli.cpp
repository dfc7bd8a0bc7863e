#include "classzeta/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "classzeta/census.hpp"
#include "classzeta/errors.hpp"
#include "classzeta/io.hpp"
#include "classzeta/model.hpp"
#include "classzeta/series.hpp"
#include "classzeta/version.hpp"
#include "classzeta/watkins.hpp"

namespace classzeta {

namespace {

int default_workers() {
    if (const char* env = std::getenv("CLASSZETA_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

void write_out(const std::string& payload, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    file << payload;
}

int run_selftest(std::ostream& out) {
    bool ok = true;
    const auto check = [&](const char* name, bool pass) {
        out << name << ": " << (pass ? "ok" : "FAIL") << '\n';
        ok = ok && pass;
    };

    // Identity A: closed-form expansion == Lambert == Euler == Artin-Mazur
    const int T = kDefaultOrder;
    const TruncatedSeries expanded = expand_rational(predicted_zeta(), T);
    const std::vector<std::int64_t> K = predicted_counts(T);
    const std::vector<std::int64_t> N = lefschetz_counts(T);
    check("identity A (expansion = Lambert = Euler = Artin-Mazur, T=50)",
          expanded == lambert_from_K(K, T) && expanded == euler_from_K(K, T) &&
              expanded == artin_mazur_from_N(N, T));

    // Identity B: the four local factors multiply to the closed form
    check("identity B (local-factor product = closed form)", char_poly_product().matches_predicted);

    // Identity C: Lefschetz traces == extracted counts
    const TruncatedSeries expanded48 = expand_rational(predicted_zeta(), 48);
    check("identity C (trace recurrences = extracted N, T=48)", lefschetz_counts(48) == extract_N(expanded48));

    return ok ? 0 : 2;
}

struct Options {
    std::int64_t disc = 0;
    bool oracle = false;
    std::int64_t bound = 0;
    int workers = 0;
    std::string format = "csv";
    std::string out_path;
    int order = kDefaultOrder;
    int hmax = 12;
    bool use_watkins = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"class-number zeta laboratory: imaginary quadratic class-number census, exact\n"
                 "zeta-series constructions, and reconciliation against the rational closed form",
                 "classzeta"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* classnum = app.add_subcommand("classnum", "class number of one fundamental discriminant");
    classnum->add_option("--disc", opt.disc, "negative fundamental discriminant")->required();
    classnum->add_flag("--oracle", opt.oracle, "also print both algorithms (forms and Dirichlet)");

    CLI::App* census_cmd = app.add_subcommand("census", "class-number histogram of all |D| <= bound");
    census_cmd->add_option("--bound", opt.bound, "largest |D| to include (>= 3)")->required();
    census_cmd->add_option("--workers", opt.workers, "parallel workers (default: $CLASSZETA_WORKERS or 1)");
    census_cmd->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    census_cmd->add_option("--out", opt.out_path, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify-census", "compare a census against the reference table");
    verify->add_option("--bound", opt.bound, "largest |D| to include (>= 3)")->required();
    verify->add_option("--workers", opt.workers, "parallel workers (default: $CLASSZETA_WORKERS or 1)");

    CLI::App* expand = app.add_subcommand("expand", "coefficients of the rational closed form");
    expand->add_option("--order", opt.order, "truncation order (default 50)");

    CLI::App* counts = app.add_subcommand("counts", "predicted per-class-number counts K_h");
    counts->add_option("--hmax", opt.hmax, "largest class number (default 12)");

    CLI::App* report = app.add_subcommand("report", "predicted-vs-empirical reconciliation report");
    auto* bound_opt = report->add_option("--bound", opt.bound, "census bound (default 170000)");
    auto* watkins_opt =
        report->add_flag("--watkins", opt.use_watkins, "compare against the full reference table instead");
    bound_opt->excludes(watkins_opt);
    report->add_option("--workers", opt.workers, "parallel workers (default: $CLASSZETA_WORKERS or 1)");
    report->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    report->add_option("--out", opt.out_path, "write to file instead of stdout");
    report->add_option("--hmax", opt.hmax, "largest class number in the report (default 100)");

    CLI::App* selftest = app.add_subcommand("selftest", "verify the algebraic identities of the model");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 1;
    }

    const int workers = opt.workers >= 1 ? opt.workers : default_workers();

    try {
        if (classnum->parsed()) {
            const Discriminant D = Discriminant::checked(opt.disc);
            out << "h(" << opt.disc << ") = " << class_number_forms(D) << '\n';
            if (opt.oracle) {
                out << "forms:     " << class_number_forms(D) << '\n';
                out << "dirichlet: " << class_number_dirichlet(D) << '\n';
            }
        } else if (census_cmd->parsed()) {
            const CensusTable table = census(opt.bound, workers);
            write_out(opt.format == "json" ? census_to_json(table) : census_to_csv(table), opt.out_path, out);
        } else if (verify->parsed()) {
            const CensusTable table = census(opt.bound, workers);
            const std::vector<VerifyRow> rows = verify_watkins(table, load_watkins());
            out << verify_rows_to_text(rows);
            std::int64_t matches = 0, mismatches = 0, inconclusive = 0;
            for (const VerifyRow& r : rows) {
                if (r.verdict == Verdict::match) ++matches;
                else if (r.verdict == Verdict::mismatch) ++mismatches;
                else ++inconclusive;
            }
            out << "summary: bound=" << opt.bound << " matches=" << matches << " mismatches=" << mismatches
                << " inconclusive=" << inconclusive << '\n';
        } else if (expand->parsed()) {
            out << series_to_csv(expand_rational(predicted_zeta(), opt.order));
        } else if (counts->parsed()) {
            const std::vector<std::int64_t> K = predicted_counts(opt.hmax);
            out << sequence_to_csv(K);
        } else if (report->parsed()) {
            if (!report->count("--hmax")) opt.hmax = 100;
            ComparisonReport cmp;
            ReportMeta meta;
            meta.truncation_order = opt.hmax;
            meta.version = kVersion;
            if (opt.use_watkins) {
                cmp = compare(load_watkins(), opt.hmax);
                meta.source = "watkins";
            } else {
                const std::int64_t bound = report->count("--bound") ? opt.bound : 170000;
                cmp = compare(census(bound, workers), opt.hmax);
                meta.source = "census";
                meta.bound = bound;
            }
            cmp.primes = prime_bound_report(load_watkins());
            write_out(opt.format == "json" ? report_to_json(cmp, meta) : report_to_csv(cmp), opt.out_path, out);
        } else if (selftest->parsed()) {
            return run_selftest(out);
        }
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace classzeta
