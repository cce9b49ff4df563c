#include "sievelab/cli.hpp"

#include <algorithm>
#include <fstream>

#include "CLI11.hpp"

#include "sievelab/report.hpp"

namespace sievelab {

namespace {

Format parse_format(const std::string& name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    return Format::Text;
}

unsigned parse_check_mask(const std::string& name) {
    if (name == "disjoint") {
        return kCheckDisjoint;
    }
    if (name == "coverage") {
        return kCheckCoverage;
    }
    if (name == "divergence") {
        return kCheckDivergence;
    }
    if (name == "jk-note") {
        return kCheckJkNote;
    }
    return kCheckAll;
}

SieveRun run_method(const std::string& method, std::uint64_t limit) {
    SieveOptions drop{LogRetention::Drop};
    if (method == "fabio") {
        return fabio_sieve(limit, drop);
    }
    if (method == "eratosthenes") {
        return eratosthenes_instrumented(limit, drop);
    }
    if (method == "euler") {
        return euler_instrumented(limit, drop);
    }
    return oracle_primes(limit);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime sieve workbench: pattern tables, instrumented sieves, verification",
                 "sievelab"};
    app.require_subcommand(1);

    std::uint64_t limit = 0;
    std::uint32_t count = 0;
    std::uint64_t max_k = 0;
    std::string method;
    std::string format_name = "text";
    std::string check_name = "all";
    std::string output_path;
    bool strict = false;
    bool include_primes = false;

    const auto format_values = CLI::IsMember({"text", "csv", "json"});

    CLI::App* primes = app.add_subcommand("primes", "list primes up to a bound with one sieve");
    primes->add_option("--limit", limit, "upper bound (inclusive)")->required();
    primes->add_option("--method", method, "sieve to run")
        ->required()
        ->check(CLI::IsMember({"fabio", "eratosthenes", "euler", "oracle"}));
    primes->add_option("--format", format_name)->check(format_values);
    primes->add_option("--output", output_path, "write to a file instead of stdout");

    CLI::App* table = app.add_subcommand("table", "first rows of the calculation table");
    table->add_option("--count", count, "number of rows")->required();
    table->add_option("--format", format_name)->check(format_values);
    table->add_option("--output", output_path);

    CLI::App* jk_table = app.add_subcommand("jk-table", "J=K rows up to a prime K");
    jk_table->add_option("--max-k", max_k, "largest K (must be prime)")->required();
    jk_table->add_option("--format", format_name)->check(format_values);
    jk_table->add_option("--output", output_path);

    CLI::App* cmp = app.add_subcommand("compare", "per-sieve statistics for one bound");
    cmp->add_option("--limit", limit, "upper bound (default 1000)")->default_val(1000);
    cmp->add_option("--format", format_name)->check(format_values);
    cmp->add_flag("--include-primes", include_primes, "embed prime lists in json output");
    cmp->add_option("--output", output_path);

    CLI::App* verify = app.add_subcommand("verify", "structural checks against the oracle");
    verify->add_option("--limit", limit, "upper bound")->required();
    verify->add_option("--check", check_name)
        ->check(CLI::IsMember({"disjoint", "coverage", "divergence", "jk-note", "all"}));
    verify->add_flag("--strict", strict, "exit 1 when a check reports findings");
    verify->add_option("--format", format_name)->check(format_values);
    verify->add_option("--output", output_path);

    CLI::App* replay = app.add_subcommand("replay", "step-by-step pattern walkthrough");
    replay->add_option("--limit", limit, "upper bound")->required();
    replay->add_option("--format", format_name)->check(format_values);
    replay->add_option("--output", output_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* target = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "error: cannot write to " << output_path << "\n";
            return 2;
        }
        target = &file;
    }

    Format format = parse_format(format_name);
    try {
        if (primes->parsed()) {
            render_primes(run_method(method, limit), format, *target);
        } else if (table->parsed()) {
            render_table(calculation_table(count), TableStyle::Numbered, format, *target);
        } else if (jk_table->parsed()) {
            render_table(jk_rows(max_k), TableStyle::Unnumbered, format, *target);
        } else if (cmp->parsed()) {
            render_comparison(compare(limit), format, *target, include_primes);
        } else if (verify->parsed()) {
            unsigned mask = parse_check_mask(check_name);
            VerificationReport report = run_checks(limit, mask);
            render_verification(report, mask, format, *target);
            if (strict && has_findings(report, mask)) {
                return 1;
            }
        } else if (replay->parsed()) {
            render_replay(limit, pattern_replay(limit), format, *target);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const format_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace sievelab
