#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "emit.hpp"
#include "gtheta/bound.hpp"
#include "gtheta/double_sieve.hpp"
#include "gtheta/errors.hpp"
#include "gtheta/integer_math.hpp"
#include "gtheta/legendre.hpp"
#include "gtheta/oracle.hpp"
#include "gtheta/pair_counts.hpp"

namespace gtheta::cli {

namespace {

// Where records go: the --out file when given, otherwise `fallback`.
class RecordStream {
public:
    RecordStream(const RunConfig& config, std::ostream& fallback) : os_(&fallback) {
        if (!config.out_path.empty()) {
            file_.open(config.out_path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::invalid_argument("cannot open --out file '" + config.out_path + "'");
            os_ = &file_;
        }
    }
    std::ostream& get() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

oracle::PrimeTable sieving_table(std::uint64_t n, bool full) {
    return oracle::PrimeTable(std::max<std::uint64_t>(full ? n : isqrt(n), 2));
}

template <typename Method>
std::vector<Method> parse_methods(const std::string& name, const std::vector<std::pair<std::string, Method>>& known) {
    std::vector<Method> out;
    for (const auto& [label, m] : known)
        if (name == "all" || name == label) out.push_back(m);
    if (out.empty()) throw std::invalid_argument("unknown --method '" + name + "'");
    return out;
}

template <typename Method, typename Compute>
int run_counts(std::uint64_t n, const std::vector<Method>& methods, std::uint64_t expected, const RunConfig& config,
               Compute&& compute, std::ostream& out, std::ostream& err) {
    RecordStream records(config, out);
    std::ostream& os = records.get();
    std::vector<std::uint64_t> values;
    for (Method m : methods) values.push_back(compute(m));

    if (config.format == OutputFormat::Csv) os << "n,method,count\n";
    for (std::size_t i = 0; i < methods.size(); ++i) {
        switch (config.format) {
            case OutputFormat::Human:
                if (methods.size() == 1)
                    os << values[i] << '\n';
                else
                    os << legendre::to_string(methods[i]) << ' ' << values[i] << '\n';
                break;
            case OutputFormat::Csv:
                os << n << ',' << legendre::to_string(methods[i]) << ',' << values[i] << '\n';
                break;
            case OutputFormat::JsonLines:
                os << "{\"n\":" << n << ",\"method\":\"" << legendre::to_string(methods[i]) << "\",\"count\":"
                   << values[i] << "}\n";
                break;
        }
    }

    int code = exit_code::kOk;
    if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
        err << "methods disagree for n = " << n << '\n';
        code = exit_code::kVerificationFailed;
    }
    if (config.oracle_check) {
        for (std::size_t i = 0; i < methods.size(); ++i) {
            if (values[i] != expected) {
                err << "oracle mismatch: " << legendre::to_string(methods[i]) << " gives " << values[i]
                    << ", oracle gives " << expected << '\n';
                code = exit_code::kVerificationFailed;
            }
        }
    }
    return code;
}

std::optional<xi::Interval> parse_interval(const std::string& text) {
    if (text == "auto") return std::nullopt;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--interval must be 'auto' or 'a:b'");
    auto parse = [](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("--interval bound '" + std::string(s) + "' is not an integer");
        return v;
    };
    const std::string_view sv(text);
    return xi::Interval{parse(sv.substr(0, colon)), parse(sv.substr(colon + 1))};
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::kVerificationFailed;
    }
}

}  // namespace

int cmd_primecount(std::uint64_t n, const std::string& method, const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
    return guarded(err, [&] {
        using legendre::PrimeMethod;
        if (n < 4 || n % 2 != 0) throw DomainError("primecount: n must be an even integer >= 4");
        const auto methods = parse_methods<PrimeMethod>(
            method, {{"legendre", PrimeMethod::FloorIE}, {"theta-sum", PrimeMethod::ThetaSum},
                     {"survivor", PrimeMethod::Survivor}});
        const auto table = sieving_table(n, config.oracle_check);
        const std::uint64_t expected = config.oracle_check ? oracle::pi_oracle(table, n) : 0;
        return run_counts(
            n, methods, expected, config,
            [&](PrimeMethod m) { return legendre::prime_count(n, m, table, config.mode); }, out, err);
    });
}

int cmd_composites(std::uint64_t n, const std::string& method, const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
    return guarded(err, [&] {
        using legendre::CompositeMethod;
        if (n < 4 || n % 2 != 0) throw DomainError("composites: n must be an even integer >= 4");
        const auto methods = parse_methods<CompositeMethod>(
            method, {{"legendre", CompositeMethod::FloorIE}, {"theta-sum", CompositeMethod::ThetaSum},
                     {"direct-mark", CompositeMethod::DirectMark}});
        const auto table = sieving_table(n, config.oracle_check);
        const std::uint64_t expected = config.oracle_check ? n - oracle::pi_oracle(table, n) - 1 : 0;
        return run_counts(
            n, methods, expected, config,
            [&](CompositeMethod m) { return legendre::composite_count(n, m, table, config.mode); }, out, err);
    });
}

int cmd_goldbach(std::uint64_t n, bool list, const std::string& interval, const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        if (n < 8 || n % 2 != 0) throw DomainError("goldbach: n must be an even integer >= 8");
        const auto table = sieving_table(n, config.oracle_check);
        const auto basis = xi::make_residue_basis(n, table, parse_interval(interval));
        const xi::SieveOptions options{xi::kDefaultBlock, config.workers};
        const auto counts = xi::pair_counts(basis, options);
        const bool need_list = list || config.oracle_check || !config.mode.is_exact();
        const std::vector<std::uint64_t> pairs = need_list ? xi::prime_pair_list(basis, options)
                                                           : std::vector<std::uint64_t>{};

        RecordStream records(config, out);
        emit_pair_counts(records.get(), config.format, counts, list ? &pairs : nullptr);

        int code = exit_code::kOk;
        if (!config.mode.is_exact()) {
            const auto literal = xi::theta_survivors(basis, config.mode);
            if (literal != pairs) {
                err << "float Theta evaluation disagrees with the residue sieve (" << literal.size() << " vs "
                    << pairs.size() << " survivors)\n";
                code = exit_code::kVerificationFailed;
            } else if (config.format == OutputFormat::Human) {
                records.get() << "theta-check     float eps=" << format_real(config.mode.epsilon()) << " agrees\n";
            }
        }
        if (config.oracle_check) {
            const auto expected = oracle::goldbach_pairs_oracle(table, n, basis.interval.a, basis.interval.b);
            if (expected != pairs) {
                err << "oracle mismatch: sieve has " << pairs.size() << " survivors, brute force has "
                    << expected.size() << " prime pairs\n";
                code = exit_code::kVerificationFailed;
            } else if (config.format == OutputFormat::Human) {
                records.get() << "oracle-check    ok\n";
            }
        }
        return code;
    });
}

int cmd_scan_bound(std::uint64_t start, std::uint64_t end, std::uint64_t step, const RunConfig& config,
                   std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (start > end) throw DomainError("scan-bound: empty range (start > end)");
        if (start < 26 || start % 2 != 0) throw DomainError("scan-bound: start must be even and >= 26");
        RecordStream records(config, out);
        std::ostream& os = records.get();
        emit_scan_header(os, config.format);

        std::optional<xi::ScanRecord> first_violation;
        const xi::ScanOptions options{config.workers};
        const auto summary = xi::scan_bounds(start, end, step, options, [&](const xi::ScanRecord& rec) {
            emit_scan_record(os, config.format, rec);
            if (!rec.report.holds && !first_violation) first_violation = rec;
        });

        std::ostream& summary_os = config.format == OutputFormat::Human ? os : err;
        summary_os << "summary records=" << summary.records << " violations=" << summary.violations
                   << " min_margin=" << format_real(summary.min_margin) << " min_margin_n=" << summary.min_margin_n
                   << " stable_from=" << summary.stable_from << '\n';
        if (first_violation) {
            const auto& r = first_violation->report;
            err << "counterexample: n=" << r.n << " prime_pairs=" << r.prime_pairs << " bound=" << format_real(r.bound)
                << '\n';
            return exit_code::kVerificationFailed;
        }
        return exit_code::kOk;
    });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Theta-function sieves: prime counts, Goldbach prime pairs, pair-count bound scans", "gtheta"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode = "exact";
    double epsilon = theta::ThetaMode::kDefaultEpsilon;
    std::string emit = "human";
    unsigned workers = 1;
    std::string out_path;
    app.add_option("--mode", mode, "Theta evaluation: exact residues or float sines")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--epsilon", epsilon, "Zero threshold for --mode float");
    app.add_option("--emit", emit, "Output format")->check(CLI::IsMember({"human", "csv", "json"}));
    app.add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--out", out_path, "Write records to FILE");

    std::uint64_t n = 0;
    std::string method = "all";
    bool oracle_check = false;

    auto* primecount = app.add_subcommand("primecount", "pi(n) by inclusion-exclusion / Theta sums");
    primecount->add_option("n", n, "Even integer >= 4")->required();
    primecount->add_option("--method", method, "legendre | theta-sum | survivor | all");
    primecount->add_flag("--oracle-check", oracle_check, "Compare against the sieve of Eratosthenes");

    auto* composites = app.add_subcommand("composites", "Composites <= n");
    composites->add_option("n", n, "Even integer >= 4")->required();
    composites->add_option("--method", method, "legendre | theta-sum | direct-mark | all");
    composites->add_flag("--oracle-check", oracle_check, "Compare against the sieve of Eratosthenes");

    bool list = false;
    std::string interval = "auto";
    auto* goldbach = app.add_subcommand("goldbach", "Prime pairs x + (n - x) = n over an interval");
    goldbach->add_option("n", n, "Even integer >= 8")->required();
    goldbach->add_flag("--list", list, "Print the surviving x values");
    goldbach->add_option("--interval", interval, "auto (= [ceil(sqrt n), n - ceil(sqrt n)]) or a:b");
    goldbach->add_flag("--oracle-check", oracle_check, "Compare against brute-force enumeration");

    std::uint64_t start = 0, end = 0, step = 2;
    auto* scan = app.add_subcommand("scan-bound", "Check pi_pairs(n) > (n - 4 sqrt n) / ln^2(n - sqrt n)");
    scan->add_option("start", start, "First even n (>= 26)")->required();
    scan->add_option("end", end, "Last n")->required();
    scan->add_option("--step", step, "Even stride");

    std::uint64_t max_n = 20000;
    auto* selftest = app.add_subcommand("selftest", "Run the invariant suites against the oracles");
    selftest->add_option("--max-n", max_n, "Largest n exercised (>= 100)");

    std::vector<const char*> argv{"gtheta"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kOk : exit_code::kUsage;
    }

    RunConfig config;
    config.epsilon = epsilon;
    config.workers = workers;
    config.oracle_check = oracle_check;
    config.out_path = out_path;
    config.format = emit == "csv" ? OutputFormat::Csv : emit == "json" ? OutputFormat::JsonLines : OutputFormat::Human;
    try {
        config.mode = mode == "float" ? theta::ThetaMode::float_approx(epsilon) : theta::ThetaMode::exact();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    }

    if (primecount->parsed()) return cmd_primecount(n, method, config, out, err);
    if (composites->parsed()) return cmd_composites(n, method, config, out, err);
    if (goldbach->parsed()) return cmd_goldbach(n, list, interval, config, out, err);
    if (scan->parsed()) return cmd_scan_bound(start, end, step, config, out, err);
    if (selftest->parsed()) return cmd_selftest(max_n, config, out, err);
    return exit_code::kUsage;
}

}  // namespace gtheta::cli
