#include "emit.hpp"

#include <cstdio>
#include <ostream>

namespace gtheta::cli {

namespace {

const char* boolean(bool b) { return b ? "true" : "false"; }

void join(std::ostream& os, const std::vector<std::uint64_t>& values, const char* sep) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void emit_scan_header(std::ostream& os, OutputFormat format) {
    char buf[128];
    switch (format) {
        case OutputFormat::Csv:
            os << kScanCsvHeader << '\n';
            break;
        case OutputFormat::Human:
            std::snprintf(buf, sizeof buf, "%10s %11s %8s %8s %12s %12s %12s %s\n", "n", "prime_pairs", "hat",
                          "tilde", "interval_len", "bound", "margin", "holds");
            os << buf;
            break;
        case OutputFormat::JsonLines:
            break;
    }
}

void emit_scan_record(std::ostream& os, OutputFormat format, const xi::ScanRecord& rec) {
    const auto& c = rec.counts;
    const auto& r = rec.report;
    switch (format) {
        case OutputFormat::Csv:
            os << r.n << ',' << r.prime_pairs << ',' << c.hat << ',' << c.tilde << ',' << c.length << ','
               << format_real(r.bound) << ',' << format_real(r.margin) << ',' << boolean(r.holds) << '\n';
            break;
        case OutputFormat::JsonLines:
            os << "{\"n\":" << r.n << ",\"prime_pairs\":" << r.prime_pairs << ",\"hat\":" << c.hat
               << ",\"tilde\":" << c.tilde << ",\"interval_len\":" << c.length << ",\"bound\":" << format_real(r.bound)
               << ",\"margin\":" << format_real(r.margin) << ",\"holds\":" << boolean(r.holds) << "}\n";
            break;
        case OutputFormat::Human: {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%10llu %11llu %8llu %8llu %12llu %12s %12s %s\n",
                          static_cast<unsigned long long>(r.n), static_cast<unsigned long long>(r.prime_pairs),
                          static_cast<unsigned long long>(c.hat), static_cast<unsigned long long>(c.tilde),
                          static_cast<unsigned long long>(c.length), format_real(r.bound).c_str(),
                          format_real(r.margin).c_str(), boolean(r.holds));
            os << buf;
            break;
        }
    }
}

void emit_pair_counts(std::ostream& os, OutputFormat format, const xi::PairCounts& c,
                      const std::vector<std::uint64_t>* pairs) {
    switch (format) {
        case OutputFormat::Human:
            os << "n               " << c.n << '\n'
               << "interval        [" << c.interval.a << ", " << c.interval.b << "]\n"
               << "interval_len    " << c.length << '\n'
               << "prime_pairs     " << c.prime_pairs << '\n'
               << "composite_pairs " << c.composite_pairs << '\n'
               << "hat             " << c.hat << '\n'
               << "tilde           " << c.tilde << '\n';
            if (pairs) {
                os << "pairs           ";
                join(os, *pairs, " ");
                os << '\n';
            }
            break;
        case OutputFormat::Csv:
            os << "n,interval_a,interval_b,interval_len,prime_pairs,composite_pairs,hat,tilde"
               << (pairs ? ",pairs" : "") << '\n';
            os << c.n << ',' << c.interval.a << ',' << c.interval.b << ',' << c.length << ',' << c.prime_pairs << ','
               << c.composite_pairs << ',' << c.hat << ',' << c.tilde;
            if (pairs) {
                os << ',';
                join(os, *pairs, ";");
            }
            os << '\n';
            break;
        case OutputFormat::JsonLines:
            os << "{\"n\":" << c.n << ",\"interval_a\":" << c.interval.a << ",\"interval_b\":" << c.interval.b
               << ",\"interval_len\":" << c.length << ",\"prime_pairs\":" << c.prime_pairs
               << ",\"composite_pairs\":" << c.composite_pairs << ",\"hat\":" << c.hat << ",\"tilde\":" << c.tilde;
            if (pairs) {
                os << ",\"pairs\":[";
                join(os, *pairs, ",");
                os << ']';
            }
            os << "}\n";
            break;
    }
}

}  // namespace gtheta::cli
