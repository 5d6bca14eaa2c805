#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gtheta/bound.hpp"

namespace gtheta::cli {

/// printf("%.6g").
std::string format_real(double v);

inline constexpr const char* kScanCsvHeader = "n,prime_pairs,hat,tilde,interval_len,bound,margin,holds";

void emit_scan_header(std::ostream& os, OutputFormat format);
void emit_scan_record(std::ostream& os, OutputFormat format, const xi::ScanRecord& rec);

void emit_pair_counts(std::ostream& os, OutputFormat format, const xi::PairCounts& counts,
                      const std::vector<std::uint64_t>* pairs);

}  // namespace gtheta::cli
