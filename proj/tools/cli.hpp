#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gtheta/theta.hpp"

namespace gtheta::cli {

enum class OutputFormat { Human, Csv, JsonLines };

struct RunConfig {
    theta::ThetaMode mode = theta::ThetaMode::exact();
    double epsilon = theta::ThetaMode::kDefaultEpsilon;
    OutputFormat format = OutputFormat::Human;
    unsigned workers = 1;
    bool oracle_check = false;
    std::string out_path;  // empty: records go to the command's output stream
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
}  // namespace exit_code

/// Parses and runs one command line. Never throws; every outcome maps to
/// exit 0 (success), 1 (verification or bound failure) or 2 (usage).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_primecount(std::uint64_t n, const std::string& method, const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int cmd_composites(std::uint64_t n, const std::string& method, const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int cmd_goldbach(std::uint64_t n, bool list, const std::string& interval, const RunConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_scan_bound(std::uint64_t start, std::uint64_t end, std::uint64_t step, const RunConfig& config,
                   std::ostream& out, std::ostream& err);
int cmd_selftest(std::uint64_t max_n, const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gtheta::cli
