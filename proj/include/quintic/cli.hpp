#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace quintic::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct GlobalOptions {
    std::string json_path;
    std::string csv_path;
    std::string fixtures_path;
    unsigned workers = 1;
    bool quiet = false;
    bool timing = false;
};

struct SearchArgs {
    std::int64_t h = 30;
    std::int64_t smin = 0;
    std::int64_t smax = 2000;
    bool allow_inadmissible = false;
    bool cross_check = false;
};

struct ScreenArgs {
    std::int64_t h = 30;
    std::int64_t lo = 1;
    std::int64_t hi = 100;
    bool torsion = false;
};

struct Genus2Args {
    std::int64_t height = 1000;
};

struct PScreenArgs {
    std::int64_t smax = 100;
    std::int64_t hmax = 300;
    std::int64_t step = 30;
    std::int64_t delta2_h = 30;
    std::int64_t delta2_max = 10000;
};

struct OracleArgs {
    int k = 5;
    std::int64_t bound = 500;
    bool slice = false;
    std::int64_t h = 0;
};

/// Result of one subcommand: the JSON envelope, optional CSV rows (first row
/// is the header) and a human-readable summary.
struct CommandOutput {
    int exit_code = kSuccess;
    nlohmann::ordered_json report;
    std::vector<std::vector<std::string>> csv;
    std::string text;
};

/// Thrown for argument combinations the parser cannot reject on its own.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CommandOutput cmd_verify(const GlobalOptions& g);
CommandOutput cmd_search(const GlobalOptions& g, const SearchArgs& a);
CommandOutput cmd_screen(const GlobalOptions& g, const ScreenArgs& a);
CommandOutput cmd_genus2(const GlobalOptions& g, const Genus2Args& a);
CommandOutput cmd_pscreen(const GlobalOptions& g, const PScreenArgs& a);
CommandOutput cmd_oracle(const GlobalOptions& g, const OracleArgs& a);

std::string to_csv(const std::vector<std::vector<std::string>>& rows);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace quintic::cli
