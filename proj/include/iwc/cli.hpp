// Command-line driver. Exit codes: 0 success, 1 usage error, 2 incomplete
// (verification not finished within the ceiling, or a resource limit hit),
// 3 internal consistency failure.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace iwc {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitIncomplete = 2, kExitInternal = 3 };

struct RunConfig {
    std::string command;
    std::string type;
    std::string pi_prime;
    std::int64_t trunc = -1;  // -1: command-specific default
    int max_degree = 8;
    std::size_t dim_ceiling = 300;
    std::string format = "text";
    std::uint64_t seed = 1;
    int max_rank = 6;  // larger ranks run but are untested
    std::string lambda;
    bool character = false;
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace iwc
