#pragma once

// Command-line front end. run_command() does all the work in-process so that
// tests can drive it directly; tools/diag12.cpp only forwards argv and the
// environment.
//
// Exit codes: 0 success or --expect matched, 1 negative verdict / --expect
// mismatch / not a unit, 2 usage, parse or budget errors.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diag12/diagonal.hpp"

namespace diag12::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kBudgetEnvVar = "DIAG12_BUDGET";

struct CommandOutcome {
    int exit_code = kExitOk;
    std::string stdout_payload;
    std::string stderr_diagnostics;
};

struct CliSettings {
    DiagonalLimits limits;
};

/// args excludes the program name, e.g. {"check", "12", "--poly"}.
CommandOutcome run_command(const std::vector<std::string>& args, const CliSettings& settings = {});

/// Value of DIAG12_BUDGET: a positive decimal integer.
std::optional<std::uint64_t> parse_budget(std::string_view text);

} // namespace diag12::cli
