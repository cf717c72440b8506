#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "diag12/cli.hpp"

int main(int argc, char** argv) {
    using namespace diag12::cli;

    CliSettings settings;
    settings.limits.workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* budget = std::getenv(kBudgetEnvVar)) {
        auto parsed = parse_budget(budget);
        if (!parsed) {
            std::cerr << "error: " << kBudgetEnvVar << " must be a positive integer, got '" << budget << "'\n";
            return kExitUsage;
        }
        settings.limits.enumeration_budget = *parsed;
    }

    CommandOutcome outcome = run_command(std::vector<std::string>(argv + 1, argv + argc), settings);
    std::cout << outcome.stdout_payload;
    std::cerr << outcome.stderr_diagnostics;
    return outcome.exit_code;
}
