#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace qec::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kCapacityError = 3 };

struct CommandOutcome {
    int exit_code = kOk;
    nlohmann::json report;  // always carries "schema": 1
    std::string text;
    bool json_output = false;

    /// What the command prints: the JSON report with --json, else the text.
    std::string rendered() const;
};

/// Runs one command line (without the program name). Code-file arguments
/// given as "-" or omitted are read from `in`.
CommandOutcome run(const std::vector<std::string> &args, std::istream &in);
CommandOutcome run(const std::vector<std::string> &args);

}  // namespace qec::cli
