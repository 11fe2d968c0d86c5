#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgk/domain.hpp"

namespace sgk::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_data = 2,
    exit_precondition = 3,
};

enum class OutputFormat { json, tsv };

struct CliConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string semiring;
    std::vector<Index> sources;
    std::string direction = "out";
    double alpha = 0.85;
    double tol = 1e-8;
    Index max_iters = 100;
    bool transpose = false;
    bool weighted = false;
    bool undirected = false;
    std::optional<std::string> output;
    OutputFormat format = OutputFormat::json;
};

/// Parses argv and runs one command. Results go to `out` (or the -o file), single-line
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgk::cli
