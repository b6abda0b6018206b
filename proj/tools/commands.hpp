#pragma once

// Subcommand implementations for the `fracon` CLI, separated from argument
// parsing so they can be exercised directly from tests.
//
// Exit codes: 0 success / certified, 1 condition failure, 2 input or I/O error.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace fracon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConditionFailure = 1;
inline constexpr int kExitInputError = 2;

int cmd_check(const std::string& config_path, std::ostream& out, std::ostream& err);

struct RunOptions {
    std::string config_path;
    std::string output_path;
    std::optional<std::string> dense_path;
    std::optional<std::size_t> memory_window;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

int cmd_compare(const std::string& config_path, const std::string& output_path, std::ostream& out,
                std::ostream& err);

int cmd_paper_scenario(std::ostream& out);

}  // namespace fracon::cli
