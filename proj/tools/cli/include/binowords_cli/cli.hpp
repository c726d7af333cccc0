#pragma once

#include <binowords/complexity.hpp>

#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace binowords::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_stabilization = 3,
    exit_other = 4,
};

/// Runs the command line. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Options shared by every command that touches an infinite word.
struct CommonOptions {
    EngineOptions engine;
    bool timestamp = true;
};

/// Prefix cap from BINOWORDS_PREFIX_CAP, or the library default when unset.
std::size_t prefix_cap_from_env();

/// "# binowords <version>[, generated <UTC time>]"
std::string header_line(bool timestamp);

/// Writes to a temporary sibling file and renames it over path.
void write_atomic(const std::filesystem::path& path, std::string_view content);

struct TaskConfig {
    std::string name;
    std::string type; ///< complexity, rauzy, verify or decode
    std::string generator;
    std::map<std::string, std::string> values;
    std::size_t line = 0;

    std::string get(const std::string& key, const std::string& fallback = "") const;
    std::size_t get_size(const std::string& key, std::size_t fallback) const;
    bool has(const std::string& key) const { return values.count(key) > 0; }
};

/// Flat key = value text with [task] sections; see README for the keys.
struct ExperimentConfig {
    std::map<std::string, std::string> generators; ///< name -> generator spec; "default" for the bare key
    std::filesystem::path output = ".";
    std::vector<std::string> formats{"csv", "json"};
    std::size_t n_cap = 4096;
    std::vector<TaskConfig> tasks;

    bool wants(std::string_view format) const;
};

/// Throws ParseError with a line number on malformed or inconsistent input.
ExperimentConfig parse_config(std::string_view text);

struct TaskOutcome {
    std::string name;
    int code = exit_ok;
    std::string log;
    std::vector<std::filesystem::path> files;
};

/// Runs every task, up to jobs at a time; outcomes come back in task order.
std::vector<TaskOutcome> run_batch(const ExperimentConfig& config, const CommonOptions& common, unsigned jobs);

} // namespace binowords::cli
