#include <binowords_cli/cli.hpp>

#include "commands.hpp"

#include <binowords/error.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>

#ifndef BINOWORDS_VERSION
#define BINOWORDS_VERSION "0.0.0"
#endif

namespace binowords::cli {

std::size_t prefix_cap_from_env() {
    const char* raw = std::getenv("BINOWORDS_PREFIX_CAP");
    if (!raw || !*raw) return default_prefix_cap;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string_view(raw).size() || value < 16)
        throw ParseError(std::string("BINOWORDS_PREFIX_CAP must be an integer >= 16, got \"") + raw + "\"");
    return static_cast<std::size_t>(value);
}

std::string header_line(bool timestamp) {
    std::string line = "# binowords " BINOWORDS_VERSION;
    if (timestamp) line += ", generated " + utc_now();
    return line;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json meta_json(bool timestamp) {
    nlohmann::json meta{{"tool", "binowords"}, {"version", BINOWORDS_VERSION}};
    if (timestamp) meta["generated_at"] = utc_now();
    return meta;
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::random_device rd;
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            f.close();
            fs::remove(tmp);
            throw Error("write to " + tmp.string() + " failed");
        }
    }
    fs::rename(tmp, path);
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        out << content;
    else
        write_atomic(path, content);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binomial complexities of infinite words", "binowords"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", BINOWORDS_VERSION);

    CommonOptions common;
    std::size_t prefix_cap = 0;
    bool no_timestamp = false;
    app.add_option("--prefix-cap", prefix_cap, "Longest prefix inspected when extracting factors (overrides BINOWORDS_PREFIX_CAP)")
        ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 40));
    app.add_option("--threads", common.engine.threads, "Worker threads for class counting (0 = all cores)");
    app.add_flag("--no-timestamp", no_timestamp, "Omit the generation time from output headers");

    Commands commands(out, err, common);
    commands.attach(app);

    // CLI11 consumes a reversed argument list without the program name
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        common.engine.prefix_cap = prefix_cap ? prefix_cap : prefix_cap_from_env();
        common.timestamp = !no_timestamp;
        return commands.dispatch();
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const StabilizationError& e) {
        err << "stabilization failure: " << e.what() << '\n';
        return exit_stabilization;
    } catch (const IdentityViolation& e) {
        err << "identity violated: " << e.what() << '\n';
        return exit_verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_other;
    }
}

} // namespace binowords::cli
