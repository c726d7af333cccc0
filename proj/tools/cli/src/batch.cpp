#include "commands.hpp"

#include <binowords/error.hpp>
#include <binowords/rauzy.hpp>
#include <binowords/tm_structure.hpp>

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace binowords::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("config line " + std::to_string(line) + ": " + what);
}

std::size_t parse_size(std::size_t line, const std::string& key, const std::string& value) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (value.empty() || used != value.size()) fail(line, key + " must be a nonnegative integer, got \"" + value + "\"");
    return static_cast<std::size_t>(v);
}

const std::map<std::string, std::set<std::string>> task_keys = {
    {"complexity", {"name", "type", "generator", "kind", "k", "n_min", "n_max"}},
    {"rauzy", {"name", "type", "generator", "n_min", "n_max", "quotients"}},
    {"verify", {"name", "type", "suite", "scale"}},
    {"decode", {"name", "type", "generator", "k", "length"}},
};

void validate_task(const ExperimentConfig& config, TaskConfig& t) {
    if (t.type.empty()) fail(t.line, "task without a type");
    auto keys = task_keys.find(t.type);
    if (keys == task_keys.end()) fail(t.line, "unknown task type \"" + t.type + "\"");
    for (const auto& [key, value] : t.values)
        if (!keys->second.count(key)) fail(t.line, "key \"" + key + "\" is not valid for a " + t.type + " task");
    if (t.type != "verify") {
        if (t.generator.empty()) t.generator = "default";
        if (!config.generators.count(t.generator)) fail(t.line, "task refers to undefined generator \"" + t.generator + "\"");
    }
    if (t.has("n_max") || t.type == "complexity" || t.type == "rauzy") {
        const auto n_max = parse_size(t.line, "n_max", t.get("n_max"));
        const auto n_min = parse_size(t.line, "n_min", t.get("n_min", t.type == "rauzy" ? "1" : "0"));
        if (n_max > config.n_cap) fail(t.line, "n_max " + std::to_string(n_max) + " exceeds n_cap " + std::to_string(config.n_cap));
        if (n_min > n_max) fail(t.line, "n_min exceeds n_max");
        if (t.type == "rauzy" && n_min == 0) fail(t.line, "rauzy orders start at 1");
    }
    if (t.type == "complexity") {
        const auto kind = t.get("kind");
        if (kind != "factor" && kind != "abelian" && kind != "binomial") fail(t.line, "kind must be factor, abelian or binomial");
        if ((kind == "binomial") != t.has("k")) fail(t.line, "k is required exactly when kind = binomial");
        if (t.has("k") && parse_size(t.line, "k", t.get("k")) == 0) fail(t.line, "k must be positive");
    }
    if (t.type == "verify") {
        if (!has_suite(t.get("suite"))) fail(t.line, "unknown suite \"" + t.get("suite") + "\"");
        const auto scale = t.get("scale", "quick");
        if (scale != "quick" && scale != "full") fail(t.line, "scale must be quick or full");
    }
    if (t.type == "decode") {
        const auto k = parse_size(t.line, "k", t.get("k"));
        if (k == 0 || k > 30) fail(t.line, "k must lie in 1..30");
        const auto len = parse_size(t.line, "length", t.get("length", std::to_string(std::size_t{1} << (k + 3))));
        if (len > config.n_cap) fail(t.line, "length exceeds n_cap");
    }
}

struct Ctx {
    const ExperimentConfig& config;
    const CommonOptions& common;
    TaskOutcome& outcome;
    std::ostringstream log;

    void write(const std::string& file, const std::string& content) {
        auto path = config.output / file;
        write_atomic(path, content);
        outcome.files.push_back(path);
    }
};

void run_complexity(Ctx& c, const TaskConfig& t) {
    ComplexityEngine engine(parse_generator(c.config.generators.at(t.generator)), c.common.engine);
    const auto n_max = t.get_size("n_max", 0), n_min = t.get_size("n_min", 0);
    const auto kind = t.get("kind");
    ComplexityProfile p = kind == "factor"    ? engine.factor_complexity(n_max, n_min)
                          : kind == "abelian" ? engine.abelian_complexity(n_max, n_min)
                                              : engine.binomial_complexity(static_cast<unsigned>(t.get_size("k", 1)), n_max, n_min);
    c.log << "  " << p.kind_name() << " complexity of " << p.generator_id << " on [" << n_min << ", "
          << n_max << "]\n";
    if (c.config.wants("csv")) c.write(t.name + ".csv", render_profile(p, false, c.common.timestamp));
    if (c.config.wants("json")) c.write(t.name + ".json", render_profile(p, true, c.common.timestamp));
}

void run_rauzy(Ctx& c, const TaskConfig& t) {
    auto gen = parse_generator(c.config.generators.at(t.generator));
    ComplexityEngine engine(gen, c.common.engine);
    const auto n_max = t.get_size("n_max", 1), n_min = t.get_size("n_min", 1);
    const bool quotients = t.get("quotients", "false") == "true";
    auto graphs = nlohmann::json::array();
    for (std::size_t n = n_min; n <= n_max; ++n) {
        auto g = build_graph(engine, n);
        c.log << "  G_" << n << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
        if (c.config.wants("dot")) c.write(t.name + "-n" + std::to_string(n) + ".dot", header_line(c.common.timestamp) + "\n" + g.to_dot());
        auto j = g.to_json();
        if (quotients) j["quotients"] = edge_quotients(engine, n).to_json();
        graphs.push_back(j);
    }
    if (c.config.wants("json") || !c.config.wants("dot"))
        c.write(t.name + ".json", nlohmann::json{{"meta", meta_json(c.common.timestamp)}, {"generator_id", gen.id()}, {"graphs", graphs}}.dump(2) + "\n");
}

int run_verify(Ctx& c, const TaskConfig& t) {
    const Scale scale = t.get("scale", "quick") == "full" ? Scale::full : Scale::quick;
    auto report = run_suite(t.get("suite"), scale, c.common.engine);
    c.log << "  suite " << report.name << ": " << (report.passed() ? "passed" : "FAILED") << '\n';
    c.write(t.name + ".txt", report.text());
    if (c.config.wants("json")) {
        auto checks = nlohmann::json::array();
        for (const auto& r : report.checks) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        c.write(t.name + ".json", nlohmann::json{{"meta", meta_json(c.common.timestamp)},
                                                 {"suite", report.name},
                                                 {"scale", scale == Scale::full ? "full" : "quick"},
                                                 {"passed", report.passed()},
                                                 {"checks", checks}}
                                          .dump(2) +
                                      "\n");
    }
    return report.passed() ? exit_ok : exit_verification_failed;
}

void run_decode(Ctx& c, const TaskConfig& t) {
    const auto k = static_cast<unsigned>(t.get_size("k", 1));
    const auto len = t.get_size("length", std::size_t{1} << (k + 3));
    auto x = parse_generator(c.config.generators.at(t.generator)).prefix(len);
    auto d = tm_decode(x, k);
    c.log << "  u=" << (d.u.empty() ? "e" : d.u.str()) << " y=" << d.y_prefix.str() << '\n';
    c.write(t.name + ".json", nlohmann::json{{"meta", meta_json(c.common.timestamp)},
                                             {"k", k},
                                             {"length", len},
                                             {"u", d.u.str()},
                                             {"y_prefix", d.y_prefix.str()},
                                             {"remainder", d.remainder.str()}}
                                      .dump(2) +
                                  "\n");
}

TaskOutcome run_task(const ExperimentConfig& config, const CommonOptions& common, const TaskConfig& t) {
    TaskOutcome outcome;
    outcome.name = t.name;
    Ctx c{config, common, outcome, {}};
    try {
        if (t.type == "complexity") run_complexity(c, t);
        if (t.type == "rauzy") run_rauzy(c, t);
        if (t.type == "verify") outcome.code = run_verify(c, t);
        if (t.type == "decode") run_decode(c, t);
    } catch (const ParseError& e) {
        outcome.code = exit_usage;
        c.log << "  usage error: " << e.what() << '\n';
    } catch (const StabilizationError& e) {
        outcome.code = exit_stabilization;
        c.log << "  stabilization failure: " << e.what() << '\n';
    } catch (const IdentityViolation& e) {
        outcome.code = exit_verification_failed;
        c.log << "  identity violated: " << e.what() << '\n';
    } catch (const std::exception& e) {
        outcome.code = exit_other;
        c.log << "  error: " << e.what() << '\n';
    }
    outcome.log = c.log.str();
    return outcome;
}

} // namespace

std::string TaskConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

std::size_t TaskConfig::get_size(const std::string& key, std::size_t fallback) const {
    return has(key) ? parse_size(line, key, get(key)) : fallback;
}

bool ExperimentConfig::wants(std::string_view format) const {
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    TaskConfig* task = nullptr;
    std::vector<std::size_t> generator_lines;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s != "[task]") fail(line, "unknown section " + s);
            config.tasks.emplace_back();
            task = &config.tasks.back();
            task->line = line;
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected key = value");
        const std::string key = trim(s.substr(0, eq)), value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (task) {
            if (task->values.count(key)) fail(line, "duplicate key \"" + key + "\"");
            task->values[key] = value;
            if (key == "name") task->name = value;
            if (key == "type") task->type = value;
            if (key == "generator") task->generator = value;
            continue;
        }
        if (key == "generator" || key.rfind("generator.", 0) == 0) {
            const std::string name = key == "generator" ? "default" : key.substr(10);
            if (name.empty()) fail(line, "empty generator name");
            if (config.generators.count(name)) fail(line, "generator \"" + name + "\" defined twice");
            try {
                parse_generator(value);
            } catch (const ParseError& e) {
                fail(line, e.what());
            }
            config.generators[name] = value;
        } else if (key == "output") {
            config.output = value;
        } else if (key == "formats") {
            config.formats.clear();
            std::istringstream list(value);
            std::string f;
            while (std::getline(list, f, ',')) {
                f = trim(f);
                if (f != "csv" && f != "json" && f != "dot") fail(line, "unknown format \"" + f + "\"");
                config.formats.push_back(f);
            }
        } else if (key == "n_cap") {
            config.n_cap = parse_size(line, key, value);
        } else {
            fail(line, "unknown key \"" + key + "\"");
        }
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < config.tasks.size(); ++i) {
        auto& t = config.tasks[i];
        validate_task(config, t);
        if (t.name.empty()) t.name = "task" + std::to_string(i + 1) + "-" + t.type;
        if (t.name.find_first_of("/\\") != std::string::npos) fail(t.line, "task names cannot contain path separators");
        if (!names.insert(t.name).second) fail(t.line, "duplicate task name \"" + t.name + "\"");
    }
    if (config.tasks.empty()) throw ParseError("config defines no [task] sections");
    return config;
}

std::vector<TaskOutcome> run_batch(const ExperimentConfig& config, const CommonOptions& common, unsigned jobs) {
    std::vector<TaskOutcome> outcomes(config.tasks.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(config.tasks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < config.tasks.size();) outcomes[i] = run_task(config, common, config.tasks[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return outcomes;
}

} // namespace binowords::cli
