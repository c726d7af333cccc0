#include <binowords_cli/cli.hpp>

#include <binowords/error.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace binowords;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "binowords");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("binowords-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, Generate) {
    auto r = invoke({"generate", "tm", "8"});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out, "01101001\n");
    EXPECT_EQ(invoke({"generate", "fib", "19"}).out, "0100101001001010010\n");
}

TEST(Cli, ComplexityCsvRows) {
    auto r = invoke({"--no-timestamp", "complexity", "tm", "--binomial", "2", "--n-max", "8"});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    EXPECT_EQ(r.out.rfind("# binowords", 0), 0u);
    EXPECT_NE(r.out.find("\n8,9,"), std::string::npos);
    EXPECT_NE(r.out.find("\n3,6,"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicWithoutTimestamp) {
    const std::vector<std::string> args = {"--no-timestamp", "complexity", "fib", "--binomial", "2", "--n-max", "20", "--json"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    EXPECT_EQ(invoke(args).out.find("generated_at"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"generate", "nope", "5"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"verify", "no-such-suite"}).code, cli::exit_usage);
    EXPECT_EQ(invoke({"--prefix-cap", "64", "complexity", "champ", "--factor", "--n-max", "12"}).code, cli::exit_stabilization);
    EXPECT_EQ(invoke({"decode", "champ", "-k", "2"}).code, cli::exit_other);
    EXPECT_EQ(invoke({"verify", "ochsenschlager", "--quick"}).code, cli::exit_ok);
}

TEST(Cli, EnvPrefixCap) {
    ::setenv("BINOWORDS_PREFIX_CAP", "abc", 1);
    EXPECT_THROW((void)cli::prefix_cap_from_env(), ParseError);
    EXPECT_EQ(invoke({"generate", "tm", "4"}).code, cli::exit_usage);
    ::setenv("BINOWORDS_PREFIX_CAP", "4096", 1);
    EXPECT_EQ(cli::prefix_cap_from_env(), 4096u);
    ::unsetenv("BINOWORDS_PREFIX_CAP");
    EXPECT_EQ(cli::prefix_cap_from_env(), default_prefix_cap);
}

TEST(Cli, RauzyDotToFile) {
    const auto dir = scratch("rauzy");
    const auto path = dir / "g.dot";
    auto r = invoke({"rauzy", "tm", "6", "--dot", "-o", path.string()});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err;
    const auto dot = slurp(path);
    EXPECT_EQ(dot.rfind("# binowords", 0), 0u);
    EXPECT_NE(dot.find("\ndigraph"), std::string::npos);
}

TEST(Cli, WriteAtomicReplacesContent) {
    const auto dir = scratch("atomic");
    const auto path = dir / "sub" / "f.txt";
    cli::write_atomic(path, "first");
    cli::write_atomic(path, "second");
    EXPECT_EQ(slurp(path), "second");
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(path.parent_path())) files += e.is_regular_file();
    EXPECT_EQ(files, 1u);
}

TEST(BatchConfig, ParsesTasks) {
    const auto cfg = cli::parse_config(
        "generator = fib\n"
        "generator.t = tm\n"
        "output = out\n"
        "formats = csv, json\n"
        "[task]\nname = a\ntype = complexity\nkind = binomial\nk = 2\nn_max = 10\n"
        "[task]\ntype = rauzy\ngenerator = t\nn_min = 2\nn_max = 3\n");
    ASSERT_EQ(cfg.tasks.size(), 2u);
    EXPECT_EQ(cfg.tasks[0].name, "a");
    EXPECT_EQ(cfg.tasks[1].name, "task2-rauzy");
    EXPECT_TRUE(cfg.wants("csv"));
    EXPECT_TRUE(cfg.wants("json"));
}

TEST(BatchConfig, RejectsBadInput) {
    EXPECT_THROW(cli::parse_config("[task]\ntype = complexity\ngenerator = missing\nn_max = 4\n"), ParseError);
    EXPECT_THROW(cli::parse_config("generator = tm\n[task]\ntype = complexity\nbogus = 1\n"), ParseError);
    EXPECT_THROW(cli::parse_config("generator = tm\n[task]\ntype = teleport\n"), ParseError);
    EXPECT_THROW(cli::parse_config("generator = tm\n[task]\nname = x\ntype = verify\n[task]\nname = x\ntype = verify\n"), ParseError);
    EXPECT_THROW(cli::parse_config("generator = tm\nn_cap = 10\n[task]\ntype = complexity\nn_max = 20\n"), ParseError);
}

TEST(BatchConfig, RunsAndWritesFiles) {
    const auto dir = scratch("batch");
    const auto cfg_path = dir / "exp.cfg";
    std::ofstream(cfg_path) << "generator = tm\noutput = results\nformats = csv\n"
                               "[task]\nname = tm2\ntype = complexity\nkind = binomial\nk = 2\nn_max = 16\n"
                               "[task]\nname = ok\ntype = verify\nsuite = ochsenschlager\nscale = quick\n";
    auto r = invoke({"--no-timestamp", "batch", cfg_path.string(), "--jobs", "2"});
    ASSERT_EQ(r.code, cli::exit_ok) << r.err << r.out;
    const auto csv = slurp(dir / "results" / "tm2.csv");
    EXPECT_NE(csv.find("\n8,9,"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(dir / "results" / "ok.txt"));
}
