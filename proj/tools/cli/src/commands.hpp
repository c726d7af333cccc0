#pragma once

#include <binowords_cli/cli.hpp>

#include <binowords/generators.hpp>
#include <binowords/verify.hpp>

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace CLI {
class App;
}

namespace binowords::cli {

std::string utc_now();
/// {"tool", "version", "generated_at"?}
nlohmann::json meta_json(bool timestamp);
/// Writes content to path, or to out when path is empty or "-".
void emit(std::ostream& out, const std::string& path, const std::string& content);

/// A morphism given inline ("0->01, 1->10"), by builtin name, or as a file path.
Morphism load_morphism(const std::string& ref);

/// Profile as CSV with a header comment, or as JSON with a meta object.
std::string render_profile(const ComplexityProfile& p, bool json, bool timestamp);

/// Subcommand options and their handlers.
class Commands {
public:
    Commands(std::ostream& out, std::ostream& err, CommonOptions& common) : out_(out), err_(err), common_(common) {}
    void attach(CLI::App& app);
    int dispatch();

private:
    int generate();
    int complexity();
    int classes();
    int rauzy();
    int morphism();
    int factorize();
    int decode();
    int verify();
    int batch();

    std::ostream& out_;
    std::ostream& err_;
    CommonOptions& common_;
    std::vector<std::pair<CLI::App*, int (Commands::*)()>> handlers_;

    std::string spec_;
    std::string suite_;
    std::string output_;
    std::size_t n_ = 0;
    std::size_t n_min_ = 0;
    std::size_t n_max_ = 0;
    unsigned k_ = 0;
    bool factor_ = false;
    bool abelian_ = false;
    bool csv_ = false;
    bool json_ = false;
    bool dot_ = false;
    bool members_ = false;
    bool quotients_ = false;
    unsigned power_ = 1;
    std::string word_;
    std::size_t length_ = 0;
    bool quick_ = false;
    bool full_ = false;
    bool list_ = false;
    unsigned jobs_ = 0;
};

} // namespace binowords::cli
