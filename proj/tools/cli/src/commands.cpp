#include "commands.hpp"

#include <binowords/error.hpp>
#include <binowords/morphism.hpp>
#include <binowords/rauzy.hpp>
#include <binowords/tm_structure.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace binowords::cli {

Morphism load_morphism(const std::string& ref) {
    if (std::filesystem::is_regular_file(ref)) {
        std::ifstream in(ref);
        std::stringstream text;
        text << in.rdbuf();
        return Morphism::parse(text.str());
    }
    if (ref.find("->") != std::string::npos) return Morphism::parse_inline(ref);
    return builtin_morphism(ref);
}

std::string render_profile(const ComplexityProfile& p, bool json, bool timestamp) {
    if (json) {
        auto j = p.to_json();
        j["meta"] = meta_json(timestamp);
        return j.dump(2) + "\n";
    }
    return header_line(timestamp) + "\n# " + p.kind_name() + " complexity of " + p.generator_id + "\n" + p.to_csv();
}

void Commands::attach(CLI::App& app) {
    auto add = [&](const char* name, const char* help, int (Commands::*fn)()) {
        auto* sub = app.add_subcommand(name, help);
        handlers_.emplace_back(sub, fn);
        return sub;
    };

    auto* gen = add("generate", "Print a prefix of an infinite word", &Commands::generate);
    gen->add_option("spec", spec_, "Generator spec, e.g. tm, fib, sturmian:1,2, image(tm^2, fib)")->required();
    gen->add_option("n", n_, "Prefix length")->required();

    auto* cx = add("complexity", "Tabulate a complexity function", &Commands::complexity);
    cx->add_option("spec", spec_, "Generator spec")->required();
    cx->add_flag("--factor", factor_, "Factor complexity");
    cx->add_flag("--abelian", abelian_, "Abelian complexity");
    cx->add_option("--binomial", k_, "k-binomial complexity for this k")->check(CLI::Range(1u, 64u));
    cx->add_option("--n-max", n_max_, "Largest length")->required();
    cx->add_option("--n-min", n_min_, "Smallest length");
    cx->add_flag("--csv", csv_, "CSV output (default)");
    cx->add_flag("--json", json_, "JSON output");
    cx->add_option("-o,--output", output_, "Output file (default stdout)");

    auto* cl = add("classes", "List the k-binomial classes of the length-n factors", &Commands::classes);
    cl->add_option("spec", spec_, "Generator spec")->required();
    cl->add_option("-k,--k", k_, "Equivalence order")->required()->check(CLI::Range(1u, 64u));
    cl->add_option("-n,--n", n_, "Factor length")->required();
    cl->add_flag("--members", members_, "List every member, not only representatives");
    cl->add_flag("--json", json_, "JSON output");
    cl->add_option("-o,--output", output_, "Output file (default stdout)");

    auto* rz = add("rauzy", "Export the abelian Rauzy graph of order n", &Commands::rauzy);
    rz->add_option("spec", spec_, "Generator spec")->required();
    rz->add_option("n", n_, "Order")->required()->check(CLI::PositiveNumber);
    rz->add_flag("--dot", dot_, "Graphviz output (default)");
    rz->add_flag("--json", json_, "JSON output");
    rz->add_flag("--quotients", quotients_, "Include the X, Y_L, Y_R counts (binary words)");
    rz->add_option("-o,--output", output_, "Output file (default stdout)");

    auto* mo = add("morphism", "Classify a morphism", &Commands::morphism);
    mo->add_option("morphism", spec_, "Inline rules (\"0->01, 1->10\"), a builtin name or a rules file")->required();
    mo->add_option("--power", power_, "Classify f^j instead")->check(CLI::Range(1u, 64u));
    mo->add_flag("--json", json_, "JSON output");

    auto* fa = add("factorize", "List the phi^j-factorizations of a binary word", &Commands::factorize);
    fa->add_option("word", word_, "Binary word")->required();
    fa->add_option("-j,--j", power_, "Exponent j")->check(CLI::Range(1u, 30u));
    fa->add_flag("--json", json_, "JSON output");

    auto* de = add("decode", "Split a prefix of phi^k(y) as u . phi^k(y') . r", &Commands::decode);
    de->add_option("spec", spec_, "Generator spec of the image word");
    de->add_option("--word", word_, "Decode this binary word instead of a generator prefix");
    de->add_option("-k,--k", k_, "Exponent k")->required()->check(CLI::Range(1u, 30u));
    de->add_option("--length", length_, "Prefix length (default 2^(k+3))");
    de->add_flag("--all", members_, "Print every valid split");
    de->add_flag("--json", json_, "JSON output");

    auto* ve = add("verify", "Run property and oracle suites", &Commands::verify);
    ve->add_option("suite", suite_, "Suite name, or all (default)");
    ve->add_flag("--quick", quick_, "Small bounds (default)");
    ve->add_flag("--full", full_, "Acceptance bounds");
    ve->add_flag("--list", list_, "List suites and exit");

    auto* ba = add("batch", "Run the tasks of an experiment config file", &Commands::batch);
    ba->add_option("config", spec_, "Config file")->required()->check(CLI::ExistingFile);
    ba->add_option("--jobs", jobs_, "Tasks run at once (default: all cores)");
}

int Commands::dispatch() {
    for (auto& [sub, fn] : handlers_)
        if (sub->parsed()) return (this->*fn)();
    throw ParseError("no subcommand");
}

int Commands::generate() {
    auto gen = parse_generator(spec_);
    out_ << gen.prefix(n_).str() << '\n';
    return exit_ok;
}

int Commands::complexity() {
    const int kinds = int(factor_) + int(abelian_) + int(k_ > 0);
    if (kinds != 1) throw ParseError("choose exactly one of --factor, --abelian, --binomial K");
    if (csv_ && json_) throw ParseError("--csv and --json are exclusive");
    if (n_min_ > n_max_) throw ParseError("--n-min exceeds --n-max");
    ComplexityEngine engine(parse_generator(spec_), common_.engine);
    ComplexityProfile p = factor_    ? engine.factor_complexity(n_max_, n_min_)
                          : abelian_ ? engine.abelian_complexity(n_max_, n_min_)
                                     : engine.binomial_complexity(k_, n_max_, n_min_);
    emit(out_, output_, render_profile(p, json_, common_.timestamp));
    return exit_ok;
}

int Commands::classes() {
    auto gen = parse_generator(spec_);
    ComplexityEngine engine(gen, common_.engine);
    auto cls = engine.classes(k_, n_);
    std::ostringstream text;
    if (json_) {
        nlohmann::json j{{"meta", meta_json(common_.timestamp)}, {"generator_id", gen.id()}, {"k", k_}, {"n", n_}, {"class_count", cls.size()}};
        auto arr = nlohmann::json::array();
        for (const auto& c : cls) {
            nlohmann::json e{{"size", c.size()}, {"representative", c.front().str()}};
            if (members_) {
                auto m = nlohmann::json::array();
                for (const auto& w : c) m.push_back(w.str());
                e["members"] = m;
            }
            arr.push_back(e);
        }
        j["classes"] = arr;
        text << j.dump(2) << '\n';
    } else {
        text << header_line(common_.timestamp) << '\n';
        text << "# " << cls.size() << " classes of ~_" << k_ << " among the length-" << n_ << " factors of " << gen.id() << '\n';
        text << "representative,size" << (members_ ? ",members" : "") << '\n';
        for (const auto& c : cls) {
            text << c.front().str() << ',' << c.size();
            if (members_) {
                text << ',';
                for (std::size_t i = 0; i < c.size(); ++i) text << (i ? " " : "") << c[i].str();
            }
            text << '\n';
        }
    }
    emit(out_, output_, text.str());
    return exit_ok;
}

int Commands::rauzy() {
    if (dot_ && json_) throw ParseError("--dot and --json are exclusive");
    auto gen = parse_generator(spec_);
    ComplexityEngine engine(gen, common_.engine);
    auto g = build_graph(engine, n_);
    std::string text;
    if (json_) {
        auto j = g.to_json();
        j["generator_id"] = gen.id();
        j["meta"] = meta_json(common_.timestamp);
        if (quotients_) j["quotients"] = edge_quotients(engine, n_).to_json();
        text = j.dump(2) + "\n";
    } else {
        text = header_line(common_.timestamp) + "\n# abelian Rauzy graph of order " + std::to_string(n_) + " of " + gen.id() + "\n";
        if (quotients_) {
            auto q = edge_quotients(engine, n_);
            text += "# #X = " + std::to_string(q.x_count) + ", #Y_L = " + std::to_string(q.yl_count) + ", #Y_R = " + std::to_string(q.yr_count) +
                    ", #Y = " + std::to_string(q.y_count) + "\n";
        }
        text += g.to_dot();
    }
    emit(out_, output_, text);
    return exit_ok;
}

int Commands::morphism() {
    const Morphism base = load_morphism(spec_);
    const Morphism f = power_ == 1 ? base : power(base, power_);
    const auto c = classify(f);
    const auto m = f.adjacency_matrix();
    if (json_) {
        nlohmann::json j{{"rules", f.to_text()},
                         {"source", f.source().symbols()},
                         {"target", f.target().symbols()},
                         {"adjacency_matrix", m},
                         {"rank", c.rank},
                         {"parikh_constant", c.is_parikh_constant},
                         {"parikh_collinear", c.is_parikh_collinear},
                         {"totally_erasing", c.is_totally_erasing}};
        j["prolongable_on"] = c.is_prolongable_on ? nlohmann::json(std::string(1, *c.is_prolongable_on)) : nlohmann::json(nullptr);
        out_ << j.dump(2) << '\n';
        return exit_ok;
    }
    out_ << f.to_text();
    if (!f.to_text().empty() && f.to_text().back() != '\n') out_ << '\n';
    out_ << "source alphabet: " << f.source().symbols() << "\ntarget alphabet: " << f.target().symbols() << "\nadjacency matrix:\n";
    for (std::size_t r = 0; r < m.size(); ++r) {
        out_ << "  " << f.target().symbol(static_cast<Letter>(r)) << ":";
        for (auto v : m[r]) out_ << ' ' << v;
        out_ << '\n';
    }
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out_ << "rank: " << c.rank << "\nParikh-constant: " << yes(c.is_parikh_constant) << "\nParikh-collinear: " << yes(c.is_parikh_collinear)
         << "\ntotally erasing: " << yes(c.is_totally_erasing) << "\nprolongable on: " << (c.is_prolongable_on ? std::string(1, *c.is_prolongable_on) : "none")
         << '\n';
    return exit_ok;
}

int Commands::factorize() {
    const auto u = FiniteWord::binary(word_);
    const auto fs = phi_factorizations(u, power_);
    const char* status = fs.status == FactorizationStatus::none ? "none" : fs.status == FactorizationStatus::unique ? "unique" : "two";
    std::vector<FactorizationClass> classes;
    if (power_ == 1 && !fs.items.empty()) classes = classify_factor(u);
    if (json_) {
        nlohmann::json j{{"word", word_}, {"j", power_}, {"status", status}};
        auto arr = nlohmann::json::array();
        for (const auto& f : fs.items)
            arr.push_back({{"p", f.p.str()}, {"core", f.core.str()}, {"s", f.s.str()}, {"ancestor", f.ancestor.str()}});
        j["factorizations"] = arr;
        if (fs.status == FactorizationStatus::two) j["expected_shape"] = fs.expected_shape;
        if (!classes.empty()) {
            auto cl = nlohmann::json::array();
            for (const auto& c : classes) cl.push_back(c.str());
            j["classes"] = cl;
        }
        out_ << j.dump(2) << '\n';
        return exit_ok;
    }
    out_ << "status: " << status << '\n';
    for (const auto& f : fs.items) out_ << "  " << f.str() << '\n';
    if (fs.status == FactorizationStatus::two) out_ << "expected shape: " << (fs.expected_shape ? "yes" : "no") << '\n';
    if (!classes.empty()) {
        out_ << "classes:";
        for (const auto& c : classes) out_ << ' ' << c.str();
        out_ << '\n';
    }
    return exit_ok;
}

int Commands::decode() {
    if (spec_.empty() == word_.empty()) throw ParseError("give either a generator spec or --word");
    FiniteWord x;
    if (!word_.empty()) {
        x = FiniteWord::binary(word_);
    } else {
        const std::size_t len = length_ ? length_ : std::size_t{1} << (k_ + 3);
        x = parse_generator(spec_).prefix(len);
    }
    std::vector<TmDecoding> all = members_ ? tm_decode_all(x, k_) : std::vector<TmDecoding>{tm_decode(x, k_)};
    if (all.empty()) throw DecodeError("not a phi^" + std::to_string(k_) + "-image suffix: no offset decodes the prefix");
    if (json_) {
        auto arr = nlohmann::json::array();
        for (const auto& d : all) arr.push_back({{"u", d.u.str()}, {"y_prefix", d.y_prefix.str()}, {"remainder", d.remainder.str()}});
        out_ << nlohmann::json{{"k", k_}, {"length", x.size()}, {"decodings", arr}}.dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& d : all)
        out_ << "u=" << (d.u.empty() ? "e" : d.u.str()) << " y=" << d.y_prefix.str() << " r=" << (d.remainder.empty() ? "e" : d.remainder.str()) << '\n';
    return exit_ok;
}

int Commands::verify() {
    if (list_) {
        for (const auto& s : suites()) out_ << s.name << "  " << s.description << '\n';
        return exit_ok;
    }
    if (quick_ && full_) throw ParseError("--quick and --full are exclusive");
    const Scale scale = full_ ? Scale::full : Scale::quick;
    std::vector<std::string> names;
    if (suite_.empty() || suite_ == "all") {
        for (const auto& s : suites()) names.push_back(s.name);
    } else {
        if (!has_suite(suite_)) throw ParseError("unknown suite \"" + suite_ + "\"; see verify --list");
        names.push_back(suite_);
    }
    std::size_t failed = 0;
    for (const auto& name : names) {
        auto report = run_suite(name, scale, common_.engine);
        out_ << report.text() << std::flush;
        failed += !report.passed();
    }
    if (names.size() > 1) out_ << (names.size() - failed) << " of " << names.size() << " suites passed\n";
    return failed ? exit_verification_failed : exit_ok;
}

int Commands::batch() {
    std::ifstream in(spec_);
    std::stringstream text;
    text << in.rdbuf();
    auto config = parse_config(text.str());
    // relative output directories are taken from the config file's location
    if (config.output.is_relative()) config.output = std::filesystem::path(spec_).parent_path() / config.output;
    auto outcomes = run_batch(config, common_, jobs_);
    int worst = exit_ok;
    for (const auto& o : outcomes) {
        out_ << "[" << (o.code == exit_ok ? "ok" : "FAIL") << "] " << o.name << '\n' << o.log;
        for (const auto& f : o.files) out_ << "  wrote " << f.string() << '\n';
        worst = std::max(worst, o.code);
    }
    return worst;
}

} // namespace binowords::cli
