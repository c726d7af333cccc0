#include <binowords/verify.hpp>

#include "verify_detail.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace binowords {

namespace {

const std::vector<detail::SuiteEntry>& registry() {
    static const std::vector<detail::SuiteEntry> entries = [] {
        std::vector<detail::SuiteEntry> out;
        detail::register_word_suites(out);
        detail::register_structure_suites(out);
        detail::register_complexity_suites(out);
        return out;
    }();
    return entries;
}

} // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::text() const {
    std::ostringstream out;
    out << "suite " << name << " (" << (scale == Scale::full ? "full" : "quick") << ")\n";
    for (const auto& c : checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", seconds);
    out << "  " << (passed() ? "ok" : "FAILED") << " in " << buf << " s\n";
    return out.str();
}

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

bool has_suite(std::string_view name) {
    const auto& r = registry();
    return std::any_of(r.begin(), r.end(), [&](const auto& e) { return e.info.name == name; });
}

SuiteReport run_suite(std::string_view name, Scale scale, EngineOptions options) {
    const auto& r = registry();
    auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.info.name == name; });
    if (it == r.end()) throw PreconditionError("unknown suite '" + std::string(name) + "'");

    SuiteReport report;
    report.name = std::string(name);
    report.scale = scale;
    detail::SuiteContext ctx{report, scale, options};
    auto start = std::chrono::steady_clock::now();
    try {
        it->run(ctx);
    } catch (const std::exception& e) {
        report.checks.push_back({"exception", false, e.what()});
    }
    if (report.checks.empty()) report.checks.push_back({"no checks", false, "suite ran no checks"});
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace detail {

FiniteWord random_word(std::mt19937_64& rng, std::size_t len, const Alphabet& alphabet) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(alphabet.size()) - 1);
    std::vector<Letter> letters(len);
    for (auto& c : letters) c = static_cast<Letter>(d(rng));
    return FiniteWord(alphabet, std::move(letters));
}

std::vector<FiniteWord> all_words(std::size_t len, const Alphabet& alphabet) {
    std::vector<FiniteWord> out;
    std::vector<Letter> cur(len, 0);
    const auto a = static_cast<Letter>(alphabet.size());
    while (true) {
        out.emplace_back(alphabet, cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] + 1 == a) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

BigInt naive_binomial(const FiniteWord& u, const FiniteWord& w) {
    const std::size_t n = u.size();
    const std::size_t m = w.size();
    BigInt total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m) continue;
        std::size_t t = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (mask >> i & 1) ok = u[i] == w[t++];
        if (ok) ++total;
    }
    return total;
}

std::string join_values(const std::vector<std::size_t>& v, std::size_t limit) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    if (v.size() > limit) out += ",...";
    return out;
}

std::string profile_mismatch(const ComplexityProfile& p, const std::function<std::uint64_t(std::size_t)>& expected) {
    for (std::size_t n = p.n_min; n <= p.n_max(); ++n) {
        auto want = expected(n);
        if (p.at(n) != want)
            return "n=" + std::to_string(n) + " got " + std::to_string(p.at(n)) + " expected " + std::to_string(want);
    }
    return {};
}

} // namespace detail
} // namespace binowords
