#pragma once

#include <binowords/complexity.hpp>
#include <binowords/generators.hpp>
#include <binowords/morphism.hpp>
#include <binowords/rauzy.hpp>
#include <binowords/signature.hpp>
#include <binowords/tm_structure.hpp>
#include <binowords/verify.hpp>

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace binowords::detail {

struct SuiteContext {
    SuiteReport& report;
    Scale scale;
    EngineOptions options;

    bool full() const noexcept { return scale == Scale::full; }
    template <class T>
    T pick(T quick, T full_value) const { return full() ? full_value : quick; }

    void check(std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

/// Counts instances of one property and keeps the first counterexample.
class Tally {
public:
    Tally(SuiteContext& ctx, std::string name) : ctx_(ctx), name_(std::move(name)) {}
    Tally(const Tally&) = delete;
    ~Tally() { finish(); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++count_;
        if (!ok && failures_++ == 0) first_ = describe();
    }
    void finish() {
        if (done_) return;
        done_ = true;
        if (failures_ == 0)
            ctx_.check(name_, true, std::to_string(count_) + " instances");
        else
            ctx_.check(name_, false, std::to_string(failures_) + " of " + std::to_string(count_) + " failed; first: " + first_);
    }

private:
    SuiteContext& ctx_;
    std::string name_;
    std::size_t count_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
    bool done_ = false;
};

using SuiteFn = std::function<void(SuiteContext&)>;

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn run;
};

void register_word_suites(std::vector<SuiteEntry>& out);
void register_structure_suites(std::vector<SuiteEntry>& out);
void register_complexity_suites(std::vector<SuiteEntry>& out);

// helpers shared by the suite files

FiniteWord random_word(std::mt19937_64& rng, std::size_t len, const Alphabet& alphabet = Alphabet::binary());
/// All words of length len over the alphabet, in lexicographic order.
std::vector<FiniteWord> all_words(std::size_t len, const Alphabet& alphabet = Alphabet::binary());
/// Subword count by enumerating index subsets.
BigInt naive_binomial(const FiniteWord& u, const FiniteWord& w);
std::string join_values(const std::vector<std::size_t>& v, std::size_t limit = 12);
/// Profiles of every generator over a range, compared to an expected function.
std::string profile_mismatch(const ComplexityProfile& p, const std::function<std::uint64_t(std::size_t)>& expected);

} // namespace binowords::detail
