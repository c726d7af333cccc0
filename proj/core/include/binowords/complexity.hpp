#pragma once

#include <binowords/factor_index.hpp>
#include <binowords/generators.hpp>
#include <binowords/signature.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace binowords {

struct EngineOptions {
    std::size_t prefix_cap = default_prefix_cap;
    /// Worker threads for per-length class counting; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

enum class ComplexityKind { factor, abelian, binomial };

/// Values of a complexity function on the contiguous range [n_min, n_max].
struct ComplexityProfile {
    ComplexityKind kind = ComplexityKind::factor;
    unsigned k = 0;
    std::string generator_id;
    std::size_t n_min = 0;
    std::vector<std::uint64_t> values;
    std::vector<std::size_t> prefix_used;

    std::size_t n_max() const noexcept { return n_min + values.size() - 1; }
    bool contains(std::size_t n) const noexcept { return n >= n_min && n < n_min + values.size(); }
    std::uint64_t at(std::size_t n) const;
    std::string kind_name() const;
    /// Columns n,value,prefix_used.
    std::string to_csv() const;
    nlohmann::json to_json() const;
};

struct FactorSet {
    std::vector<FiniteWord> words; ///< sorted
    std::size_t prefix_used = 0;
};

/// Complexity computations over one generator, sharing a single factor index.
class ComplexityEngine {
public:
    explicit ComplexityEngine(WordGenerator gen, EngineOptions options = {});

    const WordGenerator& generator() const noexcept { return gen_; }
    const EngineOptions& options() const noexcept { return options_; }

    FactorSet factors(std::size_t n);
    std::uint64_t factor_count(std::size_t n);
    /// Number of ~_k classes among the length-n factors.
    std::uint64_t class_count(unsigned k, std::size_t n);
    /// The ~_k classes of length-n factors, each sorted, ordered by their smallest member.
    std::vector<std::vector<FiniteWord>> classes(unsigned k, std::size_t n);

    ComplexityProfile factor_complexity(std::size_t n_max, std::size_t n_min = 0);
    ComplexityProfile binomial_complexity(unsigned k, std::size_t n_max, std::size_t n_min = 0);
    ComplexityProfile abelian_complexity(std::size_t n_max, std::size_t n_min = 0) {
        auto p = binomial_complexity(1, n_max, n_min);
        p.kind = ComplexityKind::abelian;
        return p;
    }

    /// Stabilized first-occurrence start positions of length-n factors, with the prefix they index into.
    struct Occurrences {
        std::vector<std::size_t> starts;
        std::size_t prefix_used = 0;
    };
    Occurrences occurrences(std::size_t n);
    /// The indexed prefix; spans stay valid until the index grows.
    std::span<const Letter> letters() const noexcept { return index_.letters(); }

private:
    FactorIndex::Stabilized stabilize(std::size_t n);
    std::uint64_t count_classes(unsigned k, std::size_t n, std::size_t length) const;

    WordGenerator gen_;
    EngineOptions options_;
    FactorIndex index_;
    std::mutex mutex_;
};

ComplexityProfile factor_complexity(const WordGenerator& gen, std::size_t n_max, EngineOptions options = {});
ComplexityProfile binomial_complexity(const WordGenerator& gen, unsigned k, std::size_t n_max, EngineOptions options = {});
FactorSet factors(const WordGenerator& gen, std::size_t n, EngineOptions options = {});

/// Number of ~_k classes in an explicit set of equal-length words.
std::uint64_t count_classes(const std::vector<FiniteWord>& words, unsigned k);

/// Factor complexity of the Thue-Morse word.
std::uint64_t tm_factor_formula(std::uint64_t n);
/// j-binomial complexity of the Thue-Morse word.
std::uint64_t tm_binomial_formula(unsigned j, std::uint64_t n);
/// (k+1)-binomial complexity of phi^k(s) for a Sturmian word s.
std::uint64_t sturmian_image_formula(unsigned k, std::uint64_t n);
/// Factor complexity of phi^k(s) for a Sturmian word s.
std::uint64_t sturmian_image_factor_formula(unsigned k, std::uint64_t n);

struct PrecReport {
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::vector<std::size_t> strict;  ///< n with a(n) < b(n)
    std::vector<std::size_t> equal;   ///< n with a(n) = b(n)
    std::vector<std::size_t> greater; ///< n with a(n) > b(n)
    std::size_t min_strict = 10;
    /// At least min_strict strict points in the range. Says nothing about larger n.
    bool witnessed() const noexcept { return strict.size() >= min_strict; }
    std::string summary() const;
};

/// Pointwise comparison of two profiles on their common range.
PrecReport prec_compare(const ComplexityProfile& a, const ComplexityProfile& b, std::size_t min_strict = 10);

struct WeightSpread {
    std::uint64_t value = 0;
    std::size_t prefix_used = 0;
};

/// max over letters a of (max |u|_a - min |u|_a) over length-n factors, stabilized by prefix doubling.
WeightSpread weight_spread(const WordGenerator& gen, std::size_t n, std::size_t cap = default_prefix_cap);

} // namespace binowords
