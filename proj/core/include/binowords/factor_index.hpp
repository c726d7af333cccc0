#pragma once

#include <binowords/generators.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace binowords {

inline constexpr std::size_t default_prefix_cap = std::size_t{1} << 22;

/// Incremental index of a generator prefix. For every end position e it records the length of the
/// longest suffix of prefix[0..e] that also ends earlier, so the window of length n ending at e is a
/// first occurrence exactly when that length is below n.
class FactorIndex {
public:
    explicit FactorIndex(WordGenerator gen, std::size_t cap = default_prefix_cap);

    struct Stabilized {
        std::size_t length;      ///< shortest checkpoint already holding every factor
        std::size_t prefix_used; ///< longest prefix inspected to confirm it
        std::uint64_t count;     ///< number of distinct factors
    };

    const WordGenerator& generator() const noexcept { return gen_; }
    std::size_t cap() const noexcept { return cap_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::uint32_t repeat_length(std::size_t e) const { return repeat_[e]; }
    bool is_first_occurrence(std::size_t end, std::size_t n) const { return repeat_[end] < n; }

    /// Extends the indexed prefix to at least length symbols (never beyond it by more than a doubling).
    void ensure(std::size_t length);
    /// Distinct factors of length n inside the first length symbols.
    std::uint64_t distinct_count(std::size_t n, std::size_t length);
    /// Doubles the prefix from max(4n, 1024) until three consecutive checkpoints agree.
    Stabilized stabilize(std::size_t n);
    /// Start positions of first occurrences of length-n factors inside the first length symbols.
    std::vector<std::size_t> first_occurrences(std::size_t n, std::size_t length) const;

private:
    void push(Letter c);

    WordGenerator gen_;
    std::size_t cap_;
    std::size_t alphabet_size_;
    std::vector<Letter> letters_;
    std::vector<std::uint32_t> repeat_;
    // suffix automaton
    std::vector<std::int32_t> next_;
    std::vector<std::int32_t> link_;
    std::vector<std::uint32_t> len_;
    std::int32_t last_ = 0;
    // length -> cumulative histogram of repeat lengths
    std::map<std::size_t, std::vector<std::uint64_t>> cumulative_;
    std::map<std::size_t, Stabilized> stabilized_;
};

} // namespace binowords
