#pragma once

#include <binowords/word.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace binowords {

/// Number of patterns of length exactly len over an alphabet of the given size.
std::size_t patterns_of_length(std::size_t alphabet_size, unsigned len);
/// Index of the first pattern of length len in canonical (length, lexicographic) order.
std::size_t pattern_offset(std::size_t alphabet_size, unsigned len);
/// Canonical index of a pattern.
std::size_t pattern_index(std::size_t alphabet_size, std::span<const Letter> pattern);
/// Inverse of pattern_index.
std::vector<Letter> pattern_at(std::size_t alphabet_size, std::size_t index);

/// All subword counts of a word for patterns of length at most k, in canonical order.
class BinomialSignature {
public:
    BinomialSignature(Alphabet alphabet, unsigned k, std::size_t word_length, std::vector<BigInt> counts);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    unsigned k() const noexcept { return k_; }
    std::size_t word_length() const noexcept { return word_length_; }
    const std::vector<BigInt>& counts() const noexcept { return counts_; }

    /// Count for a pattern of length at most k.
    const BigInt& count(const FiniteWord& pattern) const;
    const BigInt& count(std::span<const Letter> pattern) const;
    /// Counts of all patterns of length exactly len.
    std::span<const BigInt> row(unsigned len) const;

    friend bool operator==(const BinomialSignature&, const BinomialSignature&) = default;

private:
    Alphabet alphabet_;
    unsigned k_;
    std::size_t word_length_;
    std::vector<BigInt> counts_;
};

BinomialSignature signature(const FiniteWord& u, unsigned k);

/// u ~_k v. Equal-length words of length at least k are compared on length-k patterns only.
bool equivalent(const FiniteWord& u, const FiniteWord& v, unsigned k);

/// Compares the full signatures, without the length-k shortcut.
bool equivalent_full(const FiniteWord& u, const FiniteWord& v, unsigned k);

} // namespace binowords

template <>
struct std::hash<binowords::BinomialSignature> {
    std::size_t operator()(const binowords::BinomialSignature& s) const noexcept;
};
