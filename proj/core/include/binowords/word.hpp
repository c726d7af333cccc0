#pragma once

#include <binowords/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace binowords {

using BigInt = boost::multiprecision::cpp_int;
using Letter = std::uint8_t;

/// Ordered set of 2 to 16 distinct character symbols. Letters are 0-based indices into it.
class Alphabet {
public:
    static constexpr std::size_t max_size = 16;

    Alphabet();
    explicit Alphabet(std::string symbols);

    static Alphabet binary() { return Alphabet("01"); }

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }
    char symbol(Letter a) const;
    std::optional<Letter> find(char c) const noexcept;
    Letter index(char c) const;
    bool contains(char c) const noexcept { return find(c).has_value(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

/// Immutable word over an alphabet.
class FiniteWord {
public:
    FiniteWord() : alphabet_(Alphabet::binary()) {}
    explicit FiniteWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
    FiniteWord(Alphabet alphabet, std::vector<Letter> letters);
    FiniteWord(Alphabet alphabet, std::string_view text);

    /// Binary word from a string of '0'/'1'.
    static FiniteWord binary(std::string_view text) { return FiniteWord(Alphabet::binary(), text); }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return letters_.size(); }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::string str() const;

    FiniteWord substr(std::size_t pos, std::size_t len = std::string::npos) const;
    FiniteWord prefix(std::size_t len) const { return substr(0, len); }
    FiniteWord suffix(std::size_t len) const;
    FiniteWord power(std::size_t n) const;
    /// Exchanges 0 and 1; binary words only.
    FiniteWord complement() const;
    bool is_prefix_of(const FiniteWord& other) const;
    bool is_suffix_of(const FiniteWord& other) const;
    std::size_t count(Letter a) const;

    friend FiniteWord operator+(const FiniteWord& a, const FiniteWord& b);
    friend bool operator==(const FiniteWord& a, const FiniteWord& b) {
        return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
    }
    friend std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

struct ParikhVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t operator[](std::size_t a) const { return counts[a]; }
    std::uint64_t total() const noexcept;
    std::string str() const;
    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
    friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

/// Throws AlphabetMismatch unless both words share an alphabet.
void require_same_alphabet(const FiniteWord& u, const FiniteWord& v, const char* what);

/// Number of occurrences of w as a (scattered) subword of u.
BigInt binomial_coefficient(const FiniteWord& u, const FiniteWord& w);

/// Integer binomial coefficient C(n, k).
BigInt choose(std::uint64_t n, std::uint64_t k);

ParikhVector parikh(const FiniteWord& u);
ParikhVector parikh(std::span<const Letter> letters, std::size_t alphabet_size);

/// Product of C(|u|_a, m_a): the total count of subwords of u with Parikh vector m.
BigInt abelian_mass(const FiniteWord& u, const ParikhVector& m);

/// binom(x^n, e) - binom(y^n, e), checked against n * (binom(x, e) - binom(y, e)).
/// Requires x ~_{|e|-1} y; ~_0 means equal length.
BigInt power_delta(const FiniteWord& x, const FiniteWord& y, std::uint64_t n, const FiniteWord& e);

} // namespace binowords

template <>
struct std::hash<binowords::FiniteWord> {
    std::size_t operator()(const binowords::FiniteWord& w) const noexcept;
};

template <>
struct std::hash<binowords::ParikhVector> {
    std::size_t operator()(const binowords::ParikhVector& p) const noexcept;
};
