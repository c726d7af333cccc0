#include "oracle.hpp"

#include <binowords/signature.hpp>
#include <binowords/word.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace binowords;

namespace {

FiniteWord W(std::string_view s) { return FiniteWord::binary(s); }

std::string random_word(std::mt19937_64& rng, const std::string& alphabet, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[pick(rng)];
    return s;
}

} // namespace

TEST(Alphabet, RejectsDuplicatesAndSizes) {
    EXPECT_THROW(Alphabet("00"), PreconditionError);
    EXPECT_THROW(Alphabet("0"), PreconditionError);
    EXPECT_THROW(Alphabet("0123456789abcdefg"), PreconditionError);
    Alphabet a("abc");
    EXPECT_EQ(a.index('c'), 2);
    EXPECT_FALSE(a.contains('d'));
    EXPECT_THROW(FiniteWord(Alphabet::binary(), "012"), ParseError);
}

TEST(FiniteWord, BasicOperations) {
    const auto u = W("0110");
    EXPECT_EQ(u.prefix(2).str(), "01");
    EXPECT_EQ(u.suffix(3).str(), "110");
    EXPECT_EQ(u.complement().str(), "1001");
    EXPECT_EQ(W("01").power(3).str(), "010101");
    EXPECT_EQ((W("01") + W("10")).str(), "0110");
    EXPECT_TRUE(W("01").is_prefix_of(u));
    EXPECT_TRUE(W("10").is_suffix_of(u));
    EXPECT_EQ(u.count(1), 2u);
    EXPECT_THROW((void)(W("0") + FiniteWord(Alphabet("ab"), "a")), AlphabetMismatch);
}

TEST(Binomial, DocumentedValues) {
    EXPECT_EQ(binomial_coefficient(W("0101"), W("01")), 3);
    EXPECT_EQ(binomial_coefficient(W("0110"), W("01")), 2);
    EXPECT_EQ(binomial_coefficient(W("0110"), W("")), 1);
    EXPECT_EQ(binomial_coefficient(W(""), W("")), 1);
    EXPECT_EQ(binomial_coefficient(W("01"), W("011")), 0);
    const Alphabet a("ab");
    EXPECT_EQ(binomial_coefficient(FiniteWord(a, "aaaa"), FiniteWord(a, "aa")), 6);
}

TEST(Binomial, AgreesWithSubsetEnumeration) {
    std::mt19937_64 rng(20240611);
    for (int t = 0; t < 400; ++t) {
        const std::string alpha = t % 3 == 0 ? "012" : "01";
        const auto u = random_word(rng, alpha, rng() % 14);
        const auto e = random_word(rng, alpha, rng() % 5);
        const Alphabet a(alpha);
        EXPECT_EQ(binomial_coefficient(FiniteWord(a, u), FiniteWord(a, e)), oracle::binom(u, e)) << u << " " << e;
    }
}

TEST(Binomial, LongWordsDoNotOverflow) {
    // binom(0^200 1^200, 01) = 40000 fits; binom(0^200, 0^100) needs big integers
    const auto z = W(std::string(200, '0'));
    EXPECT_EQ(binomial_coefficient(z, W(std::string(100, '0'))), choose(200, 100));
    EXPECT_GT(choose(200, 100), BigInt(std::numeric_limits<std::uint64_t>::max()));
    EXPECT_EQ(binomial_coefficient(W(std::string(200, '0') + std::string(200, '1')), W("01")), 40000);
}

TEST(Parikh, Values) {
    EXPECT_EQ(parikh(W("0110")).counts, (std::vector<std::uint64_t>{2, 2}));
    EXPECT_EQ(parikh(W("000111")).counts, (std::vector<std::uint64_t>{3, 3}));
    EXPECT_EQ(parikh(W("")).total(), 0u);
}

TEST(Signature, DocumentedExample) {
    const auto s = signature(W("0110"), 2);
    EXPECT_EQ(s.count(W("")), 1);
    EXPECT_EQ(s.count(W("0")), 2);
    EXPECT_EQ(s.count(W("1")), 2);
    EXPECT_EQ(s.count(W("00")), 1);
    EXPECT_EQ(s.count(W("01")), 2);
    EXPECT_EQ(s.count(W("10")), 2);
    EXPECT_EQ(s.count(W("11")), 1);
    EXPECT_THROW((void)s.count(W("011")), PreconditionError);
}

TEST(Signature, PatternIndexRoundTrip) {
    for (std::size_t size : {2u, 3u})
        for (std::size_t i = 0; i < 60; ++i) EXPECT_EQ(pattern_index(size, pattern_at(size, i)), i);
    EXPECT_EQ(pattern_offset(2, 0), 0u);
    EXPECT_EQ(pattern_offset(2, 2), 3u);
    EXPECT_EQ(patterns_of_length(3, 2), 9u);
}

TEST(Equivalence, DocumentedExamples) {
    EXPECT_TRUE(equivalent(W("0110"), W("1001"), 2));
    EXPECT_FALSE(equivalent(W("0110"), W("1001"), 3));
    EXPECT_FALSE(equivalent(W("01"), W("011"), 1));
    EXPECT_TRUE(equivalent(W("0"), W("1"), 0));
}

TEST(Equivalence, AgreesWithOracleExhaustively) {
    for (std::size_t len = 0; len <= 7; ++len) {
        const auto words = oracle::words_over("01", len);
        for (unsigned k = 1; k <= 3; ++k)
            for (std::size_t i = 0; i < words.size(); i += 3)
                for (std::size_t j = 0; j < words.size(); j += 2) {
                    const bool want = oracle::equivalent(words[i], words[j], "01", k);
                    ASSERT_EQ(equivalent(W(words[i]), W(words[j]), k), want) << words[i] << " " << words[j] << " k=" << k;
                    ASSERT_EQ(equivalent_full(W(words[i]), W(words[j]), k), want);
                }
    }
}

TEST(AbelianMass, Values) {
    EXPECT_EQ(abelian_mass(W("0110"), ParikhVector{{1, 1}}), 4);
    EXPECT_EQ(abelian_mass(W("000"), ParikhVector{{0, 1}}), 0);
}

TEST(AbelianMass, EqualsSumOverAbelianClass) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto u = random_word(rng, "01", 1 + rng() % 10);
        const std::uint64_t a = rng() % 4, b = rng() % 4;
        std::uint64_t total = 0;
        for (const auto& w : oracle::words_over("01", a + b))
            if (std::count(w.begin(), w.end(), '0') == static_cast<long>(a)) total += oracle::binom(u, w);
        EXPECT_EQ(abelian_mass(W(u), ParikhVector{{a, b}}), total);
    }
}

TEST(PowerDelta, MatchesDefinitionAndChecksPrecondition) {
    const auto x = W("0110"), y = W("1001"), e = W("011");
    const BigInt want = 3 * (binomial_coefficient(x, e) - binomial_coefficient(y, e));
    EXPECT_EQ(power_delta(x, y, 3, e), want);
    EXPECT_EQ(power_delta(x, y, 3, W("01")), 0);
    EXPECT_EQ(power_delta(x, y, 0, e), 0);
    EXPECT_THROW((void)power_delta(W("0011"), W("0101"), 2, W("011")), PreconditionError);
}
