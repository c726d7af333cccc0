#include "oracle.hpp"

#include <binowords/generators.hpp>
#include <binowords/tm_structure.hpp>

#include <gtest/gtest.h>

using namespace binowords;

namespace {

FiniteWord W(std::string_view s) { return FiniteWord::binary(s); }

std::set<std::string> ancestors(const PhiFactorizations& f) {
    std::set<std::string> out;
    for (const auto& it : f.items) out.insert(it.ancestor.str());
    return out;
}

} // namespace

TEST(TmBlock, MatchesStringIteration) {
    for (unsigned j = 0; j <= 6; ++j) {
        EXPECT_EQ(tm_block(j, 0).str(), oracle::phi_k("0", j));
        EXPECT_EQ(tm_block(j, 1).str(), oracle::phi_k("1", j));
    }
    EXPECT_EQ(tm_image(2, W("10")).str(), oracle::phi_k("10", 2));
}

TEST(PhiFactorizations, DocumentedCases) {
    const auto one = phi_factorizations(W("0110"), 1);
    EXPECT_EQ(one.status, FactorizationStatus::unique);
    ASSERT_EQ(one.items.size(), 1u);
    EXPECT_EQ(one.items[0].ancestor.str(), "01");

    const auto two = phi_factorizations(W("0101"), 1);
    EXPECT_EQ(two.status, FactorizationStatus::two);
    EXPECT_EQ(ancestors(two), (std::set<std::string>{"00", "111"}));
    EXPECT_TRUE(two.expected_shape);

    // phi^3(0) also splits as (0110 | e | 1001) over the ancestor 11
    const auto cube = phi_factorizations(W("01101001"), 3);
    EXPECT_EQ(cube.items.size(), 2u);
    EXPECT_EQ(ancestors(cube), (std::set<std::string>{"0", "11"}));
}

TEST(PhiFactorizations, ReconstructAndBruteForceCount) {
    for (unsigned j = 1; j <= 2; ++j) {
        const std::size_t block = std::size_t{1} << j;
        for (std::size_t len = block - 1; len <= block + 4; ++len)
            for (const auto& u : oracle::words_over("01", len)) {
                // brute force: every offset whose middle decodes into whole blocks
                std::size_t want = 0;
                for (std::size_t p = 0; p < block && p <= len; ++p)
                    for (std::size_t s = 0; s < block && p + s <= len; ++s) {
                        if ((len - p - s) % block) continue;
                        bool ok = true;
                        if (p) {
                            const auto pre = u.substr(0, p);
                            const bool a0 = oracle::phi_k("0", j).substr(block - p) == pre;
                            const bool a1 = oracle::phi_k("1", j).substr(block - p) == pre;
                            ok = a0 || a1;
                        }
                        for (std::size_t i = p; ok && i + block <= len - s; i += block) {
                            const auto b = u.substr(i, block);
                            ok = b == oracle::phi_k("0", j) || b == oracle::phi_k("1", j);
                        }
                        if (ok && s) {
                            const auto suf = u.substr(len - s);
                            ok = oracle::phi_k("0", j).substr(0, s) == suf || oracle::phi_k("1", j).substr(0, s) == suf;
                        }
                        want += ok;
                    }
                const auto got = phi_factorizations(W(u), j);
                ASSERT_EQ(got.items.size(), want) << u << " j=" << j;
                for (const auto& it : got.items) EXPECT_EQ(it.reconstruct().str(), u);
            }
    }
}

TEST(PhiFactorizations, UnexpectedShapeOnlyAtBoundary) {
    EXPECT_FALSE(phi_factorizations(W("010"), 2).expected_shape);
    EXPECT_FALSE(phi_factorizations(W("101"), 2).expected_shape);
    EXPECT_TRUE(phi_factorizations(W("0101"), 2).expected_shape);
}

TEST(EquivJ, DocumentedCases) {
    EXPECT_TRUE(equiv_j({W("01"), W("10"), 2}, {W("10"), W("01"), 2}));
    EXPECT_TRUE(equiv_j({W(""), W(""), 2}, {W("01"), W("10"), 2}));
    EXPECT_FALSE(equiv_j({W("1"), W(""), 2}, {W(""), W("0"), 2}));
}

TEST(ClassifyFactor, AlternatingWords) {
    const auto c = classify_factor(W("10101"));
    const std::vector<FactorizationClass> want = {
        {std::nullopt, Letter{1}, 2},
        {Letter{0}, std::nullopt, 2},
    };
    EXPECT_EQ(c, want);
    const auto d = classify_factor(W("010101"));
    const std::vector<FactorizationClass> want_d = {
        {std::nullopt, std::nullopt, 3},
        {Letter{1}, Letter{1}, 2},
    };
    EXPECT_EQ(d, want_d);
    EXPECT_TRUE(is_alternating(W("10101")));
    EXPECT_FALSE(is_alternating(W("0110")));
}

TEST(Decode, RoundTripOnConstructedWord) {
    const auto x = image_of(Morphism::thue_morse(), 2, fibonacci_word());
    const auto shifted = suffix_of(3, x).prefix(400);
    const auto d = tm_decode(shifted, 2);
    EXPECT_EQ(d.u.str(), "0");
    EXPECT_EQ(d.u + tm_image(2, d.y_prefix) + d.remainder, shifted);
    EXPECT_EQ(d.y_prefix, suffix_of(1, fibonacci_word()).prefix(d.y_prefix.size()));
}

TEST(Decode, RejectsNonImages) {
    EXPECT_THROW((void)tm_decode(champernowne().prefix(200), 2), DecodeError);
    EXPECT_THROW((void)tm_decode(W("000"), 1), PreconditionError);
    EXPECT_THROW((void)tm_decode(W("00000000"), 1), DecodeError);
}

TEST(Decode, AllSplitsRoundTrip) {
    const auto x = image_of(Morphism::thue_morse(), 1, period_doubling_word()).prefix(120);
    const auto all = tm_decode_all(x, 1);
    ASSERT_FALSE(all.empty());
    for (const auto& d : all) EXPECT_EQ(d.u + tm_image(1, d.y_prefix) + d.remainder, x);
}

TEST(Transfer, DocumentedCases) {
    EXPECT_TRUE(transfer_check(W("0"), W("1"), W("0"), 2));
    EXPECT_TRUE(transfer_check(W("01"), W("10"), W("11"), 3));
    EXPECT_TRUE(transfer_check(W("1"), W("0"), W("0"), 1));
    EXPECT_THROW((void)transfer_check(W("1"), W("0"), W("00"), 1), PreconditionError);
}
