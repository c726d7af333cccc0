#include "oracle.hpp"

#include <binowords/morphism.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace binowords;

namespace {

FiniteWord W(std::string_view s) { return FiniteWord::binary(s); }

} // namespace

TEST(Morphism, ParseForms) {
    const auto f = Morphism::parse("# tm\n0 -> 01\n1 -> 10\n");
    EXPECT_EQ(f, Morphism::thue_morse());
    EXPECT_EQ(Morphism::parse_inline("0->01, 1->10"), f);
    const auto e = Morphism::parse_inline("0->, 1->1");
    EXPECT_TRUE(e.image('0').empty());
    EXPECT_THROW(Morphism::parse_inline("0->01, 0->10"), ParseError);
    EXPECT_THROW(Morphism::parse_inline("0 01"), ParseError);
    EXPECT_EQ(Morphism::parse(f.to_text()), f);
}

TEST(Morphism, ApplyAndPower) {
    const auto phi = Morphism::thue_morse();
    EXPECT_EQ(apply(phi, W("0")).str(), "01");
    EXPECT_EQ(apply(phi, W("01")).str(), "0110");
    EXPECT_EQ(apply(phi, W("")).str(), "");
    EXPECT_EQ(apply(Morphism::parse_inline("0->000111, 1->0110"), W("1")).str(), "0110");
    EXPECT_EQ(power(phi, 0), Morphism::identity(Alphabet::binary()));
    EXPECT_EQ(power(phi, 3).image('0').str(), "01101001");
    EXPECT_EQ(power(phi, 3).image('0').str(), oracle::phi_k("0", 3));
    EXPECT_THROW((void)power(phi, 30, 1000), PreconditionError);
}

TEST(Morphism, AdjacencyMatrixGivesParikhOfImages) {
    const auto f = Morphism::parse_inline("0->001, 1->1110");
    const auto m = f.adjacency_matrix();
    EXPECT_EQ(m[0][0], 2u);
    EXPECT_EQ(m[1][0], 1u);
    EXPECT_EQ(m[0][1], 1u);
    EXPECT_EQ(m[1][1], 3u);
}

TEST(Classify, GroundTruth) {
    const auto tm = classify(Morphism::thue_morse());
    EXPECT_EQ(tm.rank, 1u);
    EXPECT_TRUE(tm.is_parikh_constant);
    EXPECT_TRUE(tm.is_parikh_collinear);

    const auto pc = classify(Morphism::parse_inline("0->000111, 1->0110"));
    EXPECT_TRUE(pc.is_parikh_collinear);
    EXPECT_FALSE(pc.is_parikh_constant);
    EXPECT_EQ(pc.rank, 1u);

    const auto r2 = classify(Morphism::parse_inline("0->000222, 1->0001112, 2->2222000000111"));
    EXPECT_EQ(r2.rank, 2u);
    EXPECT_FALSE(r2.is_parikh_collinear);

    const auto id = classify(Morphism::identity(Alphabet::binary()));
    EXPECT_EQ(id.rank, 2u);
    EXPECT_FALSE(id.is_prolongable_on.has_value());

    const auto erase = classify(Morphism::parse_inline("0->, 1->"));
    EXPECT_EQ(erase.rank, 0u);
    EXPECT_TRUE(erase.is_totally_erasing);

    EXPECT_EQ(classify(Morphism::parse_inline("0->01, 1->0")).is_prolongable_on, '0');
}

TEST(Classify, IntegerRank) {
    using M = std::vector<std::vector<BigInt>>;
    EXPECT_EQ(integer_rank(M{{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(integer_rank(M{{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(integer_rank(M{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2u);
    EXPECT_EQ(integer_rank(M{{2, 0, 1}, {0, 3, 1}, {1, 1, 5}}), 3u);
}

TEST(ImageCoefficient, DocumentedValue) {
    const auto phi = Morphism::thue_morse();
    EXPECT_EQ(image_coefficient(phi, signature(W("01"), 2), W("0")), 2);
}

TEST(ImageCoefficient, AgreesWithDirectExpansion) {
    std::mt19937_64 rng(99);
    const std::vector<Morphism> fs = {Morphism::thue_morse(), Morphism::parse_inline("0->001, 1->10"),
                                      Morphism::parse_inline("0->0111, 1->")};
    for (const auto& f : fs)
        for (int t = 0; t < 60; ++t) {
            std::string u, e;
            for (std::size_t i = 0, n = rng() % 8; i < n; ++i) u += "01"[rng() % 2];
            for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) e += "01"[rng() % 2];
            const auto direct = oracle::binom(oracle::apply({{'0', f.image('0').str()}, {'1', f.image('1').str()}}, u), e);
            EXPECT_EQ(image_coefficient(f, signature(W(u), static_cast<unsigned>(e.size())), W(e)), direct) << u << " " << e;
        }
}

TEST(GValue, DocumentedValueAndLengthCheck) {
    const auto phi = Morphism::thue_morse();
    EXPECT_EQ(g_value(phi, W("01"), W("01")), 1);
    EXPECT_EQ(g_value(phi, W("00"), W("01")), 1);
    EXPECT_THROW((void)g_value(phi, W("0"), W("01")), PreconditionError);
}

TEST(Michel, FirstIdentityAndMeasuredSecond) {
    const auto d = michel_delta(W("01"), W("10"), 2);
    EXPECT_EQ(d.first, 0);
    EXPECT_TRUE(d.second_checked);
    EXPECT_EQ(d.second, 2);
    EXPECT_EQ(michel_delta(W("00"), W("11"), 1).first, 2);
    EXPECT_FALSE(michel_delta(W("00"), W("11"), 1).second_checked);
}

TEST(Michel, DifferencesMatchDirectCount) {
    for (unsigned k = 1; k <= 4; ++k)
        for (const auto& [u, v] : {std::pair{"0110", "1001"}, std::pair{"0011", "0101"}, std::pair{"001", "110"}}) {
            const auto d = michel_delta(W(u), W(v), k);
            const std::string e1 = "0" + std::string(k, '1'), e2 = "0" + std::string(k + 1, '1');
            const auto pu = oracle::phi_k(u, k), pv = oracle::phi_k(v, k);
            EXPECT_EQ(d.first, BigInt(oracle::binom(pu, e1)) - BigInt(oracle::binom(pv, e1)));
            EXPECT_EQ(d.second, BigInt(oracle::binom(pu, e2)) - BigInt(oracle::binom(pv, e2)));
        }
}
