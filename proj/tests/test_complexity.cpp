#include "oracle.hpp"

#include <binowords/complexity.hpp>

#include <gtest/gtest.h>

using namespace binowords;

namespace {

std::set<std::string> as_strings(const FactorSet& fs) {
    std::set<std::string> out;
    for (const auto& w : fs.words) out.insert(w.str());
    return out;
}

} // namespace

TEST(Factors, SmallSets) {
    EXPECT_EQ(as_strings(factors(thue_morse_word(), 2)), (std::set<std::string>{"00", "01", "10", "11"}));
    EXPECT_EQ(factors(fibonacci_word(), 3).words.size(), 4u);
    EXPECT_EQ(factors(fibonacci_word(), 0).words.size(), 1u);
}

TEST(Factors, AgreeWithSlidingWindowOracle) {
    const auto tm = oracle::thue_morse(1 << 14);
    const auto fib = oracle::fibonacci(1 << 14);
    for (std::size_t n : {1u, 5u, 17u, 40u}) {
        EXPECT_EQ(as_strings(factors(thue_morse_word(), n)), oracle::factors(tm, n)) << n;
        EXPECT_EQ(as_strings(factors(fibonacci_word(), n)), oracle::factors(fib, n)) << n;
    }
}

TEST(Complexity, ClassCountsAgreeWithOracle) {
    const auto pd = oracle::period_doubling(1 << 13);
    ComplexityEngine engine(period_doubling_word());
    for (std::size_t n : {3u, 6u, 9u, 12u})
        for (unsigned k = 1; k <= 3; ++k)
            EXPECT_EQ(engine.class_count(k, n), oracle::count_classes(oracle::factors(pd, n), "01", k)) << n << " " << k;
}

TEST(Complexity, ClassesPartitionFactors) {
    ComplexityEngine engine(thue_morse_word());
    const auto cls = engine.classes(2, 8);
    std::size_t total = 0;
    for (const auto& c : cls) {
        total += c.size();
        for (const auto& w : c) EXPECT_TRUE(equivalent(w, c.front(), 2));
    }
    EXPECT_EQ(total, engine.factor_count(8));
    EXPECT_EQ(cls.size(), engine.class_count(2, 8));
}

TEST(Complexity, TmBinomialRows) {
    const auto p = binomial_complexity(thue_morse_word(), 2, 8);
    EXPECT_EQ(p.at(8), 9u);
    EXPECT_EQ(p.at(3), 6u);
    EXPECT_EQ(p.at(0), 1u);
    EXPECT_THROW((void)p.at(9), PreconditionError);
}

TEST(Complexity, Formulas) {
    EXPECT_EQ(tm_factor_formula(0), 1u);
    EXPECT_EQ(tm_factor_formula(3), 6u);
    EXPECT_EQ(tm_factor_formula(4), 10u);
    EXPECT_EQ(tm_binomial_formula(2, 8), 9u);
    EXPECT_EQ(tm_binomial_formula(2, 3), 6u);
    EXPECT_EQ(tm_binomial_formula(1, 5), 2u);
    EXPECT_EQ(sturmian_image_formula(1, 2), 4u);
    EXPECT_EQ(sturmian_image_formula(1, 3), 6u);
    EXPECT_EQ(sturmian_image_formula(1, 10), 6u);
    EXPECT_EQ(sturmian_image_factor_formula(1, 5), 8u);
    EXPECT_EQ(sturmian_image_factor_formula(2, 4), 10u);
    EXPECT_EQ(sturmian_image_factor_formula(0, 2), 3u);
}

TEST(Complexity, TmFactorProfileMatchesFormula) {
    const auto p = factor_complexity(thue_morse_word(), 128);
    for (std::size_t n = 0; n <= 128; ++n) EXPECT_EQ(p.at(n), tm_factor_formula(n)) << n;
}

TEST(Complexity, AbelianOfSturmianIsTwo) {
    ComplexityEngine engine(fibonacci_word());
    const auto p = engine.abelian_complexity(60, 1);
    for (std::size_t n = 1; n <= 60; ++n) EXPECT_EQ(p.at(n), 2u);
    EXPECT_EQ(p.kind, ComplexityKind::abelian);
}

TEST(Complexity, CsvAndJsonShapes) {
    const auto p = binomial_complexity(thue_morse_word(), 2, 3);
    const auto csv = p.to_csv();
    EXPECT_NE(csv.find("n,value,prefix_used\n"), std::string::npos);
    EXPECT_NE(csv.find("\n3,6,"), std::string::npos);
    const auto j = p.to_json();
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["values"].size(), 4u);
}

TEST(Complexity, StabilizationFailureIsReported) {
    EngineOptions tiny;
    tiny.prefix_cap = 64;
    EXPECT_THROW((void)factor_complexity(champernowne(), 12, tiny), StabilizationError);
}

TEST(Complexity, CountClassesOfExplicitSet) {
    std::vector<FiniteWord> ws = {FiniteWord::binary("0110"), FiniteWord::binary("1001"), FiniteWord::binary("0101")};
    EXPECT_EQ(count_classes(ws, 2), 2u);
    EXPECT_EQ(count_classes(ws, 1), 1u);
}

TEST(Prec, CompareCountsPoints) {
    ComplexityEngine engine(image_of(Morphism::thue_morse(), 2, fibonacci_word()));
    const auto b1 = engine.binomial_complexity(1, 40, 1);
    const auto b2 = engine.binomial_complexity(2, 40, 1);
    const auto r = prec_compare(b1, b2, 5);
    EXPECT_TRUE(r.greater.empty());
    EXPECT_TRUE(r.witnessed());
    EXPECT_EQ(r.strict.size() + r.equal.size(), 40u);
}

TEST(WeightSpread, SturmianIsBalanced) {
    for (std::size_t n : {5u, 50u, 300u}) EXPECT_EQ(weight_spread(fibonacci_word(), n).value, 1u);
    EXPECT_LE(weight_spread(thue_morse_word(), 100).value, 2u);
}
