#include "oracle.hpp"

#include <binowords/rauzy.hpp>

#include <gtest/gtest.h>

using namespace binowords;

TEST(Rauzy, ThueMorseEvenAndOddOrders) {
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto even = build_graph(thue_morse_word(), 2 * m);
        EXPECT_EQ(even.vertices.size(), 3u) << m;
        EXPECT_EQ(even.edges.size(), 6u) << m;
        const ParikhVector mid{{m, m}};
        EXPECT_TRUE(even.has_edge(mid, 0, 0, mid));
        EXPECT_TRUE(even.has_edge(mid, 1, 1, mid));

        const auto odd = build_graph(thue_morse_word(), 2 * m + 1);
        EXPECT_EQ(odd.vertices.size(), 2u) << m;
        EXPECT_EQ(odd.edges.size(), 6u) << m;
    }
}

TEST(Rauzy, EdgesComeFromFactorsOfNextLength) {
    const std::size_t n = 7;
    const auto fib = oracle::fibonacci(1 << 13);
    std::set<std::tuple<long, char, char, long>> want;
    for (const auto& f : oracle::factors(fib, n + 1)) {
        const long src = std::count(f.begin(), f.end() - 1, '1');
        const long dst = std::count(f.begin() + 1, f.end(), '1');
        want.insert({src, f.front(), f.back(), dst});
    }
    const auto g = build_graph(fibonacci_word(), n);
    std::set<std::tuple<long, char, char, long>> got;
    for (const auto& e : g.edges)
        got.insert({static_cast<long>(e.source[1]), char('0' + e.first), char('0' + e.last), static_cast<long>(e.target[1])});
    EXPECT_EQ(got, want);
}

TEST(Rauzy, SturmianQuotients) {
    const auto q = edge_quotients(fibonacci_word(), 5);
    EXPECT_EQ(q.y_count, 6u);
    EXPECT_EQ(q.y_count, q.yl_count + q.yr_count);
    EXPECT_EQ(edge_quotients(fibonacci_word(), 1).x_count, 3u);
    EXPECT_EQ(edge_quotients(fibonacci_word(), 6).x_count, 4u);
}

TEST(Rauzy, DotAndJson) {
    const auto g = build_graph(thue_morse_word(), 2);
    const auto dot = g.to_dot();
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    EXPECT_NE(dot.find("red"), std::string::npos);
    const auto j = g.to_json();
    EXPECT_EQ(j["vertices"].size(), 3u);
    EXPECT_EQ(j["edges"].size(), 6u);
}

TEST(RunMaxima, KnownWords) {
    const auto fib = run_maxima(fibonacci_word());
    EXPECT_TRUE(fib.m.equals(1));
    EXPECT_TRUE(fib.m_prime.equals(2));
    const auto tm = run_maxima(thue_morse_word());
    EXPECT_TRUE(tm.m.equals(2));
    EXPECT_TRUE(tm.m_prime.equals(2));
    const auto s12 = run_maxima(parse_generator("sturmian:1,2"));
    EXPECT_TRUE(s12.m.equals(1));
    EXPECT_TRUE(s12.m_prime.equals(2));
}

TEST(KPlus1, FormulaAgreesWithBruteForceOnFib) {
    EXPECT_EQ(kplus1_formula(fibonacci_word(), 1, 2), 4u);
    const auto img = image_of(Morphism::thue_morse(), 1, fibonacci_word());
    ComplexityEngine engine(img);
    KPlus1Formula formula(fibonacci_word(), 1);
    EXPECT_FALSE(formula.periodicity_warning());
    for (std::uint64_t n = 1; n <= 40; ++n) EXPECT_EQ(formula(n), engine.class_count(2, n)) << n;
}

TEST(SmallestPeriod, Values) {
    const std::vector<Letter> a{0, 1, 0, 1, 0};
    const std::vector<Letter> b{0, 1, 1, 0};
    EXPECT_EQ(smallest_period(a), 2u);
    EXPECT_EQ(smallest_period(b), 3u);
}
