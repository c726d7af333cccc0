#include "oracle.hpp"

#include <binowords/generators.hpp>

#include <gtest/gtest.h>

#include <thread>

using namespace binowords;

TEST(Generators, KnownPrefixes) {
    EXPECT_EQ(thue_morse_word().prefix(8).str(), "01101001");
    EXPECT_EQ(fibonacci_word().prefix(19).str(), "0100101001001010010");
    EXPECT_EQ(period_doubling_word().prefix(14).str(), "01000101010001");
    EXPECT_EQ(h_word().prefix(22).str(), "0112122122212222122222");
    EXPECT_EQ(grillenberger_word().prefix(16).str(), "0100010101100111");
    EXPECT_EQ(champernowne().prefix(9).str(), "011011100");
    EXPECT_EQ(sturmian(SturmianSpec{{2}, {1}}).prefix(3).str(), "001");
}

TEST(Generators, AgreeWithIndependentDefinitions) {
    EXPECT_EQ(thue_morse_word().prefix(5000).str(), oracle::thue_morse(5000));
    EXPECT_EQ(fibonacci_word().prefix(5000).str(), oracle::fibonacci(5000));
    EXPECT_EQ(period_doubling_word().prefix(5000).str(), oracle::period_doubling(5000));
    EXPECT_EQ(sturmian(SturmianSpec{{}, {1}}).prefix(3000).str(), oracle::fibonacci(3000));
}

TEST(Generators, GWordFormsAgree) {
    const auto g = g_word().prefix(4000);
    EXPECT_EQ(g, g_word_product_form().prefix(4000));
    EXPECT_EQ(g.alphabet().size(), 4u);
    const auto t = tau_g_word().prefix(2000).str();
    std::string coded;
    for (std::size_t i = 0; coded.size() < 2000; ++i) {
        const char c = g.alphabet().symbol(g[i]);
        if (c == '0' || c == '1') coded += c;
        else if (c != g.alphabet().symbol(g[0])) coded += '1';
    }
    EXPECT_EQ(t, coded);
}

TEST(Generators, ImageAndSuffix) {
    const auto phi = Morphism::thue_morse();
    const auto img = image_of(phi, 2, fibonacci_word()).prefix(400).str();
    std::string want;
    for (char c : oracle::fibonacci(100)) want += oracle::phi_k(std::string(1, c), 2);
    EXPECT_EQ(img, want);
    EXPECT_EQ(suffix_of(3, thue_morse_word()).prefix(50).str(), oracle::thue_morse(53).substr(3));
}

TEST(Generators, ParseSpecs) {
    EXPECT_EQ(parse_generator("tm").prefix(64), thue_morse_word().prefix(64));
    EXPECT_EQ(parse_generator("sturmian:2;1").prefix(30), sturmian(SturmianSpec{{2}, {1}}).prefix(30));
    EXPECT_EQ(parse_generator("image(tm^2, fib)").prefix(80), image_of(Morphism::thue_morse(), 2, fibonacci_word()).prefix(80));
    EXPECT_EQ(parse_generator("suffix(5, pd)").prefix(20), suffix_of(5, period_doubling_word()).prefix(20));
    EXPECT_EQ(parse_generator("fixed(fib, 0)").prefix(40), fibonacci_word().prefix(40));
    EXPECT_THROW(parse_generator("nope"), ParseError);
    EXPECT_THROW(parse_generator("image(tm^2, fib"), ParseError);
    EXPECT_THROW(parse_generator("sturmian:0"), ParseError);
}

TEST(Generators, NotProlongableRejected) {
    EXPECT_THROW(fixed_point(Morphism::parse_inline("0->10, 1->01"), '0'), PreconditionError);
}

TEST(Generators, ConcurrentPrefixesAreConsistent) {
    const auto gen = fibonacci_word();
    std::vector<std::string> got(4);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < got.size(); ++i)
        pool.emplace_back([&, i] { got[i] = gen.prefix(1000 * (i + 1)).str().substr(0, 1000); });
    for (auto& t : pool) t.join();
    for (const auto& s : got) EXPECT_EQ(s, oracle::fibonacci(1000));
}
