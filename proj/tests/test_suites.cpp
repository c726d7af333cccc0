#include <binowords/verify.hpp>

#include <gtest/gtest.h>

using namespace binowords;

class QuickSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(QuickSuite, Passes) {
    const auto report = run_suite(GetParam(), Scale::quick);
    EXPECT_TRUE(report.passed()) << report.text();
}

namespace {

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
}

std::string test_name(const ::testing::TestParamInfo<std::string>& info) {
    std::string s;
    for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return s;
}

} // namespace

INSTANTIATE_TEST_SUITE_P(All, QuickSuite, ::testing::ValuesIn(suite_names()), test_name);

TEST(Registry, LookupAndUnknown) {
    EXPECT_TRUE(has_suite("michel"));
    EXPECT_FALSE(has_suite("no-such-suite"));
    EXPECT_THROW((void)run_suite("no-such-suite", Scale::quick), PreconditionError);
}
