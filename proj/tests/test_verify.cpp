#include <gtest/gtest.h>

#include "hopfmi.hpp"

using namespace hopfmi;

namespace {

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
}

class EverySuite : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(EverySuite, PassesOneLetter) {
    const auto report = verify(GetParam(), 5, Alphabet());
    EXPECT_TRUE(report.passed()) << (report.failures.empty() ? "" : report.failures.front());
    EXPECT_GT(report.cases, 0u);
}

TEST_P(EverySuite, PassesTwoLetters) {
    const auto report = verify(GetParam(), 3, Alphabet::parse("a,b"));
    EXPECT_TRUE(report.passed()) << (report.failures.empty() ? "" : report.failures.front());
}

INSTANTIATE_TEST_SUITE_P(Verify, EverySuite, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                             std::string s = info.param;
                             std::replace(s.begin(), s.end(), '-', '_');
                             return s;
                         });

TEST(Verify, IdentityTableComesFirst) {
    ASSERT_EQ(identity_table().size(), 10u);
    for (std::size_t i = 0; i < identity_table().size(); ++i)
        EXPECT_EQ(suites()[i].name, identity_table()[i].second);
    EXPECT_TRUE(is_suite_name("duality"));
    EXPECT_FALSE(is_suite_name("all"));
}

TEST(Verify, Errors) {
    EXPECT_THROW(verify("duality", 9, Alphabet()), BoundError);
    EXPECT_THROW(verify("no-such-identity", 3, Alphabet()), std::invalid_argument);
}

TEST(Verify, SeededSuitesAreReproducible) {
    VerifyOptions o;
    o.seed = 99;
    const auto a = verify("novikov-morphism", 4, Alphabet(), o);
    const auto b = verify("novikov-morphism", 4, Alphabet(), o);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_TRUE(a.passed());
}

TEST(Verify, CheckerRecordsFailures) {
    VerifyReport report;
    detail::Checker ck(report);
    ck.check(true, [] { return std::string("unused"); });
    ck.check(false, [] { return std::string("counterexample"); });
    EXPECT_EQ(report.cases, 2u);
    EXPECT_FALSE(report.passed());
    EXPECT_EQ(report.failures, std::vector<std::string>{"counterexample"});
}
