#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "hopfmi.hpp"
#include "hopfmi/cli.hpp"

using namespace hopfmi;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(HOPFMI_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, CoproductGolden) {
    const auto r = run({"coproduct", "x{-1}^2 x{0} x{1}"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ((parse_tensor2<MonomialBag, MonomialBag>(r.out, Alphabet())),
              coproduct_lot(parse_key<MultiIndex>("x{-1}^2 x{0} x{1}", Alphabet())));
    EXPECT_NE(r.out.find("3 x{-1} (.) x{-1} ⊗ x{-1} x{0}"), std::string::npos);
}

TEST(Cli, JsonOutputParsesBack) {
    const auto r = run({"--format", "json", "coproduct", "x{-1}^2 x{0} x{1}"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc.at("sort"), "tensor(bag,bag)");
    EXPECT_EQ(doc.at("terms").size(), 8u);
    EXPECT_EQ((tensor2_from_json<MonomialBag, MonomialBag>(doc, Alphabet())),
              coproduct_lot(parse_key<MultiIndex>("x{-1}^2 x{0} x{1}", Alphabet())));
}

TEST(Cli, BckAndEmbed) {
    auto r = run({"coproduct", "--algebra", "bck", "a[a,a]"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ((parse_tensor2<Forest, Forest>(r.out, Alphabet())), coproduct_bck(parse_key<Forest>("a[a,a]", Alphabet())));
    r = run({"embed", "x{-1}^3 x{0} x{2}"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_lincomb<Forest>(r.out, Alphabet()), parse_lincomb<Forest>("a[a[a,a,a]] + 3 a[a,a,a[a]]", Alphabet()));
    r = run({"phi", "a[a,a]"});
    EXPECT_EQ(r.out, "x{-1}^2 x{1}\n");
}

TEST(Cli, ProductsAndAntipode) {
    auto r = run({"product", "--op", "gl", "x{-1}", "x{-1}"});
    EXPECT_EQ(parse_lincomb<MonomialBag>(r.out, Alphabet()), parse_lincomb<MonomialBag>("x{-1} (.) x{-1} + x{-1} x{0}", Alphabet()));
    r = run({"product", "--op", "graft", "a", "a[a]"});
    EXPECT_EQ(parse_lincomb<Tree>(r.out, Alphabet()), parse_lincomb<Tree>("a[a,a] + a[a[a]]", Alphabet()));
    r = run({"antipode", "x{-1} x{0}"});
    EXPECT_EQ(parse_lincomb<MonomialBag>(r.out, Alphabet()), parse_lincomb<MonomialBag>("x{-1} (.) x{-1} - x{-1} x{0}", Alphabet()));
    r = run({"lbar", "--decoration", "a", "x{-1}^2 x{0} x{1}"});
    EXPECT_EQ(parse_lincomb<MonomialBag>(r.out, Alphabet()),
              parse_lincomb<MonomialBag>("x{-1}^2 x{1} + 2 x{-1} (.) x{-1} x{0}", Alphabet()));
}

TEST(Cli, EnumerateCounts) {
    for (auto [what, n, count] : {std::tuple{"trees", "5", 9}, {"monomials", "6", 7}, {"forests", "4", 9}}) {
        const auto r = run({"--format", "json", "enumerate", "--what", what, "--degree", n});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(Json::parse(r.out).at("terms").size(), static_cast<std::size_t>(count)) << what;
    }
}

TEST(Cli, BSeries) {
    const auto r = run({"bseries", "--alpha", sample("alpha_ones.json"), "--field", "y", "--degree", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "5/2*y\n");
}

TEST(Cli, VerifyIsDeterministic) {
    const std::vector<std::string> args{"--alphabet", "a,b", "verify", "--degree", "3"};
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("PASS duality"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"coproduct", "x{-1"}).code, 2);
    EXPECT_EQ(run({"coproduct", "x{0}"}).code, 2);
    EXPECT_EQ(run({"verify", "--identity", "bogus", "--degree", "3"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--what", "trees", "--degree", "9"}).code, 2);
    EXPECT_EQ(run({"--alphabet", "a,b", "embed", "x{-1}"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto r = run({"coproduct", "x{-1"});
    EXPECT_NE(r.err.find("syntax error"), std::string::npos);
}

TEST(Cli, CacheFileIsWrittenAndReused) {
    const auto path = (std::filesystem::temp_directory_path() / "hopfmi_cli_cache.json").string();
    std::filesystem::remove(path);
    auto r = run({"--cache", path, "embed", "x{-1}^3 x{0} x{2}"});
    ASSERT_EQ(r.code, 0) << r.err;
    ASSERT_TRUE(std::filesystem::exists(path));
    const auto again = run({"--cache", path, "embed", "x{-1}^3 x{0} x{2}"});
    EXPECT_EQ(again.out, r.out);
    EXPECT_TRUE(again.err.empty()) << again.err;
    std::filesystem::remove(path);
}
