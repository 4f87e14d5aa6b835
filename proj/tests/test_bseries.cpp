#include <random>

#include <gtest/gtest.h>

#include "hopfmi.hpp"

using namespace hopfmi;

namespace {

MultiIndex mi(std::string_view s) { return parse_key<MultiIndex>(s, Alphabet()); }
FieldFamily field(std::string_view s) { return parse_field_family(s, Alphabet()); }

}  // namespace

TEST(Poly, Arithmetic) {
    const Poly y = Poly::y();
    EXPECT_EQ((y * y + Poly(Rational(1))).to_string(), "1 + y^2");
    EXPECT_EQ((y * y).derivative(), Poly(Rational(2)) * y);
    EXPECT_TRUE((y - y).is_zero());
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ((y * y)(Rational(3)), 9);
}

TEST(Poly, ParsePrintRoundTrip) {
    for (const char* s : {"0", "1", "y", "-y", "5/2*y", "1 - 3*y + y^3", "-1/2 + 2/3*y^2"}) {
        const Poly p = Poly::parse(s);
        EXPECT_EQ(Poly::parse(p.to_string()), p) << s;
    }
    EXPECT_EQ(Poly::parse("2 y^2 + y + 1"), Poly::parse("1 + y + 2*y^2"));
    EXPECT_THROW(Poly::parse("y +"), SyntaxError);
    EXPECT_THROW(Poly::parse("z"), SyntaxError);
}

TEST(ElementaryDifferential, Examples) {
    EXPECT_EQ(elementary_differential(mi("x{-1}"), field("y^2")), Poly::parse("y^2"));
    EXPECT_EQ(elementary_differential(mi("x{-1} x{0}"), field("y")), Poly::parse("y"));
    EXPECT_EQ(elementary_differential(mi("x{-1}^2 x{1}"), field("y^2")), Poly::parse("2*y^4"));
    EXPECT_THROW(elementary_differential(mi("x{0}"), field("y")), WeightError);
}

TEST(ElementaryDifferential, NovikovMorphismLaw) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<MultiIndex> monos;
    for (int d = 1; d <= 4; ++d)
        for (auto& k : enumerate_monomials(d, Alphabet())) monos.push_back(std::move(k));
    for (const auto& p : monos)
        for (const auto& q : monos) {
            const FieldFamily f{{Decoration(), Poly(std::vector<Rational>{coeff(rng), coeff(rng), coeff(rng), coeff(rng)})}};
            EXPECT_EQ(elementary_differential(novikov(p, q), f),
                      elementary_differential(p, f) * elementary_differential(q, f).derivative());
        }
}

TEST(ElementaryDifferential, AgreesWithTreeDifferential) {
    const FieldFamily f = field("1 + 2*y - y^2 + 1/3*y^3");
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n, Alphabet())) EXPECT_EQ(tree_differential(t, f), elementary_differential(phi(t), f));
    const Alphabet ab = Alphabet::parse("a,b");
    const FieldFamily g = parse_field_family("a=y^2; b=1 - y", ab);
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_trees(n, ab)) EXPECT_EQ(tree_differential(t, g), elementary_differential(phi(t), g));
}

TEST(BSeries, Truncation) {
    CoeffMap ones;
    ones.fallback = 1;
    EXPECT_EQ(bseries_truncated(ones, field("y"), 3), Poly::parse("5/2*y"));
    EXPECT_TRUE(bseries_truncated(CoeffMap{}, field("1 + y^3"), 5).is_zero());
    CoeffMap indicator;
    indicator.values[mi("x{-1}")] = 1;
    EXPECT_EQ(bseries_truncated(indicator, field("y^2"), 1), Poly::parse("y^2"));
    EXPECT_THROW(bseries_truncated(ones, field("y"), 9), BoundError);
}

TEST(BSeries, FieldFamilyErrors) {
    EXPECT_THROW(parse_field_family("y", Alphabet::parse("a,b")), AlphabetError);
    EXPECT_THROW(parse_field_family("a=y", Alphabet::parse("a,b")), AlphabetError);
    EXPECT_THROW(parse_field_family("c=y", Alphabet()), AlphabetError);
}
