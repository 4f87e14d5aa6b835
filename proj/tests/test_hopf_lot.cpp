#include <random>

#include <gtest/gtest.h>

#include "hopfmi.hpp"

using namespace hopfmi;

namespace {

MultiIndex mi(std::string_view s) { return parse_key<MultiIndex>(s, Alphabet()); }
MonomialBag bag(std::string_view s) { return parse_key<MonomialBag>(s, Alphabet()); }
LotElement lot(std::string_view s) { return parse_lincomb<MonomialBag>(s, Alphabet()); }
LotTensor lt(std::string_view s) { return parse_tensor2<MonomialBag, MonomialBag>(s, Alphabet()); }

}  // namespace

TEST(CoproductLot, Primitive) { EXPECT_EQ(coproduct_lot(mi("x{-1}")), lt("x{-1} ⊗ 1 + 1 ⊗ x{-1}")); }

TEST(CoproductLot, EightTermGolden) {
    const LotTensor expected = lt(
        "x{-1}^2 x{0} x{1} ⊗ 1 + 1 ⊗ x{-1}^2 x{0} x{1} + 2 x{-1} ⊗ x{-1}^2 x{1} + 2 x{-1} ⊗ x{-1} x{0}^2"
        " + 2 x{-1} x{0} ⊗ x{-1} x{0} + x{-1}^2 x{1} ⊗ x{-1} + 3 x{-1} (.) x{-1} ⊗ x{-1} x{0}"
        " + 2 x{-1} (.) x{-1} x{0} ⊗ x{-1}");
    EXPECT_EQ(coproduct_lot(mi("x{-1}^2 x{0} x{1}")), expected);
    EXPECT_EQ(coproduct_dual_oracle(mi("x{-1}^2 x{0} x{1}")), expected);
}

TEST(CoproductLot, MatchesDualOracle) {
    for (int d = 1; d <= 5; ++d)
        for (const auto& k : enumerate_monomials(d, Alphabet())) EXPECT_EQ(coproduct_lot(k), coproduct_dual_oracle(k)) << k;
    for (int d = 1; d <= 3; ++d)
        for (const auto& k : enumerate_monomials(d, Alphabet::parse("a,b")))
            EXPECT_EQ(coproduct_lot(k), coproduct_dual_oracle(k)) << k;
}

TEST(CoproductLot, MultiplicativeOnRandomBags) {
    std::mt19937_64 rng(7);
    std::vector<MonomialBag> pool;
    for (int d = 1; d <= 3; ++d)
        for (auto& b : enumerate_bags(d, Alphabet())) pool.push_back(std::move(b));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 20; ++i) {
        const auto& b1 = pool[pick(rng)];
        const auto& b2 = pool[pick(rng)];
        EXPECT_EQ(coproduct_lot(b1 * b2), bag_tensor_product(coproduct_lot(b1), coproduct_lot(b2)));
        EXPECT_EQ(coproduct_lot(b1 * b2), coproduct_dual_oracle(b1 * b2));
    }
}

TEST(CoproductLot, WeightErrors) {
    EXPECT_THROW(coproduct_lot(mi("x{0}")), WeightError);
    EXPECT_THROW(coproduct_dual_oracle(mi("x{1}")), WeightError);
}

TEST(GrossmanLarson, Examples) {
    EXPECT_EQ(gl_bags(bag("x{-1}"), bag("x{-1}")), lot("x{-1} (.) x{-1} + x{-1} x{0}"));
    EXPECT_EQ(gl_bags(bag("1"), bag("x{-1} x{0}")), lot("x{-1} x{0}"));
    EXPECT_EQ(go_bags(bag("x{-1}"), bag("x{-1}")), lot("x{-1} x{0}"));
    EXPECT_EQ(go_bags(bag("x{-1} (.) x{-1}"), bag("x{-1}")), lot("x{-1}^2 x{1}"));
}

TEST(Lbar, Examples) {
    EXPECT_EQ(Lbar(mi("x{-1}^2 x{0} x{1}"), Decoration()), lot("x{-1}^2 x{1} + 2 x{-1} (.) x{-1} x{0}"));
    EXPECT_EQ(Lbar(mi("x{-1}"), Decoration()), lot("1"));
    EXPECT_THROW(Lbar(lot("x{-1} (.) x{-1}"), Decoration()), WeightError);
}

TEST(Antipode, Examples) {
    EXPECT_EQ(antipode_lot(lot("x{-1}")), lot("-x{-1}"));
    EXPECT_EQ(antipode_lot(lot("x{-1} x{0}")), lot("-x{-1} x{0} + x{-1} (.) x{-1}"));
    EXPECT_EQ(antipode_lot(lot("1")), lot("1"));
}

TEST(Antipode, ConvolutionInverse) {
    for (int d = 0; d <= 5; ++d)
        for (const auto& b : enumerate_bags(d, Alphabet())) {
            LotElement conv;
            for (const auto& [legs, c] : coproduct_lot(b)) conv.add(odot(antipode_lot(legs.first), LotElement(legs.second)), c);
            EXPECT_EQ(conv, d == 0 ? lot("1") : LotElement()) << b;
        }
}

TEST(CoproductLot, IteratedIsCoassociative) {
    for (int d = 1; d <= 5; ++d)
        for (const auto& k : enumerate_monomials(d, Alphabet())) {
            const LotElement x(as_bag(k));
            const auto via_right = coproduct_lot(x, 3);
            TensorN<MonomialBag> via_left;
            for (const auto& [legs, c] : coproduct_lot(k))
                for (const auto& [inner, c2] : coproduct_lot(legs.first))
                    via_left.add(std::vector<MonomialBag>{inner.first, inner.second, legs.second}, c * c2);
            EXPECT_EQ(via_right, via_left) << k;
        }
}
