#include <gtest/gtest.h>

#include "hopfmi.hpp"
#include "oracles.hpp"

using namespace hopfmi;

namespace {

MultiIndex mi(std::string_view text) { return parse_key<MultiIndex>(text, Alphabet()); }

}  // namespace

TEST(Multiset, SplitsCountBinomials) {
    const Multiset<int> m{1, 1, 2};
    Integer total = 0;
    for (const auto& s : multiset_splits(m)) {
        EXPECT_EQ(s.left * s.right, m);
        total += s.multiplicity;
    }
    EXPECT_EQ(total, 8);
}

TEST(LinComb, DropsZeros) {
    LinComb<int> x(3, 2);
    x.add(3, -2);
    EXPECT_TRUE(x.is_zero());
    x.add(4, ratio(1, 2));
    EXPECT_EQ(x.coefficient(4), ratio(1, 2));
    EXPECT_EQ((x - x).size(), 0u);
}

TEST(MultiIndex, Stats) {
    const auto k = mi("x{-1}^2 x{0} x{1}");
    EXPECT_EQ(k.degree(), 4);
    EXPECT_EQ(k.weight(), -1);
    EXPECT_EQ(k.factorial(), 2);
    EXPECT_TRUE(MultiIndex().is_unit());
    EXPECT_THROW(MultiIndex::var(-2), std::exception);
}

TEST(MultiIndex, Derivations) {
    EXPECT_EQ(d_partial(mi("x{-1} x{0}")), LinComb<MultiIndex>(mi("x{0}^2")) + LinComb<MultiIndex>(mi("x{-1} x{1}")));
    EXPECT_EQ(dbar(mi("x{-1}")), LinComb<MultiIndex>());
    EXPECT_EQ(dbar(mi("x{1}^2")), LinComb<MultiIndex>(mi("x{0} x{1}"), 2));
    EXPECT_EQ(dbar_pow(mi("x{0} x{1}"), 2), LinComb<MultiIndex>(mi("x{-1} x{0}"), 3));
}

TEST(MultiIndex, NovikovProduct) {
    const auto p = mi("x{-1}");
    EXPECT_EQ(novikov(p, p), LinComb<MultiIndex>(mi("x{-1} x{0}")));
    EXPECT_EQ(novikov(p, mi("x{-1} x{0}")),
              LinComb<MultiIndex>(mi("x{-1} x{0}^2")) + LinComb<MultiIndex>(mi("x{-1}^2 x{1}")));
}

TEST(MultiIndex, MonomialCountsMatchPartitions) {
    for (int d = 1; d <= 8; ++d) {
        const auto got = enumerate_monomials(d, Alphabet());
        EXPECT_EQ(static_cast<long>(got.size()), oracle::partitions(d - 1)) << "degree " << d;
        EXPECT_EQ(got, oracle::weight_minus_one_monomials(d, Alphabet())) << "degree " << d;
    }
    const Alphabet ab = Alphabet::parse("a,b");
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(enumerate_monomials(d, ab), oracle::weight_minus_one_monomials(d, ab));
}

TEST(MultiIndex, EnumerationBound) { EXPECT_THROW(enumerate_monomials(9, Alphabet()), BoundError); }

TEST(AdmissibleCuts, GoldenDegreeFour) {
    const auto& cuts = mi_admissible_cuts(mi("x{-1}^2 x{0} x{1}"));
    ASSERT_EQ(cuts.size(), 7u);
    std::map<std::pair<MonomialBag, MultiIndex>, Integer> got;
    for (const auto& c : cuts) got[{c.bag, c.remainder}] = c.multiplicity;
    const auto bag = [](std::string_view s) { return parse_key<MonomialBag>(s, Alphabet()); };
    EXPECT_EQ((got[{bag("1"), mi("x{-1}^2 x{0} x{1}")}]), 1);
    EXPECT_EQ((got[{bag("x{-1}^2 x{0} x{1}"), mi("1")}]), 1);
    EXPECT_EQ((got[{bag("x{-1}"), mi("x{-1} x{0} x{1}")}]), 2);
    EXPECT_EQ((got[{bag("x{-1} x{0}"), mi("x{-1} x{1}")}]), 2);
    EXPECT_EQ((got[{bag("x{-1}^2 x{1}"), mi("x{0}")}]), 1);
    EXPECT_EQ((got[{bag("x{-1} (.) x{-1}"), mi("x{0} x{1}")}]), 1);
    EXPECT_EQ((got[{bag("x{-1} (.) x{-1} x{0}"), mi("x{1}")}]), 2);
}

TEST(AdmissibleCuts, MultiplicityMatchesLabelledCount) {
    for (const Alphabet& alphabet : {Alphabet(), Alphabet::parse("a,b")}) {
        const int top = alphabet.singleton() ? 7 : 4;
        for (int d = 1; d <= top; ++d)
            for (const auto& k : enumerate_monomials(d, alphabet)) {
                std::map<std::pair<MonomialBag, MultiIndex>, Integer> got;
                for (const auto& c : mi_admissible_cuts(k)) got[{c.bag, c.remainder}] = c.multiplicity;
                EXPECT_EQ(got, oracle::labelled_cuts(k)) << k;
            }
    }
}

TEST(AdmissibleCuts, RemainderWeight) {
    for (int d = 1; d <= 6; ++d)
        for (const auto& k : enumerate_monomials(d, Alphabet()))
            for (const auto& c : mi_admissible_cuts(k)) {
                EXPECT_EQ(c.remainder.weight(), c.r - 1);
                EXPECT_EQ(static_cast<int>(c.bag.size()), c.r);
                MultiIndex whole = c.remainder;
                for (const auto& f : c.bag) whole = whole * f;
                EXPECT_EQ(whole, k);
            }
}

TEST(AdmissibleCuts, RejectsWrongWeight) { EXPECT_THROW(mi_admissible_cuts(mi("x{0}")), WeightError); }

TEST(SymmetryFactor, BagSplitsIntoExternalAndInternal) {
    const auto b = parse_key<MonomialBag>("x{-1} (.) x{-1} (.) x{-1}^2 x{1}", Alphabet());
    const auto s = sigma_bag(b);
    EXPECT_EQ(s.external, 2);
    EXPECT_EQ(s.internal, 2);
    EXPECT_EQ(s.total, 4);
}

TEST(LOperator, AppendsSlot) {
    const auto b = parse_key<MonomialBag>("x{-1} (.) x{-1} x{0}", Alphabet());
    EXPECT_EQ(L_op(b, Decoration()), mi("x{-1}^2 x{0} x{1}"));
    EXPECT_EQ(L_op(MonomialBag{}, Decoration()), mi("x{-1}"));
}
