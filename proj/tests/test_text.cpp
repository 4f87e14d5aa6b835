#include <random>

#include <gtest/gtest.h>

#include "hopfmi.hpp"

using namespace hopfmi;

namespace {

const Alphabet kOne;
const Alphabet kTwo = Alphabet::parse("a,b");

template <class K>
std::vector<K> basis_up_to(int n, const Alphabet& a);

template <>
std::vector<MultiIndex> basis_up_to(int n, const Alphabet& a) {
    std::vector<MultiIndex> out{MultiIndex()};
    for (int d = 1; d <= n; ++d)
        for (auto& k : enumerate_monomials(d, a)) out.push_back(std::move(k));
    out.push_back(parse_key<MultiIndex>(a.singleton() ? "x{0}^2 x{3}" : "x{a,0}^2 x{b,3}", a));
    return out;
}
template <>
std::vector<MonomialBag> basis_up_to(int n, const Alphabet& a) {
    std::vector<MonomialBag> out;
    for (int d = 0; d <= n; ++d)
        for (auto& b : enumerate_bags(d, a)) out.push_back(std::move(b));
    return out;
}
template <>
std::vector<Tree> basis_up_to(int n, const Alphabet& a) {
    std::vector<Tree> out;
    for (int d = 1; d <= n; ++d)
        for (auto& t : enumerate_trees(d, a)) out.push_back(std::move(t));
    return out;
}
template <>
std::vector<Forest> basis_up_to(int n, const Alphabet& a) {
    std::vector<Forest> out;
    for (int d = 0; d <= n; ++d)
        for (auto& f : enumerate_forests(d, a)) out.push_back(std::move(f));
    return out;
}

template <class K>
LinComb<K> random_combination(const std::vector<K>& pool, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    LinComb<K> out;
    for (int i = 0; i < 4; ++i) out.add(pool[pick(rng)], ratio(num(rng), den(rng)));
    return out;
}

template <class K>
void round_trip_all(const Alphabet& a, int n) {
    const auto style = TextStyle::for_alphabet(a);
    std::mt19937_64 rng(11);
    const auto pool = basis_up_to<K>(n, a);
    for (const auto& k : pool) {
        EXPECT_EQ(parse_key<K>(format(k, style), a), k) << format(k, style);
        EXPECT_EQ(parse_key<K>(format(k, TextStyle{true}), a), k);
    }
    for (int i = 0; i < 50; ++i) {
        const auto x = random_combination(pool, rng);
        EXPECT_EQ(parse_lincomb<K>(format(x, style), a), x) << format(x, style);
        EXPECT_EQ(lincomb_from_json<K>(Json::parse(to_json(x, style).dump()), a), x);
    }
}

}  // namespace

TEST(Parse, Monomials) {
    EXPECT_EQ(parse_key<MultiIndex>("x{-1}^2 x{0} x{1}", kOne).degree(), 4);
    EXPECT_EQ(parse_key<MultiIndex>("x{1} x{-1} x{-1} x{0}", kOne), parse_key<MultiIndex>("x{-1}^2 x{0} x{1}", kOne));
    EXPECT_EQ(parse_key<MultiIndex>("x{a,-1}", kOne), parse_key<MultiIndex>("x{-1}", kOne));
    EXPECT_TRUE(parse_key<MultiIndex>("1", kOne).is_unit());
}

TEST(Parse, Coefficients) {
    const auto x = parse_lincomb<MultiIndex>("3/2 x{-1} − 1/2 x{-1} + 2", kOne);
    EXPECT_EQ(x.coefficient(parse_key<MultiIndex>("x{-1}", kOne)), 1);
    EXPECT_EQ(x.coefficient(MultiIndex()), 2);
    EXPECT_TRUE(parse_lincomb<Forest>("0", kOne).is_zero());
    EXPECT_EQ(parse_lincomb<Forest>("a - a", kOne), LinComb<Forest>());
}

TEST(Parse, TensorSeparators) {
    const auto a = parse_tensor2<MonomialBag, MonomialBag>("x{-1} ⊗ 1", kOne);
    const auto b = parse_tensor2<MonomialBag, MonomialBag>("x{-1} (x) 1", kOne);
    EXPECT_EQ(a, b);
    EXPECT_EQ(parse_tensor_n<Forest>("a ⊗ a[a] ⊗ 1", kOne).begin()->first.size(), 3u);
}

TEST(Parse, ForestSeparators) {
    const Forest f = parse_key<Forest>("a·a[a]", kOne);
    EXPECT_EQ(parse_key<Forest>("a * a[a]", kOne), f);
    EXPECT_EQ(parse_key<Forest>("a[a] a", kOne), f);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
    try {
        (void)parse_key<MultiIndex>("x{-1} x{0", kOne);
        FAIL() << "expected a syntax error";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    EXPECT_THROW(parse_key<Tree>("a[a", kOne), SyntaxError);
    EXPECT_THROW(parse_lincomb<MultiIndex>("2 +", kOne), SyntaxError);
    EXPECT_THROW(parse_key<MultiIndex>("x{-2}", kOne), SyntaxError);
    EXPECT_THROW(parse_key<MultiIndex>("x{-1} trailing", kOne), SyntaxError);
}

TEST(Parse, SortErrors) {
    EXPECT_THROW(parse_key<Tree>("x{-1}", kOne), SortError);
    EXPECT_THROW(parse_key<MultiIndex>("x{-1} (.) x{-1}", kOne), SortError);
    EXPECT_THROW(parse_key<Tree>("a·a", kOne), SortError);
    EXPECT_THROW(parse_sort("graph"), SortError);
    EXPECT_EQ(parse_sort("bag"), Sort::Bag);
    EXPECT_EQ(detect_sort("2 x{-1}"), Sort::Bag);
    EXPECT_EQ(detect_sort("a[a]"), Sort::Forest);
}

TEST(Parse, AlphabetErrors) {
    EXPECT_THROW(parse_key<Tree>("c[a]", kTwo), AlphabetError);
    EXPECT_THROW(parse_key<MultiIndex>("x{-1}", kTwo), AlphabetError);
    EXPECT_THROW(parse_key<MultiIndex>("x{c,-1}", kTwo), AlphabetError);
    EXPECT_THROW(Alphabet::parse("a,a"), AlphabetError);
}

TEST(Parse, BagFactorsMustHaveWeightMinusOne) {
    EXPECT_THROW(parse_key<MonomialBag>("x{0}", kOne), WeightError);
    EXPECT_THROW(parse_key<MonomialBag>("x{-1} (.) x{0}", kOne), WeightError);
}

TEST(Format, Examples) {
    EXPECT_EQ(format(parse_key<MultiIndex>("x{0} x{-1} x{-1}", kOne)), "x{-1}^2 x{0}");
    EXPECT_EQ(format(parse_key<MultiIndex>("x{b,0} x{a,-1}", kTwo), TextStyle{true}), "x{a,-1} x{b,0}");
    EXPECT_EQ(format(MultiIndex()), "1");
    EXPECT_EQ(format(parse_key<Tree>("a[a[a],a]", kOne)), "a[a,a[a]]");
    EXPECT_EQ(format(parse_key<Forest>("a[a] a", kOne)), "a·a[a]");
    EXPECT_EQ(format(LinComb<Forest>()), "0");
    EXPECT_EQ(format(parse_lincomb<MultiIndex>("-x{-1} + 1/2", kOne)), "1/2 - x{-1}");
}

TEST(RoundTrip, TextAndJsonOneLetter) {
    round_trip_all<MultiIndex>(kOne, 5);
    round_trip_all<MonomialBag>(kOne, 4);
    round_trip_all<Tree>(kOne, 5);
    round_trip_all<Forest>(kOne, 4);
}

TEST(RoundTrip, TextAndJsonTwoLetters) {
    round_trip_all<MultiIndex>(kTwo, 4);
    round_trip_all<MonomialBag>(kTwo, 3);
    round_trip_all<Tree>(kTwo, 4);
    round_trip_all<Forest>(kTwo, 3);
}

TEST(RoundTrip, Tensors) {
    const auto k = parse_key<MultiIndex>("x{-1}^2 x{0} x{1}", kOne);
    const auto delta = coproduct_lot(k);
    EXPECT_EQ((parse_tensor2<MonomialBag, MonomialBag>(format(delta), kOne)), delta);
    EXPECT_EQ((tensor2_from_json<MonomialBag, MonomialBag>(Json::parse(to_json(delta).dump()), kOne)), delta);
    const auto triple = coproduct_lot(LotElement(as_bag(k)), 3);
    EXPECT_EQ(parse_tensor_n<MonomialBag>(format(triple), kOne), triple);
    EXPECT_EQ(tensor_n_from_json<MonomialBag>(Json::parse(to_json(triple, 3).dump()), kOne), triple);
    const auto bck = coproduct_bck(parse_key<Forest>("a[a,a[a]]", kOne));
    EXPECT_EQ((parse_tensor2<Forest, Forest>(format(bck), kOne)), bck);
}

TEST(Json, ZeroAndSortMismatch) {
    const Json zero = to_json(LinComb<Forest>());
    EXPECT_TRUE(zero.at("terms").empty());
    EXPECT_TRUE(lincomb_from_json<Forest>(zero, kOne).is_zero());
    EXPECT_THROW(lincomb_from_json<Tree>(zero, kOne), SortError);
    EXPECT_THROW(lincomb_from_json<Forest>(Json::object(), kOne), SyntaxError);
}

TEST(Json, PolyAndCoefficientMap) {
    const Json p = to_json(Poly::parse("1/2 + y^2"));
    EXPECT_EQ(p.at("coefficients"), Json::array({"1/2", "0", "1"}));
    const auto alpha = coeff_map_from_json(Json::parse(R"({"default":"1/3","values":{"x{-1}":"2"}})"), kOne);
    EXPECT_EQ(alpha(parse_key<MultiIndex>("x{-1}", kOne)), 2);
    EXPECT_EQ(alpha(parse_key<MultiIndex>("x{-1} x{0}", kOne)), ratio(1, 3));
    EXPECT_THROW(coeff_map_from_json(Json::parse(R"({"values":{"x{0}":"2"}})"), kOne), WeightError);
}
