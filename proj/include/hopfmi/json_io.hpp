#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bseries.hpp"
#include "errors.hpp"
#include "fertility.hpp"
#include "forests.hpp"
#include "lincomb.hpp"
#include "multiindex.hpp"
#include "text.hpp"

namespace hopfmi {

using Json = nlohmann::ordered_json;

template <class K>
struct KeySort;
template <>
struct KeySort<MultiIndex> {
    static constexpr const char* name = "multiindex";
};
template <>
struct KeySort<MonomialBag> {
    static constexpr const char* name = "bag";
};
template <>
struct KeySort<Tree> {
    static constexpr const char* name = "tree";
};
template <>
struct KeySort<Forest> {
    static constexpr const char* name = "forest";
};

/// One basis element from its text form.
template <class K>
K parse_key(std::string_view text, const Alphabet& alphabet) {
    Parser p(text, alphabet);
    K key = p.key<K>();
    p.finish();
    return key;
}

template <class K>
Json to_json(const LinComb<K>& x, const TextStyle& style = {}) {
    Json terms = Json::array();
    for (const auto& [key, c] : x) terms.push_back({{"coeff", to_string(c)}, {"key", format(key, style)}});
    return {{"sort", KeySort<K>::name}, {"terms", std::move(terms)}};
}

template <class L, class R>
Json to_json(const Tensor2<L, R>& x, const TextStyle& style = {}) {
    Json terms = Json::array();
    for (const auto& [legs, c] : x)
        terms.push_back(
            {{"coeff", to_string(c)}, {"key", format(legs.first, style)}, {"right", format(legs.second, style)}});
    return {{"sort", std::string("tensor(") + KeySort<L>::name + "," + KeySort<R>::name + ")"},
            {"terms", std::move(terms)}};
}

template <class B>
Json to_json(const TensorN<B>& x, std::size_t rank, const TextStyle& style = {}) {
    Json terms = Json::array();
    for (const auto& [legs, c] : x) {
        Json text_legs = Json::array();
        for (const auto& leg : legs) text_legs.push_back(format(leg, style));
        terms.push_back({{"coeff", to_string(c)}, {"legs", std::move(text_legs)}});
    }
    std::string sort = "tensor(";
    for (std::size_t i = 0; i < rank; ++i) sort += std::string(i ? "," : "") + KeySort<B>::name;
    return {{"sort", sort + ")"}, {"terms", std::move(terms)}};
}

inline Json to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
    return {{"sort", "poly"}, {"coefficients", std::move(coeffs)}, {"text", p.to_string()}};
}

namespace detail {

inline void require_sort(const Json& doc, const std::string& expected) {
    if (!doc.is_object() || !doc.contains("terms")) throw SyntaxError("JSON document has no 'terms' array", 0);
    if (doc.contains("sort") && doc.at("sort").get<std::string>() != expected)
        throw SortError("JSON sort '" + doc.at("sort").get<std::string>() + "' where '" + expected + "' was expected");
}

inline Rational json_coeff(const Json& term) {
    try {
        return parse_rational(term.at("coeff").get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SyntaxError(e.what(), 0);
    }
}

}  // namespace detail

template <class K>
LinComb<K> lincomb_from_json(const Json& doc, const Alphabet& alphabet) {
    detail::require_sort(doc, KeySort<K>::name);
    LinComb<K> out;
    for (const auto& term : doc.at("terms"))
        out.add(parse_key<K>(term.at("key").get<std::string>(), alphabet), detail::json_coeff(term));
    return out;
}

template <class L, class R>
Tensor2<L, R> tensor2_from_json(const Json& doc, const Alphabet& alphabet) {
    detail::require_sort(doc, std::string("tensor(") + KeySort<L>::name + "," + KeySort<R>::name + ")");
    Tensor2<L, R> out;
    for (const auto& term : doc.at("terms"))
        out.add({parse_key<L>(term.at("key").get<std::string>(), alphabet),
                 parse_key<R>(term.at("right").get<std::string>(), alphabet)},
                detail::json_coeff(term));
    return out;
}

template <class B>
TensorN<B> tensor_n_from_json(const Json& doc, const Alphabet& alphabet) {
    if (!doc.is_object() || !doc.contains("terms")) throw SyntaxError("JSON document has no 'terms' array", 0);
    TensorN<B> out;
    for (const auto& term : doc.at("terms")) {
        std::vector<B> legs;
        for (const auto& leg : term.at("legs")) legs.push_back(parse_key<B>(leg.get<std::string>(), alphabet));
        out.add(std::move(legs), detail::json_coeff(term));
    }
    return out;
}

/// α for B-series: {"default": "p/q", "values": {"x{-1}": "1", ...}}.
inline CoeffMap coeff_map_from_json(const Json& doc, const Alphabet& alphabet) {
    CoeffMap out;
    if (doc.contains("default")) out.fallback = parse_rational(doc.at("default").get<std::string>());
    if (doc.contains("values")) {
        for (const auto& [key, value] : doc.at("values").items()) {
            MultiIndex k = parse_key<MultiIndex>(key, alphabet);
            require_weight_minus_one(k, "B-series coefficient");
            out.values[k] = parse_rational(value.get<std::string>());
        }
    }
    return out;
}

inline constexpr const char* kCacheGenerator = "hopfmi";
inline constexpr int kCacheVersion = 1;

struct CacheLoadReport {
    std::size_t loaded = 0;
    std::size_t rejected = 0;
    std::string error;
};

/// Writes the fiber cache; keys carry explicit decorations.
inline void save_fiber_cache(const std::filesystem::path& path, const Alphabet& alphabet,
                             const FiberCache& cache = FiberCache::global()) {
    const TextStyle style{true};
    Json letters = Json::array();
    for (const auto& a : alphabet.letters()) letters.push_back(a.symbol());
    Json fibers = Json::object();
    for (const auto& [k, trees] : cache.snapshot()) {
        bool inside = true;
        for (const auto& d : k.decorations()) inside = inside && alphabet.contains(d);
        if (!inside) continue;
        Json list = Json::array();
        for (const auto& t : trees) list.push_back(format(t));
        fibers[format(k, style)] = std::move(list);
    }
    const Json doc = {{"generator", kCacheGenerator},
                      {"version", kCacheVersion},
                      {"alphabet", std::move(letters)},
                      {"fibers", std::move(fibers)}};
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << doc.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

/// Seeds the fiber cache from disk. Every entry is re-checked (Φ(t) = x^k for
/// each tree, trees distinct) and dropped on mismatch.
inline CacheLoadReport load_fiber_cache(const std::filesystem::path& path, FiberCache& cache = FiberCache::global()) {
    CacheLoadReport report;
    std::ifstream in(path);
    if (!in) {
        report.error = "cannot read cache file " + path.string();
        return report;
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        report.error = std::string("malformed cache file: ") + e.what();
        return report;
    }
    if (doc.value("generator", "") != kCacheGenerator || doc.value("version", 0) != kCacheVersion) {
        report.error = "cache file was written by a different generator or version";
        return report;
    }
    std::vector<Decoration> letters;
    for (const auto& s : doc.value("alphabet", Json::array())) letters.emplace_back(s.get<std::string>());
    const Alphabet alphabet(letters.empty() ? std::vector<Decoration>{Decoration()} : letters);
    const Json fibers = doc.value("fibers", Json::object());
    for (const auto& [key, list] : fibers.items()) {
        try {
            const MultiIndex k = parse_key<MultiIndex>(key, alphabet);
            require_weight_minus_one(k, "cached fiber");
            std::vector<Tree> trees;
            for (const auto& s : list) trees.push_back(parse_key<Tree>(s.get<std::string>(), alphabet));
            std::sort(trees.begin(), trees.end());
            const bool distinct = std::adjacent_find(trees.begin(), trees.end()) == trees.end();
            bool valid = distinct && !trees.empty();
            for (const auto& t : trees) valid = valid && phi(t) == k;
            if (!valid) {
                ++report.rejected;
                continue;
            }
            if (cache.insert(k, std::move(trees))) ++report.loaded;
        } catch (const std::exception&) {
            ++report.rejected;
        }
    }
    return report;
}

}  // namespace hopfmi
