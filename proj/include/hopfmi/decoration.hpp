#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hopfmi {

/// A decoration symbol from the session alphabet. Symbols are identifiers
/// (`[A-Za-z_][A-Za-z0-9_]*`) and are totally ordered as strings.
class Decoration {
public:
    Decoration() : symbol_("a") {}
    explicit Decoration(std::string symbol) : symbol_(std::move(symbol)) {
        if (!is_identifier(symbol_)) throw AlphabetError("invalid decoration symbol '" + symbol_ + "'");
    }

    const std::string& symbol() const noexcept { return symbol_; }

    static bool is_identifier(std::string_view s) {
        if (s.empty()) return false;
        auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
        if (!alpha(s.front())) return false;
        return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
    }

    friend bool operator==(const Decoration&, const Decoration&) = default;
    friend auto operator<=>(const Decoration&, const Decoration&) = default;

private:
    std::string symbol_;
};

/// Finite, totally ordered decoration set. Defaults to {a}.
class Alphabet {
public:
    Alphabet() : letters_{Decoration("a")} {}

    explicit Alphabet(std::vector<Decoration> letters) : letters_(std::move(letters)) {
        std::sort(letters_.begin(), letters_.end());
        letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
        if (letters_.empty()) throw AlphabetError("alphabet must not be empty");
    }

    /// Parses a comma-separated list such as `a,b`.
    static Alphabet parse(std::string_view spec) {
        std::vector<Decoration> letters;
        std::size_t start = 0;
        while (start <= spec.size()) {
            auto comma = spec.find(',', start);
            if (comma == std::string_view::npos) comma = spec.size();
            std::string item(spec.substr(start, comma - start));
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            if (std::find(letters.begin(), letters.end(), Decoration(item)) != letters.end())
                throw AlphabetError("letter '" + item + "' appears twice in the alphabet");
            letters.emplace_back(item);
            start = comma + 1;
        }
        return Alphabet(std::move(letters));
    }

    const std::vector<Decoration>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool singleton() const noexcept { return letters_.size() == 1; }
    const Decoration& front() const { return letters_.front(); }

    bool contains(const Decoration& d) const { return std::binary_search(letters_.begin(), letters_.end(), d); }

    void require(const Decoration& d) const {
        if (!contains(d)) throw AlphabetError("decoration '" + d.symbol() + "' is not in the alphabet " + to_string());
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += ",";
            out += letters_[i].symbol();
        }
        return out + "}";
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Decoration> letters_;
};

}  // namespace hopfmi
