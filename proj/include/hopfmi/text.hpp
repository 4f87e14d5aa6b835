#pragma once

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "decoration.hpp"
#include "errors.hpp"
#include "forests.hpp"
#include "lincomb.hpp"
#include "multiindex.hpp"
#include "rational.hpp"

namespace hopfmi {

// Text forms:
//   monomial   x{-1}^2 x{0} x{1}      (x{a,-1} when the alphabet has several letters), unit `1`
//   bag        x{-1} (.) x{-1} x{0}   unit `1`
//   tree       a[a,a[a]]              (`a[]` abbreviates to `a`)
//   forest     a·a[a]  or  a a[a]     unit `1`
//   sums       2 x{-1} ⊗ x{-1}^2 x{1} + 3/2 ... - ...
// `(x)` is accepted for ⊗ and U+2212 for the minus sign.

struct TextStyle {
    bool show_decorations = false;

    static TextStyle for_alphabet(const Alphabet& alphabet) { return {!alphabet.singleton()}; }
};

inline constexpr std::string_view kTensorSymbol = "⊗";
inline constexpr std::string_view kForestSeparator = "·";
inline constexpr std::string_view kOdotSymbol = "(.)";

inline std::string format(const MultiIndex& k, const TextStyle& style = {}) {
    if (k.is_unit()) return "1";
    std::string out;
    for (const auto& e : k.entries()) {
        if (!out.empty()) out += ' ';
        out += "x{";
        if (style.show_decorations) out += e.variable.decoration.symbol() + ",";
        out += std::to_string(e.variable.slot) + "}";
        if (e.multiplicity != 1) out += "^" + std::to_string(e.multiplicity);
    }
    return out;
}

inline std::string format(const MonomialBag& bag, const TextStyle& style = {}) {
    if (bag.empty()) return "1";
    std::string out;
    for (const auto& f : bag) {
        if (!out.empty()) out += " (.) ";
        out += format(f, style);
    }
    return out;
}

inline std::string format(const Tree& t, const TextStyle& = {}) {
    std::string out = t.decoration().symbol();
    if (t.children().empty()) return out;
    out += '[';
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ',';
        out += format(t.children()[i]);
    }
    return out + ']';
}

inline std::string format(const Forest& f, const TextStyle& = {}) {
    if (f.empty()) return "1";
    std::string out;
    for (const auto& t : f) {
        if (!out.empty()) out += kForestSeparator;
        out += format(t);
    }
    return out;
}

template <class L, class R>
std::string format(const std::pair<L, R>& legs, const TextStyle& style = {}) {
    return format(legs.first, style) + " " + std::string(kTensorSymbol) + " " + format(legs.second, style);
}

template <class B>
std::string format(const std::vector<B>& legs, const TextStyle& style = {}) {
    std::string out;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i) out += " " + std::string(kTensorSymbol) + " ";
        out += format(legs[i], style);
    }
    return out;
}

/// Canonical-order text of a combination; `0` for the zero combination.
template <class K>
std::string format(const LinComb<K>& x, const TextStyle& style = {}) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : x) {
        const bool negative = coeff < 0;
        const Rational magnitude = negative ? Rational(-coeff) : coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const std::string key_text = format(key, style);
        if (key_text == "1")
            out += to_string(magnitude);
        else if (magnitude == 1)
            out += key_text;
        else
            out += to_string(magnitude) + " " + key_text;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& k) { return os << format(k, {true}); }
inline std::ostream& operator<<(std::ostream& os, const Tree& t) { return os << format(t); }
template <class T>
std::ostream& operator<<(std::ostream& os, const Multiset<T>& m) {
    return os << format(m, {true});
}
template <class K>
std::ostream& operator<<(std::ostream& os, const LinComb<K>& x) {
    return os << format(x, {true});
}

enum class Sort { MultiIndex, Bag, Tree, Forest };

inline std::string_view sort_name(Sort s) {
    switch (s) {
        case Sort::MultiIndex: return "multiindex";
        case Sort::Bag: return "bag";
        case Sort::Tree: return "tree";
        case Sort::Forest: return "forest";
    }
    return "?";
}

inline Sort parse_sort(std::string_view name) {
    if (name == "multiindex") return Sort::MultiIndex;
    if (name == "bag") return Sort::Bag;
    if (name == "tree") return Sort::Tree;
    if (name == "forest") return Sort::Forest;
    throw SortError("unknown sort '" + std::string(name) + "'");
}

/// Multi-indices and bags are written with `x{`; everything else is read as forests.
inline Sort detect_sort(std::string_view text) {
    return text.find("x{") != std::string_view::npos ? Sort::Bag : Sort::Forest;
}

/// Recursive-descent parser for the text forms above.
class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    MultiIndex monomial() {
        skip_ws();
        if (at_unit_literal()) {
            ++pos_;
            return {};
        }
        std::vector<MultiIndex::Entry> entries;
        do {
            entries.push_back(factor());
            skip_ws();
        } while (peek() == 'x');
        return MultiIndex(std::move(entries));
    }

    MonomialBag bag() {
        skip_ws();
        const std::size_t start = pos_;
        if (at_unit_literal()) {
            ++pos_;
            return {};
        }
        std::vector<MultiIndex> factors;
        for (;;) {
            const std::size_t at = pos_;
            MultiIndex m = monomial();
            if (m.is_unit()) throw SyntaxError("the unit cannot be a bag factor", at);
            if (m.weight() != -1)
                throw WeightError("bag factor '" + format(m, TextStyle::for_alphabet(alphabet_)) + "' has weight " +
                                  std::to_string(m.weight()) + ", expected -1 (at position " + std::to_string(at) +
                                  ")");
            factors.push_back(std::move(m));
            skip_ws();
            if (!consume(kOdotSymbol)) break;
        }
        (void)start;
        return MonomialBag(std::move(factors));
    }

    Tree tree() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string name = identifier();
        if (name.empty()) throw SyntaxError("expected a tree", at);
        if (name == "x" && peek() == '{') throw SortError("found a monomial where a tree or forest was expected");
        Decoration d(name);
        if (!alphabet_.contains(d))
            throw AlphabetError("decoration '" + name + "' is not in the alphabet " + alphabet_.to_string());
        std::vector<Tree> children;
        skip_ws();
        if (consume("[")) {
            skip_ws();
            if (!consume("]")) {
                for (;;) {
                    children.push_back(tree());
                    skip_ws();
                    if (consume("]")) break;
                    if (!consume(",")) throw SyntaxError("expected ',' or ']'", pos_);
                }
            }
        }
        return Tree(std::move(d), std::move(children));
    }

    Forest forest() {
        skip_ws();
        if (at_unit_literal()) {
            ++pos_;
            return {};
        }
        std::vector<Tree> trees;
        trees.push_back(tree());
        for (;;) {
            skip_ws();
            if (consume(kForestSeparator) || consume("*")) {
                trees.push_back(tree());
            } else if (at_identifier()) {
                trees.push_back(tree());
            } else {
                break;
            }
        }
        return Forest(std::move(trees));
    }

    /// A basis element of the given kind.
    template <class K>
    K key();

    /// Σ ±c·key; `parse_key` reads one basis element. A bare rational is c·unit.
    template <class K>
    LinComb<K> lincomb() {
        return sum<K>([this] { return key<K>(); });
    }

    template <class L, class R>
    Tensor2<L, R> tensor2() {
        return sum<std::pair<L, R>>([this] {
            L left = key<L>();
            expect_tensor();
            R right = key<R>();
            return std::pair<L, R>{std::move(left), std::move(right)};
        });
    }

    template <class B>
    TensorN<B> tensor_n() {
        return sum<std::vector<B>>([this] {
            std::vector<B> legs{key<B>()};
            skip_ws();
            while (at_tensor()) {
                expect_tensor();
                legs.push_back(key<B>());
                skip_ws();
            }
            return legs;
        });
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
    }

    std::size_t position() const noexcept { return pos_; }

private:
    template <class K, class ReadKey>
    LinComb<K> sum(ReadKey&& read_key) {
        LinComb<K> out;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '0' && (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            // the zero combination
            const std::size_t save = pos_;
            ++pos_;
            skip_ws();
            if (pos_ == text_.size()) return out;
            pos_ = save;
        }
        bool first = true;
        for (;;) {
            skip_ws();
            Rational sign = 1;
            if (consume_minus()) {
                sign = -1;
            } else if (consume("+")) {
            } else if (!first) {
                break;
            }
            first = false;
            skip_ws();
            Rational coeff = 1;
            if (std::isdigit(static_cast<unsigned char>(peek())) && !at_unit_literal()) {
                coeff = rational();
                skip_ws();
                consume("*");
                skip_ws();
                if (!at_key_start()) {
                    // a bare rational: c times the unit key
                    save_and_restore_unit(coeff);
                }
            } else if (at_unit_literal()) {
                // `1` followed by a key is a coefficient, otherwise it is the unit key
                const std::size_t save = pos_;
                ++pos_;
                skip_ws();
                consume("*");
                skip_ws();
                if (!at_key_start() || at_unit_literal()) pos_ = save;
            }
            out.add(read_key(), sign * coeff);
        }
        return out;
    }

    // After a bare rational, rewind so the next key read sees a synthetic unit.
    void save_and_restore_unit(const Rational&) { pending_unit_ = true; }

    bool at_key_start() {
        skip_ws();
        const char c = peek();
        return c == 'x' || at_identifier() || at_unit_literal();
    }

    bool at_identifier() const {
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }

    bool at_unit_literal() const {
        if (pos_ >= text_.size() || text_[pos_] != '1') return false;
        if (pos_ + 1 == text_.size()) return true;
        const char next = text_[pos_ + 1];
        return !std::isdigit(static_cast<unsigned char>(next)) && next != '/';
    }

    bool at_tensor() {
        skip_ws();
        return text_.substr(pos_).starts_with(kTensorSymbol) || text_.substr(pos_).starts_with("(x)");
    }

    void expect_tensor() {
        skip_ws();
        if (!consume(kTensorSymbol) && !consume("(x)")) throw SyntaxError("expected '⊗'", pos_);
    }

    bool consume_minus() {
        return consume("-") || consume("−");
    }

    MultiIndex::Entry factor() {
        const std::size_t at = pos_;
        if (!consume("x")) throw SyntaxError("expected a factor x{...}", at);
        if (!consume("{")) throw SyntaxError("expected '{'", pos_);
        skip_ws();
        Decoration d;
        bool have_decoration = false;
        if (at_identifier()) {
            const std::size_t name_at = pos_;
            d = Decoration(identifier());
            if (!alphabet_.contains(d))
                throw AlphabetError("decoration '" + d.symbol() + "' is not in the alphabet " + alphabet_.to_string() +
                                    " (at position " + std::to_string(name_at) + ")");
            have_decoration = true;
            skip_ws();
            if (!consume(",")) throw SyntaxError("expected ',' after the decoration", pos_);
        }
        if (!have_decoration) {
            if (!alphabet_.singleton())
                throw AlphabetError("a decoration is required at position " + std::to_string(pos_) +
                                    " when the alphabet has several letters");
            d = alphabet_.front();
        }
        skip_ws();
        const int slot = integer();
        if (slot < -1) throw SyntaxError("slot must be >= -1", at);
        skip_ws();
        if (!consume("}")) throw SyntaxError("expected '}'", pos_);
        int power = 1;
        if (consume("^")) {
            power = integer();
            if (power < 1) throw SyntaxError("exponent must be positive", pos_);
        }
        return {Variable{std::move(d), slot}, power};
    }

    int integer() {
        const std::size_t at = pos_;
        std::string digits;
        if (consume_minus()) digits += '-';
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
        if (digits.empty() || digits == "-") throw SyntaxError("expected an integer", at);
        return std::stoi(digits);
    }

    Rational rational() {
        const std::size_t at = pos_;
        std::string token;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            token += text_[pos_++];
        try {
            return parse_rational(token);
        } catch (const std::invalid_argument&) {
            throw SyntaxError("malformed coefficient '" + token + "'", at);
        }
    }

    std::string identifier() {
        std::string out;
        if (!at_identifier()) return out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) break;
            out += c;
            ++pos_;
        }
        return out;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(std::string_view token) {
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool take_pending_unit() {
        const bool pending = pending_unit_;
        pending_unit_ = false;
        return pending;
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
    bool pending_unit_ = false;
};

template <>
inline MultiIndex Parser::key<MultiIndex>() {
    if (take_pending_unit()) return {};
    skip_ws();
    if (text_.substr(pos_).starts_with(kOdotSymbol)) throw SortError("found '(.)' in a multi-index expression");
    MultiIndex m = monomial();
    skip_ws();
    if (text_.substr(pos_).starts_with(kOdotSymbol)) throw SortError("found '(.)' in a multi-index expression");
    return m;
}

template <>
inline MonomialBag Parser::key<MonomialBag>() {
    if (take_pending_unit()) return {};
    skip_ws();
    if (at_identifier() && peek() != 'x') throw SortError("found a tree where a bag was expected");
    return bag();
}

template <>
inline Tree Parser::key<Tree>() {
    if (take_pending_unit()) throw SortError("the unit is not a tree");
    Tree t = tree();
    skip_ws();
    if (text_.substr(pos_).starts_with(kForestSeparator) || at_identifier())
        throw SortError("found a forest where a single tree was expected");
    return t;
}

template <>
inline Forest Parser::key<Forest>() {
    if (take_pending_unit()) return {};
    return forest();
}

/// A parsed expression of one declared sort.
struct Expr {
    Sort sort;
    std::variant<LinComb<MultiIndex>, LinComb<MonomialBag>, LinComb<Tree>, LinComb<Forest>> value;
};

template <class K>
LinComb<K> parse_lincomb(std::string_view text, const Alphabet& alphabet) {
    Parser p(text, alphabet);
    auto out = p.lincomb<K>();
    p.finish();
    return out;
}

template <class L, class R>
Tensor2<L, R> parse_tensor2(std::string_view text, const Alphabet& alphabet) {
    Parser p(text, alphabet);
    auto out = p.tensor2<L, R>();
    p.finish();
    return out;
}

template <class B>
TensorN<B> parse_tensor_n(std::string_view text, const Alphabet& alphabet) {
    Parser p(text, alphabet);
    auto out = p.tensor_n<B>();
    p.finish();
    return out;
}

inline Expr parse(std::string_view text, Sort sort, const Alphabet& alphabet) {
    switch (sort) {
        case Sort::MultiIndex: return {sort, parse_lincomb<MultiIndex>(text, alphabet)};
        case Sort::Bag: return {sort, parse_lincomb<MonomialBag>(text, alphabet)};
        case Sort::Tree: return {sort, parse_lincomb<Tree>(text, alphabet)};
        case Sort::Forest: return {sort, parse_lincomb<Forest>(text, alphabet)};
    }
    throw SortError("unknown sort");
}

}  // namespace hopfmi
