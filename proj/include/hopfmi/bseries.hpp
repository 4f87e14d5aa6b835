#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decoration.hpp"
#include "errors.hpp"
#include "forests.hpp"
#include "multiindex.hpp"
#include "rational.hpp"

namespace hopfmi {

/// Polynomial in one variable y with exact coefficients; trailing zeros trimmed.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly y() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    static Poly monomial(Rational c, std::size_t power) {
        std::vector<Rational> coeffs(power + 1, Rational(0));
        coeffs[power] = std::move(c);
        return Poly(std::move(coeffs));
    }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coefficient(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rational(0); }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
        return Poly(std::move(out));
    }

    Poly derivative(int order) const {
        Poly out = *this;
        for (int i = 0; i < order && !out.is_zero(); ++i) out = out.derivative();
        return out;
    }

    Poly pow(int e) const {
        Poly out(Rational(1));
        for (int i = 0; i < e; ++i) out *= *this;
        return out;
    }

    Rational operator()(const Rational& y) const {
        Rational out = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * y + *it;
        return out;
    }

    Poly& operator+=(const Poly& other) {
        if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b * Rational(-1); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Rational& s) { return a * Poly(s); }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * Poly(s); }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// `c0 + c1*y + c2*y^2`, zero terms omitted; `0` for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            std::string var = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
            if (var.empty())
                out += hopfmi::to_string(mag);
            else if (mag == 1)
                out += var;
            else
                out += hopfmi::to_string(mag) + "*" + var;
        }
        return out;
    }

    /// Accepts sums of terms `c`, `c*y^e`, `c y`, `y^e`, `-y` and so on.
    static Poly parse(std::string_view text) {
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto digits = [&] {
            std::string out;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
            return out;
        };
        Poly out;
        bool first = true;
        skip();
        if (pos == text.size()) throw SyntaxError("empty polynomial", 0);
        while (pos < text.size()) {
            skip();
            Rational sign = 1;
            if (text.substr(pos).starts_with("-")) {
                sign = -1;
                ++pos;
            } else if (text.substr(pos).starts_with("−")) {
                sign = -1;
                pos += std::string_view("−").size();
            } else if (text.substr(pos).starts_with("+")) {
                ++pos;
            } else if (!first) {
                throw SyntaxError("expected '+' or '-' in polynomial", pos);
            }
            first = false;
            skip();
            const std::size_t term_at = pos;
            Rational coeff = 1;
            bool have_coeff = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string token = digits();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    const std::string den = digits();
                    if (den.empty()) throw SyntaxError("malformed rational coefficient", term_at);
                    token += "/" + den;
                }
                coeff = parse_rational(token);
                have_coeff = true;
                skip();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip();
                }
            }
            std::size_t power = 0;
            if (pos < text.size() && text[pos] == 'y') {
                ++pos;
                power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    const std::string e = digits();
                    if (e.empty()) throw SyntaxError("expected an exponent", pos);
                    power = static_cast<std::size_t>(std::stoul(e));
                }
            } else if (!have_coeff) {
                throw SyntaxError("expected a coefficient or 'y'", term_at);
            }
            out += monomial(sign * coeff, power);
            skip();
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// The family f = (f_a) of one-dimensional polynomial vector fields.
using FieldFamily = std::map<Decoration, Poly>;

/// Parses `y^2` (single-letter alphabets) or `a=y^2; b=1 + y`.
inline FieldFamily parse_field_family(std::string_view spec, const Alphabet& alphabet) {
    FieldFamily out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto end = spec.find(';', start);
        if (end == std::string_view::npos) end = spec.size();
        std::string_view item = spec.substr(start, end - start);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            if (!alphabet.singleton()) throw AlphabetError("field specification must name a decoration (a=POLY)");
            out[alphabet.front()] = Poly::parse(item);
        } else {
            std::string name(item.substr(0, eq));
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            Decoration d(name);
            alphabet.require(d);
            out[d] = Poly::parse(item.substr(eq + 1));
        }
        start = end + 1;
    }
    for (const auto& a : alphabet.letters())
        if (!out.contains(a)) throw AlphabetError("no vector field given for decoration '" + a.symbol() + "'");
    return out;
}

/// The linear functional α on weight -1 monomials: explicit values plus a default.
struct CoeffMap {
    std::map<MultiIndex, Rational> values;
    Rational fallback = 0;

    Rational operator()(const MultiIndex& k) const {
        auto it = values.find(k);
        return it == values.end() ? fallback : it->second;
    }
};

inline const Poly& field_of(const FieldFamily& f, const Decoration& a) {
    auto it = f.find(a);
    if (it == f.end()) throw AlphabetError("no vector field for decoration '" + a.symbol() + "'");
    return it->second;
}

/// Image of x^k under the Novikov morphism sending x_{-1}^a to f_a:
/// Π over entries of (f_a^{(j+1)})^{k_j^a}.
inline Poly elementary_differential(const MultiIndex& k, const FieldFamily& f) {
    require_weight_minus_one(k, "elementary_differential");
    Poly out(Rational(1));
    for (const auto& e : k.entries())
        out *= field_of(f, e.variable.decoration).derivative(e.variable.slot + 1).pow(e.multiplicity);
    return out;
}

inline Poly elementary_differential(const LinComb<MultiIndex>& x, const FieldFamily& f) {
    Poly out;
    for (const auto& [k, c] : x) out += elementary_differential(k, f) * c;
    return out;
}

/// Classical elementary differential of a tree: F(B₊^a(t1...tm)) = f_a^{(m)}·Π F(ti).
inline Poly tree_differential(const Tree& t, const FieldFamily& f) {
    Poly out = field_of(f, t.decoration()).derivative(t.fertility());
    for (const auto& c : t.children()) out *= tree_differential(c, f);
    return out;
}

/// Σ over weight -1 monomials of degree <= n of α(x^k)/σ(x^k)·F_f(x^k).
inline Poly bseries_truncated(const CoeffMap& alpha, const FieldFamily& f, int n, int bound = kDefaultDegreeBound) {
    require_degree_bound(n, bound, "bseries_truncated");
    std::vector<Decoration> letters;
    for (const auto& [a, poly] : f) letters.push_back(a);
    if (letters.empty()) return {};
    const Alphabet alphabet(letters);
    Poly out;
    for (int d = 1; d <= n; ++d) {
        for (const auto& k : enumerate_monomials(d, alphabet, bound)) {
            const Rational a = alpha(k);
            if (a == 0) continue;
            out += elementary_differential(k, f) * Rational(a / Rational(k.factorial()));
        }
    }
    return out;
}

}  // namespace hopfmi
