#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hopfmi {

using Integer = mpz_class;

/// Exact rational; gmp keeps every mpq_class result canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// num/den in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses `p` or `p/q` with an optional leading sign. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer denominator(std::string(den), 10);
    if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(Integer(n, 10), denominator);
    q.canonicalize();
    return q;
}

inline Integer factorial(std::uint64_t n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace hopfmi
