#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hopfmi {

/// Finitely supported linear combination over a canonical basis `Key`.
/// Zero coefficients are never stored, so the empty map is the zero vector
/// and equality is term-by-term. Iteration follows `Key`'s total order.
template <class Key>
class LinComb {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;

    LinComb(Key key, Rational coeff = 1) {  // NOLINT(google-explicit-constructor)
        add(std::move(key), coeff);
    }

    void add(const Key& key, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rational& scale = 1) {
        if (scale == 0) return;
        for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
    }

    Rational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinComb& operator+=(const LinComb& other) {
        add(other);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        add(other, -1);
        return *this;
    }
    LinComb& operator*=(const Rational& scale) {
        if (scale == 0) {
            terms_.clear();
        } else {
            for (auto& term : terms_) term.second *= scale;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= -1; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }

    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    map_type terms_;
};

template <class Left, class Right>
using Tensor2 = LinComb<std::pair<Left, Right>>;

/// Rank-n tensor; every key holds exactly n legs.
template <class Basis>
using TensorN = LinComb<std::vector<Basis>>;

/// x + c*y.
template <class Key>
LinComb<Key> lincomb_combine(const LinComb<Key>& x, const LinComb<Key>& y, const Rational& c) {
    LinComb<Key> out = x;
    out.add(y, c);
    return out;
}

/// Extends a basis-level map `f: Key -> LinComb<Out>` linearly.
template <class Key, class F>
auto linear_extend(F&& f, const LinComb<Key>& x) {
    using Out = decltype(f(std::declval<const Key&>()));
    Out out;
    for (const auto& [key, coeff] : x) out.add(f(key), coeff);
    return out;
}

/// Extends a basis-level map `f: B1 x B2 -> LinComb<B3>` bilinearly.
template <class B1, class B2, class F>
auto bilinear_extend(F&& f, const LinComb<B1>& x, const LinComb<B2>& y) {
    using Out = decltype(f(std::declval<const B1&>(), std::declval<const B2&>()));
    Out out;
    for (const auto& [b1, c1] : x)
        for (const auto& [b2, c2] : y) out.add(f(b1, b2), c1 * c2);
    return out;
}

/// The pure tensor x ⊗ y.
template <class B1, class B2>
Tensor2<B1, B2> tensor(const LinComb<B1>& x, const LinComb<B2>& y) {
    return bilinear_extend(
        [](const B1& a, const B2& b) { return Tensor2<B1, B2>(std::pair<B1, B2>{a, b}); }, x, y);
}

/// Applies linear maps legwise: (f ⊗ g)(t).
template <class B1, class B2, class F, class G>
auto tensor_map(F&& f, G&& g, const Tensor2<B1, B2>& t) {
    using L = decltype(f(std::declval<const B1&>()));
    using R = decltype(g(std::declval<const B2&>()));
    Tensor2<typename L::key_type, typename R::key_type> out;
    for (const auto& [legs, coeff] : t) out.add(tensor(f(legs.first), g(legs.second)), coeff);
    return out;
}

/// Legwise product of two rank-2 tensors given a basis-level product on each leg.
template <class B1, class B2, class P1, class P2>
Tensor2<B1, B2> tensor_multiply(const Tensor2<B1, B2>& x, const Tensor2<B1, B2>& y, P1&& left_product,
                                P2&& right_product) {
    Tensor2<B1, B2> out;
    for (const auto& [lx, cx] : x)
        for (const auto& [ly, cy] : y)
            out.add(std::pair<B1, B2>{left_product(lx.first, ly.first), right_product(lx.second, ly.second)},
                    cx * cy);
    return out;
}

template <class Basis>
TensorN<Basis> to_tensor_n(const Tensor2<Basis, Basis>& t) {
    TensorN<Basis> out;
    for (const auto& [legs, coeff] : t) out.add(std::vector<Basis>{legs.first, legs.second}, coeff);
    return out;
}

/// Iterates a basis-level coproduct on the last leg until the tensor has `order` legs.
/// For a coassociative coproduct this is the (order-1)-fold iterated coproduct.
template <class Basis, class Coproduct>
TensorN<Basis> iterate_coproduct(const LinComb<Basis>& x, std::size_t order, Coproduct&& delta) {
    TensorN<Basis> current;
    for (const auto& [b, c] : x) current.add(std::vector<Basis>{b}, c);
    for (std::size_t legs = 1; legs < order; ++legs) {
        TensorN<Basis> next;
        for (const auto& [key, coeff] : current) {
            const Tensor2<Basis, Basis> split = delta(key.back());
            for (const auto& [pair, c] : split) {
                std::vector<Basis> extended(key.begin(), key.end() - 1);
                extended.push_back(pair.first);
                extended.push_back(pair.second);
                next.add(extended, coeff * c);
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace hopfmi
