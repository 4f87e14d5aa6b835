#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "decoration.hpp"
#include "errors.hpp"
#include "lincomb.hpp"
#include "memo.hpp"
#include "multiset.hpp"
#include "rational.hpp"

namespace hopfmi {

/// Default bound on the degree of anything enumerated exhaustively.
inline constexpr int kDefaultDegreeBound = 8;

/// The variable x_j^a of the polynomial algebra; slot j >= -1.
struct Variable {
    Decoration decoration;
    int slot = -1;

    friend bool operator==(const Variable&, const Variable&) = default;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// A monomial x^k: finitely supported map Variable -> positive multiplicity,
/// stored sorted by (decoration, slot). The empty map is the unit monomial.
class MultiIndex {
public:
    struct Entry {
        Variable variable;
        int multiplicity = 0;

        friend bool operator==(const Entry&, const Entry&) = default;
        friend auto operator<=>(const Entry&, const Entry&) = default;
    };

    MultiIndex() = default;

    /// Merges repeated variables and drops zero multiplicities.
    explicit MultiIndex(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.variable < b.variable; });
        for (auto& e : entries) {
            if (e.variable.slot < -1)
                throw std::invalid_argument("slot " + std::to_string(e.variable.slot) + " is below -1");
            if (e.multiplicity < 0) throw std::invalid_argument("negative multiplicity");
            if (e.multiplicity == 0) continue;
            if (!entries_.empty() && entries_.back().variable == e.variable)
                entries_.back().multiplicity += e.multiplicity;
            else
                entries_.push_back(e);
        }
    }

    static MultiIndex var(const Decoration& a, int slot, int power = 1) {
        return MultiIndex({Entry{Variable{a, slot}, power}});
    }

    /// x_slot^power with the default decoration `a`.
    static MultiIndex var(int slot, int power = 1) { return var(Decoration(), slot, power); }

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_unit() const noexcept { return entries_.empty(); }

    int multiplicity(const Variable& v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, const Variable& key) { return e.variable < key; });
        return it != entries_.end() && it->variable == v ? it->multiplicity : 0;
    }

    int degree() const {
        int d = 0;
        for (const auto& e : entries_) d += e.multiplicity;
        return d;
    }

    int weight() const {
        int w = 0;
        for (const auto& e : entries_) w += e.variable.slot * e.multiplicity;
        return w;
    }

    /// k! = product of the multiplicity factorials; also the symmetry factor σ(x^k).
    Integer factorial() const {
        Integer f = 1;
        for (const auto& e : entries_) f *= hopfmi::factorial(static_cast<unsigned>(e.multiplicity));
        return f;
    }

    /// Multiplicity of `v` changed by `delta`; the result must stay nonnegative.
    MultiIndex shifted(const Variable& v, int delta) const {
        MultiIndex out = *this;
        auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), v,
                                   [](const Entry& e, const Variable& key) { return e.variable < key; });
        const int current = it != out.entries_.end() && it->variable == v ? it->multiplicity : 0;
        if (current + delta < 0) throw std::invalid_argument("shift leaves the monomial lattice");
        if (v.slot < -1) throw std::invalid_argument("slot below -1");
        if (current == 0) {
            if (delta > 0) out.entries_.insert(it, Entry{v, delta});
        } else if (current + delta == 0) {
            out.entries_.erase(it);
        } else {
            it->multiplicity += delta;
        }
        return out;
    }

    /// Componentwise `other <= *this`.
    bool contains(const MultiIndex& other) const {
        for (const auto& e : other.entries_)
            if (multiplicity(e.variable) < e.multiplicity) return false;
        return true;
    }

    /// Componentwise difference; `other` must be contained in `*this`.
    MultiIndex minus(const MultiIndex& other) const {
        if (!contains(other)) throw std::invalid_argument("multi-index difference has a negative component");
        std::vector<Entry> entries = entries_;
        for (const auto& e : other.entries_) entries.push_back({e.variable, 0});
        MultiIndex merged(std::move(entries));
        for (auto& e : merged.entries_) e.multiplicity -= other.multiplicity(e.variable);
        std::erase_if(merged.entries_, [](const Entry& e) { return e.multiplicity == 0; });
        return merged;
    }

    /// Internal (commutative) product of monomials: componentwise sum.
    friend MultiIndex operator*(const MultiIndex& a, const MultiIndex& b) {
        std::vector<Entry> entries = a.entries_;
        entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
        return MultiIndex(std::move(entries));
    }

    std::vector<Decoration> decorations() const {
        std::vector<Decoration> out;
        for (const auto& e : entries_)
            if (out.empty() || out.back() != e.variable.decoration) out.push_back(e.variable.decoration);
        return out;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
        return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                      b.entries_.end());
    }

private:
    std::vector<Entry> entries_;
};

/// Basis element of S(N(A)): a multiset of weight-(-1) monomials. The empty bag is the unit.
using MonomialBag = Multiset<MultiIndex>;

struct MiStats {
    int degree;
    int weight;
    Integer factorial;
};

inline MiStats mi_stats(const MultiIndex& k) { return {k.degree(), k.weight(), k.factorial()}; }

inline void require_weight_minus_one(const MultiIndex& k, const char* context) {
    if (k.weight() != -1)
        throw WeightError(std::string(context) + ": expected a weight -1 multi-index, got weight " +
                          std::to_string(k.weight()));
}

/// Checks the bag invariants (every factor of weight -1 and degree >= 1).
inline void validate_bag(const MonomialBag& bag) {
    for (const auto& factor : bag) require_weight_minus_one(factor, "monomial bag factor");
}

inline MonomialBag make_bag(std::vector<MultiIndex> factors) {
    MonomialBag bag(std::move(factors));
    validate_bag(bag);
    return bag;
}

inline int bag_degree(const MonomialBag& bag) {
    int d = 0;
    for (const auto& f : bag) d += f.degree();
    return d;
}

/// σ = external · internal, where external = Π ℓ_i! over repeated factors
/// and internal = Π σ(M_i)^{ℓ_i}. Shared by bags and forests.
struct SymmetryFactor {
    Integer total;
    Integer external;
    Integer internal;
};

inline SymmetryFactor sigma_bag(const MonomialBag& bag) {
    SymmetryFactor s{1, 1, 1};
    for (const auto& [factor, count] : bag.groups()) {
        s.external *= factorial(count);
        Integer sf = factor.factorial();
        for (std::size_t i = 0; i < count; ++i) s.internal *= sf;
    }
    s.total = s.external * s.internal;
    return s;
}

/// ∂: the raising derivation, ∂x_j^a = x_{j+1}^a.
inline LinComb<MultiIndex> d_partial(const MultiIndex& k) {
    LinComb<MultiIndex> out;
    for (const auto& e : k.entries()) {
        const Variable up{e.variable.decoration, e.variable.slot + 1};
        out.add(k.shifted(e.variable, -1).shifted(up, 1), e.multiplicity);
    }
    return out;
}

/// ∂̄: the lowering derivation, ∂̄x_j^a = x_{j-1}^a for j >= 0 and ∂̄x_{-1}^a = 0.
inline LinComb<MultiIndex> dbar(const MultiIndex& k) {
    LinComb<MultiIndex> out;
    for (const auto& e : k.entries()) {
        if (e.variable.slot < 0) continue;
        const Variable down{e.variable.decoration, e.variable.slot - 1};
        out.add(k.shifted(e.variable, -1).shifted(down, 1), e.multiplicity);
    }
    return out;
}

/// ∂̄^r by iterating the derivation.
inline LinComb<MultiIndex> dbar_pow(const MultiIndex& k, int r) {
    if (r < 0) throw std::invalid_argument("dbar_pow: negative power");
    LinComb<MultiIndex> current(k);
    for (int i = 0; i < r; ++i) current = linear_extend([](const MultiIndex& m) { return dbar(m); }, current);
    return current;
}

inline LinComb<MultiIndex> d_partial(const LinComb<MultiIndex>& x) {
    return linear_extend([](const MultiIndex& m) { return d_partial(m); }, x);
}

/// Novikov product P ▷ Q = P·∂Q.
inline LinComb<MultiIndex> novikov(const MultiIndex& p, const MultiIndex& q) {
    LinComb<MultiIndex> out;
    for (const auto& [term, coeff] : d_partial(q)) out.add(p * term, coeff);
    return out;
}

inline LinComb<MultiIndex> novikov(const LinComb<MultiIndex>& p, const LinComb<MultiIndex>& q) {
    return bilinear_extend([](const MultiIndex& a, const MultiIndex& b) { return novikov(a, b); }, p, q);
}

/// Calls `f` on every sub-multi-index m <= k (componentwise), the unit and k included.
template <class F>
void for_each_submultiindex(const MultiIndex& k, F&& f) {
    const auto& entries = k.entries();
    std::vector<int> take(entries.size(), 0);
    for (;;) {
        std::vector<MultiIndex::Entry> sub;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (take[i]) sub.push_back({entries[i].variable, take[i]});
        f(MultiIndex(std::move(sub)));
        std::size_t i = 0;
        while (i < entries.size() && take[i] == entries[i].multiplicity) take[i++] = 0;
        if (i == entries.size()) return;
        ++take[i];
    }
}

namespace detail {

inline void weight_minus_one_partitions(const MultiIndex& residual, int parts, const std::optional<MultiIndex>& lower,
                                        std::vector<MultiIndex>& current, std::vector<MonomialBag>& out) {
    if (parts == 0) {
        if (residual.is_unit()) out.emplace_back(current);
        return;
    }
    if (residual.degree() < parts || residual.weight() != -parts) return;
    if (parts == 1) {
        if (!lower || !(residual < *lower)) {
            current.push_back(residual);
            out.emplace_back(current);
            current.pop_back();
        }
        return;
    }
    for_each_submultiindex(residual, [&](const MultiIndex& part) {
        if (part.is_unit() || part.weight() != -1) return;
        if (lower && part < *lower) return;
        current.push_back(part);
        weight_minus_one_partitions(residual.minus(part), parts - 1, part, current, out);
        current.pop_back();
    });
}

}  // namespace detail

/// All multisets of exactly `parts` weight-(-1) monomials whose product is `residual`.
inline std::vector<MonomialBag> weight_minus_one_partitions(const MultiIndex& residual, int parts) {
    std::vector<MonomialBag> out;
    std::vector<MultiIndex> current;
    detail::weight_minus_one_partitions(residual, parts, std::nullopt, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Admissible cut of a weight-(-1) monomial: the pruning `bag` (r factors of
/// weight -1), the `remainder` k̄ (weight r-1) and the number of cuts sharing
/// this pruning. The full cut has bag {k}, remainder 1 and r = 1.
struct MICut {
    MonomialBag bag;
    MultiIndex remainder;
    int r = 0;
    Integer multiplicity;

    bool is_full() const { return r == 1 && remainder.is_unit(); }
    bool is_empty() const { return r == 0; }

    friend bool operator==(const MICut&, const MICut&) = default;
};

namespace detail {

inline std::vector<MICut> compute_admissible_cuts(const MultiIndex& k) {
    std::vector<MICut> cuts;
    const Integer k_factorial = k.factorial();
    for_each_submultiindex(k, [&](const MultiIndex& pruned) {
        const int r = -pruned.weight();
        if (r < 0 || (r == 0 && !pruned.is_unit())) return;
        const MultiIndex remainder = k.minus(pruned);
        for (auto& bag : weight_minus_one_partitions(pruned, r)) {
            const Rational m = ratio(k_factorial, remainder.factorial() * sigma_bag(bag).total);
            if (!is_integer(m) || m <= 0)
                throw std::logic_error("admissible cut multiplicity is not a positive integer");
            const bool full = r == 1 && remainder.is_unit();
            // ∂̄^r k̄ vanishes only when k̄ cannot absorb r lowerings.
            if (!full && remainder.weight() + remainder.degree() < r)
                throw std::logic_error("cut remainder has no room for the lowering operator");
            cuts.push_back({std::move(bag), remainder, r, Integer(m.get_num())});
        }
    });
    std::sort(cuts.begin(), cuts.end(), [](const MICut& a, const MICut& b) {
        return std::tie(a.r, a.bag, a.remainder) < std::tie(b.r, b.bag, b.remainder);
    });
    return cuts;
}

}  // namespace detail

/// Every admissible cut of the weight-(-1) monomial `k`, once each, ordered by (r, bag).
inline const std::vector<MICut>& mi_admissible_cuts(const MultiIndex& k) {
    require_weight_minus_one(k, "mi_admissible_cuts");
    static ConcurrentMemo<MultiIndex, std::vector<MICut>> memo;
    return memo.get_or_compute(k, [&] { return detail::compute_admissible_cuts(k); });
}

/// The mock-cocycle L^a: product of the bag's factors times x_{r-1}^a, r = number of factors.
inline MultiIndex L_op(const MonomialBag& bag, const Decoration& a) {
    MultiIndex product;
    for (const auto& f : bag) product = product * f;
    return product * MultiIndex::var(a, static_cast<int>(bag.size()) - 1);
}

namespace detail {

inline void enumerate_monomials_rec(const std::vector<Variable>& vars, std::size_t index, int degree_left,
                                    int weight, std::vector<MultiIndex::Entry>& current,
                                    std::vector<MultiIndex>& out) {
    if (index == vars.size()) {
        if (degree_left == 0 && weight == -1) out.emplace_back(current);
        return;
    }
    const int slot = vars[index].slot;
    for (int m = 0; m <= degree_left; ++m) {
        const int w = weight + m * slot;
        // later variables have slot >= `slot`; once slots are nonnegative the weight cannot come back down
        if (slot >= 0 && w > -1) break;
        if (m) current.push_back({vars[index], m});
        enumerate_monomials_rec(vars, index + 1, degree_left - m, w, current, out);
        if (m) current.pop_back();
    }
}

}  // namespace detail

inline void require_degree_bound(int degree, int bound, const char* what) {
    if (degree > bound)
        throw BoundError(std::string(what) + ": degree " + std::to_string(degree) + " exceeds the bound " +
                         std::to_string(bound));
}

/// All weight-(-1) monomials of the given degree over `alphabet`, sorted.
inline std::vector<MultiIndex> enumerate_monomials(int degree, const Alphabet& alphabet,
                                                   int bound = kDefaultDegreeBound) {
    require_degree_bound(degree, bound, "enumerate_monomials");
    std::vector<MultiIndex> out;
    if (degree < 1) return out;
    std::vector<Variable> vars;
    for (int slot = -1; slot <= degree - 2; ++slot)
        for (const auto& a : alphabet.letters()) vars.push_back({a, slot});
    std::sort(vars.begin(), vars.end(), [](const Variable& x, const Variable& y) {
        return std::tie(x.slot, x.decoration) < std::tie(y.slot, y.decoration);
    });
    std::vector<MultiIndex::Entry> current;
    detail::enumerate_monomials_rec(vars, 0, degree, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// All monomial bags of total degree `degree` (the unit bag for degree 0), sorted.
inline std::vector<MonomialBag> enumerate_bags(int degree, const Alphabet& alphabet, int bound = kDefaultDegreeBound) {
    require_degree_bound(degree, bound, "enumerate_bags");
    std::vector<MultiIndex> pool;
    for (int d = 1; d <= degree; ++d) {
        auto ms = enumerate_monomials(d, alphabet, bound);
        pool.insert(pool.end(), ms.begin(), ms.end());
    }
    std::sort(pool.begin(), pool.end());
    std::vector<MonomialBag> out;
    std::vector<MultiIndex> current;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            if (pool[i].degree() > left) continue;
            current.push_back(pool[i]);
            self(self, i, left - pool[i].degree());
            current.pop_back();
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hopfmi
