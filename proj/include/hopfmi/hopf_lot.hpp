#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "decoration.hpp"
#include "lincomb.hpp"
#include "memo.hpp"
#include "multiindex.hpp"
#include "prelie.hpp"

namespace hopfmi {

/// An element of the multi-index Hopf algebra: a combination of monomial bags.
using LotElement = LinComb<MonomialBag>;

inline MonomialBag as_bag(const MultiIndex& k) { return MonomialBag{k}; }

/// The commutative product ⊙ of S(N(A)), extended bilinearly.
inline LotElement odot(const LotElement& x, const LotElement& y) {
    return bilinear_extend([](const MonomialBag& a, const MonomialBag& b) { return LotElement(a * b); }, x, y);
}

inline Rational counit(const LotElement& x) { return x.coefficient(MonomialBag{}); }

namespace detail {

struct NovikovProduct {
    LinComb<MultiIndex> operator()(const MultiIndex& p, const MultiIndex& q) const { return novikov(p, q); }
};

inline const GuinOudom<MultiIndex, NovikovProduct>& bag_guin_oudom() {
    static const GuinOudom<MultiIndex, NovikovProduct> instance{NovikovProduct{}};
    return instance;
}

}  // namespace detail

/// Guin–Oudom extension X ▷ Y of the Novikov product to monomial bags.
inline LotElement go_bags(const MonomialBag& x, const MonomialBag& y) { return detail::bag_guin_oudom().product(x, y); }

inline LotElement go_bags(const LotElement& x, const LotElement& y) { return detail::bag_guin_oudom().product(x, y); }

/// Grossman–Larson product on monomial bags.
inline LotElement gl_bags(const MonomialBag& x, const MonomialBag& y) {
    return detail::bag_guin_oudom().grossman_larson(x, y);
}

inline LotElement gl_bags(const LotElement& x, const LotElement& y) {
    return detail::bag_guin_oudom().grossman_larson(x, y);
}

using LotTensor = Tensor2<MonomialBag, MonomialBag>;

namespace detail {

inline LotTensor compute_coproduct_lot(const MultiIndex& k) {
    LotTensor out;
    for (const auto& cut : mi_admissible_cuts(k)) {
        if (cut.is_full()) {
            out.add({cut.bag, MonomialBag{}}, Rational(cut.multiplicity));
            continue;
        }
        const auto right = dbar_pow(cut.remainder, cut.r);
        if (right.is_zero()) throw std::logic_error("admissible cut with vanishing right leg");
        for (const auto& [m, c] : right) out.add({cut.bag, as_bag(m)}, c * cut.multiplicity);
    }
    return out;
}

}  // namespace detail

/// Δ_LOT on a weight-(-1) monomial: Σ over admissible cuts of |c|·P^c ⊗ ∂̄^r k̄,
/// the full cut contributing x^k ⊗ 1.
inline const LotTensor& coproduct_lot(const MultiIndex& k) {
    require_weight_minus_one(k, "coproduct_lot");
    static ConcurrentMemo<MultiIndex, LotTensor> memo;
    return memo.get_or_compute(k, [&] { return detail::compute_coproduct_lot(k); });
}

inline LotTensor bag_tensor_product(const LotTensor& x, const LotTensor& y) {
    auto odot_basis = [](const MonomialBag& a, const MonomialBag& b) { return a * b; };
    return tensor_multiply(x, y, odot_basis, odot_basis);
}

/// Δ_LOT extended multiplicatively to bags (Δ is a unital algebra morphism for ⊙).
inline LotTensor coproduct_lot(const MonomialBag& bag) {
    LotTensor out({MonomialBag{}, MonomialBag{}}, 1);
    for (const auto& factor : bag) out = bag_tensor_product(out, coproduct_lot(factor));
    return out;
}

inline LotTensor coproduct_lot(const LotElement& x) {
    LotTensor out;
    for (const auto& [bag, c] : x) out.add(coproduct_lot(bag), c);
    return out;
}

/// Iterated Δ_LOT with `order` legs.
inline TensorN<MonomialBag> coproduct_lot(const LotElement& x, std::size_t order) {
    return iterate_coproduct(x, order, [](const MonomialBag& b) { return coproduct_lot(b); });
}

/// Transpose of L^a: Σ over bags M with L^a(M) = x^k of σ(x^k)/σ(M)·M.
inline LotElement Lbar(const MultiIndex& k, const Decoration& a) {
    require_weight_minus_one(k, "Lbar");
    LotElement out;
    const Integer sk = k.factorial();
    for (const auto& e : k.entries()) {
        if (e.variable.decoration != a) continue;
        const int r = e.variable.slot + 1;
        const MultiIndex rest = k.shifted(e.variable, -1);
        for (const auto& bag : weight_minus_one_partitions(rest, r)) {
            const Rational coeff = ratio(sk, sigma_bag(bag).total);
            if (coeff <= 0) throw std::logic_error("Lbar coefficient is not positive");
            out.add(bag, coeff);
        }
    }
    return out;
}

inline LotElement Lbar(const LotElement& x, const Decoration& a) {
    LotElement out;
    for (const auto& [bag, c] : x) {
        if (bag.size() != 1) throw WeightError("Lbar acts on single monomials, not on products of monomials");
        out.add(Lbar(bag[0], a), c);
    }
    return out;
}

/// Number of variables carrying each decoration; ⋆ preserves this content.
inline std::map<Decoration, int> decoration_content(const MonomialBag& bag) {
    std::map<Decoration, int> out;
    for (const auto& f : bag)
        for (const auto& e : f.entries()) out[e.variable.decoration] += e.multiplicity;
    return out;
}

/// Coproduct dual to ⋆ under ⟨M, M'⟩ = σ(M)δ: the coefficient of P ⊗ Q is
/// σ(z)·[z](P ⋆ Q) / (σ(P)σ(Q)). Brute force over all basis pairs of the right degrees.
inline LotTensor coproduct_dual_oracle(const MonomialBag& z) {
    validate_bag(z);
    LotTensor out;
    const int n = bag_degree(z);
    std::vector<Decoration> letters;
    for (const auto& f : z)
        for (const auto& d : f.decorations()) letters.push_back(d);
    if (letters.empty()) letters.push_back(Decoration());
    const Alphabet alphabet(letters);
    const auto content = decoration_content(z);
    const Integer sz = sigma_bag(z).total;
    for (int d = 0; d <= n; ++d) {
        const auto lefts = enumerate_bags(d, alphabet, n);
        const auto rights = enumerate_bags(n - d, alphabet, n);
        for (const auto& p : lefts) {
            for (const auto& q : rights) {
                auto combined = decoration_content(p);
                for (const auto& [dec, cnt] : decoration_content(q)) combined[dec] += cnt;
                if (combined != content) continue;
                const Rational c = gl_bags(p, q).coefficient(z);
                if (c == 0) continue;
                out.add({p, q}, c * sz / (sigma_bag(p).total * sigma_bag(q).total));
            }
        }
    }
    return out;
}

inline LotTensor coproduct_dual_oracle(const MultiIndex& k) {
    require_weight_minus_one(k, "coproduct_dual_oracle");
    return coproduct_dual_oracle(as_bag(k));
}

/// Antipode of a single monomial by S(z) = −z − Σ S(z')⊙z'' over the reduced coproduct.
inline const LotElement& antipode_lot(const MultiIndex& k) {
    require_weight_minus_one(k, "antipode_lot");
    static ConcurrentMemo<MultiIndex, LotElement> memo;
    if (const auto* hit = memo.find(k)) return *hit;
    const MonomialBag z = as_bag(k);
    LotElement s(z, -1);
    for (const auto& [legs, c] : coproduct_lot(k)) {
        if (legs.first.empty() || legs.second.empty()) continue;
        LotElement left(MonomialBag{}, 1);
        for (const auto& factor : legs.first) left = odot(left, antipode_lot(factor));
        s.add(odot(left, LotElement(legs.second)), -c);
    }
    memo.insert(k, std::move(s));
    return *memo.find(k);
}

/// The antipode is an algebra morphism for the commutative product ⊙.
inline LotElement antipode_lot(const MonomialBag& bag) {
    LotElement out(MonomialBag{}, 1);
    for (const auto& factor : bag) out = odot(out, antipode_lot(factor));
    return out;
}

inline LotElement antipode_lot(const LotElement& x) {
    LotElement out;
    for (const auto& [bag, c] : x) out.add(antipode_lot(bag), c);
    return out;
}

}  // namespace hopfmi
