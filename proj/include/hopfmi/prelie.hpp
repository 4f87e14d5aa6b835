#pragma once

#include <utility>

#include "lincomb.hpp"
#include "memo.hpp"
#include "multiset.hpp"

namespace hopfmi {

/// Guin–Oudom extension of a pre-Lie product on generators `Gen` to the
/// symmetric algebra S(Gen) = Multiset<Gen>, and the resulting
/// Grossman–Larson product. Only the generator-level product is supplied;
/// everything else follows from
///   1 ▷ Y = Y,
///   x ▷ (y1...yn) = Σ_i y1...(x ▷ yi)...yn          (x primitive),
///   (x X') ▷ Y = x ▷ (X' ▷ Y) − (x ▷ X') ▷ Y.
template <class Gen, class PreLie>
class GuinOudom {
public:
    using Sym = Multiset<Gen>;

    explicit GuinOudom(PreLie prelie) : prelie_(std::move(prelie)) {}

    /// x ▷ Y for a generator x: the derivation extending the pre-Lie product.
    LinComb<Sym> act(const Gen& x, const Sym& y) const {
        LinComb<Sym> out;
        for (const auto& [target, count] : y.groups()) {
            const Sym rest = y.without(target);
            for (const auto& [image, coeff] : prelie_(x, target)) out.add(rest.with(image), coeff * count);
        }
        return out;
    }

    LinComb<Sym> product(const Sym& x, const Sym& y) const {
        if (x.empty()) return LinComb<Sym>(y);
        return memo_.get_or_compute({x, y}, [&] { return compute(x, y); });
    }

    LinComb<Sym> product(const LinComb<Sym>& x, const LinComb<Sym>& y) const {
        return bilinear_extend([this](const Sym& a, const Sym& b) { return product(a, b); }, x, y);
    }

    /// X ⋆ Y = Σ X_(1) (X_(2) ▷ Y) over the deshuffle coproduct of X.
    LinComb<Sym> grossman_larson(const Sym& x, const Sym& y) const {
        LinComb<Sym> out;
        for (const auto& split : multiset_splits(x))
            for (const auto& [z, coeff] : product(split.right, y)) out.add(split.left * z, coeff * split.multiplicity);
        return out;
    }

    LinComb<Sym> grossman_larson(const LinComb<Sym>& x, const LinComb<Sym>& y) const {
        return bilinear_extend([this](const Sym& a, const Sym& b) { return grossman_larson(a, b); }, x, y);
    }

private:
    LinComb<Sym> compute(const Sym& x, const Sym& y) const {
        const Gen head = x[0];
        const Sym tail = x.without(head);
        if (tail.empty()) return act(head, y);
        LinComb<Sym> out;
        for (const auto& [z, coeff] : product(tail, y)) out.add(act(head, z), coeff);
        for (const auto& [z, coeff] : act(head, tail)) out.add(product(z, y), -coeff);
        return out;
    }

    PreLie prelie_;
    mutable ConcurrentMemo<std::pair<Sym, Sym>, LinComb<Sym>> memo_;
};

}  // namespace hopfmi
