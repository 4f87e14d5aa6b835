#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forests.hpp"
#include "hopf_lot.hpp"
#include "memo.hpp"
#include "multiindex.hpp"

namespace hopfmi {

/// Φ on a tree: one factor x_{f(v)-1}^{d(v)} per vertex v.
inline MultiIndex phi(const Tree& t) {
    std::vector<MultiIndex::Entry> entries;
    auto visit = [&](auto&& self, const Tree& node) -> void {
        entries.push_back({Variable{node.decoration(), node.fertility() - 1}, 1});
        for (const auto& c : node.children()) self(self, c);
    };
    visit(visit, t);
    return MultiIndex(std::move(entries));
}

/// Multiplicative extension of Φ to forests.
inline MonomialBag phi(const Forest& f) {
    std::vector<MultiIndex> factors;
    factors.reserve(f.size());
    for (const auto& t : f) factors.push_back(phi(t));
    return MonomialBag(std::move(factors));
}

inline LotElement phi(const LinComb<Forest>& x) {
    LotElement out;
    for (const auto& [f, c] : x) out.add(phi(f), c);
    return out;
}

inline LinComb<MultiIndex> phi(const LinComb<Tree>& x) {
    LinComb<MultiIndex> out;
    for (const auto& [t, c] : x) out.add(phi(t), c);
    return out;
}

/// Process-wide memo of Φ-fibers, keyed by multi-index. Safe for concurrent use.
class FiberCache {
public:
    static FiberCache& global() {
        static FiberCache cache;
        return cache;
    }

    template <class Compute>
    const std::vector<Tree>& get_or_compute(const MultiIndex& k, Compute&& compute) {
        return memo_.get_or_compute(k, std::forward<Compute>(compute));
    }

    /// Seeds an entry (e.g. loaded from disk). Returns false if already present.
    bool insert(const MultiIndex& k, std::vector<Tree> fiber) { return memo_.insert(k, std::move(fiber)); }

    std::map<MultiIndex, std::vector<Tree>> snapshot() const { return memo_.snapshot(); }

    void clear() { memo_.clear(); }

private:
    ConcurrentMemo<MultiIndex, std::vector<Tree>> memo_;
};

namespace detail {

inline std::vector<Tree> compute_fiber(const MultiIndex& k);

}  // namespace detail

/// All canonical trees t with Φ(t) = x^k, sorted. Never empty for weight -1 input.
inline const std::vector<Tree>& phi_preimage(const MultiIndex& k) {
    require_weight_minus_one(k, "phi_preimage");
    return FiberCache::global().get_or_compute(k, [&] { return detail::compute_fiber(k); });
}

namespace detail {

// Pick the root's (decoration, fertility f) from k, split the rest into f
// weight-(-1) parts and realize each part by a subtree from its own fiber.
inline std::vector<Tree> compute_fiber(const MultiIndex& k) {
    std::set<Tree> found;
    for (const auto& e : k.entries()) {
        const int fertility = e.variable.slot + 1;
        const MultiIndex rest = k.shifted(e.variable, -1);
        for (const auto& parts : weight_minus_one_partitions(rest, fertility)) {
            std::vector<const std::vector<Tree>*> choices;
            for (const auto& part : parts) choices.push_back(&phi_preimage(part));
            std::vector<std::size_t> pick(choices.size(), 0);
            for (;;) {
                std::vector<Tree> children;
                for (std::size_t i = 0; i < choices.size(); ++i) children.push_back((*choices[i])[pick[i]]);
                found.insert(Tree(e.variable.decoration, std::move(children)));
                std::size_t i = 0;
                while (i < pick.size() && pick[i] + 1 == choices[i]->size()) pick[i++] = 0;
                if (i == pick.size()) break;
                ++pick[i];
            }
        }
    }
    if (found.empty()) throw std::logic_error("empty fertility fiber for a weight -1 multi-index");
    return {found.begin(), found.end()};
}

}  // namespace detail

/// ȷ(x^k) = Σ_{Φ(t) = x^k} σ(x^k)/σ(t)·t. Coefficients are positive integers.
inline LinComb<Forest> jmath(const MultiIndex& k) {
    LinComb<Forest> out;
    const Integer sk = k.factorial();
    for (const auto& t : phi_preimage(k)) {
        const Rational c = ratio(sk, sigma_tree(t));
        if (!is_integer(c) || c <= 0) throw std::logic_error("embedding coefficient is not a positive integer");
        out.add(Forest{t}, c);
    }
    return out;
}

/// ȷ on a bag: the forest product of the images of its factors.
inline LinComb<Forest> jmath(const MonomialBag& bag) {
    LinComb<Forest> out(Forest{}, 1);
    for (const auto& factor : bag) out = forest_product(out, jmath(factor));
    return out;
}

inline LinComb<Forest> jmath(const LotElement& x) {
    LinComb<Forest> out;
    for (const auto& [bag, c] : x) out.add(jmath(bag), c);
    return out;
}

/// (ȷ ⊗ ȷ) on a rank-2 tensor.
inline Tensor2<Forest, Forest> jmath(const LotTensor& t) {
    auto j = [](const MonomialBag& b) { return jmath(b); };
    return tensor_map(j, j, t);
}

}  // namespace hopfmi
