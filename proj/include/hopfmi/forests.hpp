#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "decoration.hpp"
#include "lincomb.hpp"
#include "memo.hpp"
#include "multiindex.hpp"
#include "multiset.hpp"
#include "prelie.hpp"
#include "rational.hpp"

namespace hopfmi {

/// Canonical decorated rooted tree. Children are kept sorted by the global
/// tree order (root decoration, then the sorted child lists lexicographically),
/// so structurally isomorphic trees are equal values.
class Tree {
public:
    explicit Tree(Decoration decoration = {}, std::vector<Tree> children = {})
        : decoration_(std::move(decoration)), children_(std::move(children)) {
        std::sort(children_.begin(), children_.end());
        size_ = 1;
        for (const auto& c : children_) size_ += c.size_;
    }

    const Decoration& decoration() const noexcept { return decoration_; }
    const std::vector<Tree>& children() const noexcept { return children_; }
    int fertility() const noexcept { return static_cast<int>(children_.size()); }
    /// Number of vertices.
    int size() const noexcept { return size_; }

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.size_ == b.size_ && a.decoration_ == b.decoration_ && a.children_ == b.children_;
    }

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
        if (auto c = a.decoration_ <=> b.decoration_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                      b.children_.end());
    }

private:
    Decoration decoration_;
    std::vector<Tree> children_;
    int size_ = 1;
};

/// A finite multiset of trees; the empty forest is the unit.
using Forest = Multiset<Tree>;

inline int forest_degree(const Forest& f) {
    int d = 0;
    for (const auto& t : f) d += t.size();
    return d;
}

/// Order of the automorphism group of a tree: Π m_i!·σ(s_i)^{m_i} over the
/// distinct root branches s_i with multiplicities m_i.
inline Integer sigma_tree(const Tree& t) {
    Integer s = 1;
    const auto& ch = t.children();
    for (std::size_t i = 0; i < ch.size();) {
        std::size_t j = i;
        while (j < ch.size() && ch[j] == ch[i]) ++j;
        s *= factorial(j - i);
        const Integer branch = sigma_tree(ch[i]);
        for (std::size_t k = i; k < j; ++k) s *= branch;
        i = j;
    }
    return s;
}

inline SymmetryFactor sigma_forest(const Forest& f) {
    SymmetryFactor s{1, 1, 1};
    for (const auto& [tree, count] : f.groups()) {
        s.external *= factorial(count);
        const Integer st = sigma_tree(tree);
        for (std::size_t i = 0; i < count; ++i) s.internal *= st;
    }
    s.total = s.external * s.internal;
    return s;
}

inline Integer canonical_sigma(const Forest& f) { return sigma_forest(f).total; }

/// B₊^a: all components grafted on a new root decorated by `a`.
inline Tree bplus(const Forest& f, const Decoration& a) { return Tree(a, f.items()); }

/// B₋^a: root removal when the root carries `a`, otherwise zero (nullopt).
inline std::optional<Forest> bminus(const Tree& t, const Decoration& a) {
    if (t.decoration() != a) return std::nullopt;
    return Forest(t.children());
}

inline LinComb<Forest> bplus(const LinComb<Forest>& x, const Decoration& a) {
    LinComb<Forest> out;
    for (const auto& [f, c] : x) out.add(Forest{bplus(f, a)}, c);
    return out;
}

/// Linear B₋^a on H_BCK; forests that are not single trees map to zero.
inline LinComb<Forest> bminus(const LinComb<Forest>& x, const Decoration& a) {
    LinComb<Forest> out;
    for (const auto& [f, c] : x) {
        if (f.size() != 1) continue;
        if (auto r = bminus(f[0], a)) out.add(*r, c);
    }
    return out;
}

inline LinComb<Forest> forest_product(const LinComb<Forest>& x, const LinComb<Forest>& y) {
    return bilinear_extend([](const Forest& a, const Forest& b) { return LinComb<Forest>(a * b); }, x, y);
}

/// Grafting s → t: the root of s attached in turn to every vertex of t.
inline LinComb<Tree> graft(const Tree& s, const Tree& t) {
    LinComb<Tree> out;
    std::vector<Tree> with_s = t.children();
    with_s.push_back(s);
    out.add(Tree(t.decoration(), std::move(with_s)), 1);
    const auto& ch = t.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i > 0 && ch[i] == ch[i - 1]) continue;  // equal siblings give equal trees
        std::size_t same = 1;
        while (i + same < ch.size() && ch[i + same] == ch[i]) ++same;
        for (const auto& [grafted, coeff] : graft(s, ch[i])) {
            std::vector<Tree> children = ch;
            children[i] = grafted;
            out.add(Tree(t.decoration(), std::move(children)), coeff * static_cast<unsigned long>(same));
        }
    }
    return out;
}

inline LinComb<Tree> graft(const LinComb<Tree>& s, const LinComb<Tree>& t) {
    return bilinear_extend([](const Tree& a, const Tree& b) { return graft(a, b); }, s, t);
}

namespace detail {

struct GraftProduct {
    LinComb<Tree> operator()(const Tree& s, const Tree& t) const { return graft(s, t); }
};

inline const GuinOudom<Tree, GraftProduct>& forest_guin_oudom() {
    static const GuinOudom<Tree, GraftProduct> instance{GraftProduct{}};
    return instance;
}

}  // namespace detail

/// Guin–Oudom extension of grafting to forests (F ▷ G), via the recursion rules.
inline LinComb<Forest> guin_oudom_forest(const Forest& f, const Forest& g) {
    return detail::forest_guin_oudom().product(f, g);
}

inline LinComb<Forest> guin_oudom_forest(const LinComb<Forest>& f, const LinComb<Forest>& g) {
    return detail::forest_guin_oudom().product(f, g);
}

/// Grossman–Larson product F ⋆ G = Σ F_(1) (F_(2) ▷ G).
inline LinComb<Forest> gl_forest(const Forest& f, const Forest& g) {
    return detail::forest_guin_oudom().grossman_larson(f, g);
}

inline LinComb<Forest> gl_forest(const LinComb<Forest>& f, const LinComb<Forest>& g) {
    return detail::forest_guin_oudom().grossman_larson(f, g);
}

/// Vertex-indexed view of a forest in preorder (a parent precedes its children).
struct FlatForest {
    std::vector<int> parent;  // -1 for roots
    std::vector<Decoration> decoration;
    std::vector<std::vector<int>> children;

    int size() const { return static_cast<int>(parent.size()); }
};

inline FlatForest flatten(const Forest& f) {
    FlatForest flat;
    auto visit = [&](auto&& self, const Tree& t, int parent) -> void {
        const int id = flat.size();
        flat.parent.push_back(parent);
        flat.decoration.push_back(t.decoration());
        flat.children.emplace_back();
        if (parent >= 0) flat.children[static_cast<std::size_t>(parent)].push_back(id);
        for (const auto& c : t.children()) self(self, c, id);
    };
    for (const auto& t : f) visit(visit, t, -1);
    return flat;
}

/// Rebuilds the canonical forest on the vertices with keep[v] set, with extra
/// trees attached below vertices (`attach[v]`) and extra components (`loose`).
inline Forest rebuild(const FlatForest& flat, const std::vector<char>& keep,
                      const std::vector<std::vector<Tree>>* attach = nullptr, std::vector<Tree> loose = {}) {
    auto build = [&](auto&& self, int v) -> Tree {
        std::vector<Tree> children;
        for (int c : flat.children[static_cast<std::size_t>(v)])
            if (keep[static_cast<std::size_t>(c)]) children.push_back(self(self, c));
        if (attach) {
            const auto& extra = (*attach)[static_cast<std::size_t>(v)];
            children.insert(children.end(), extra.begin(), extra.end());
        }
        return Tree(flat.decoration[static_cast<std::size_t>(v)], std::move(children));
    };
    for (int v = 0; v < flat.size(); ++v) {
        const auto p = flat.parent[static_cast<std::size_t>(v)];
        if (keep[static_cast<std::size_t>(v)] && (p < 0 || !keep[static_cast<std::size_t>(p)]))
            loose.push_back(build(build, v));
    }
    return Forest(std::move(loose));
}

/// Admissible cut: pruning (crown) and trunk of one upward-closed vertex subset.
struct ForestCut {
    Forest pruning;
    Forest trunk;

    friend bool operator==(const ForestCut&, const ForestCut&) = default;
    friend auto operator<=>(const ForestCut&, const ForestCut&) = default;
};

/// One entry per admissible vertex subset V (every vertex above a vertex of V
/// is in V); the pruning is u|V and the trunk u|(complement).
inline std::vector<ForestCut> bck_cuts(const Forest& u) {
    const FlatForest flat = flatten(u);
    const auto n = static_cast<std::size_t>(flat.size());
    std::vector<char> in_pruning(n, 0);
    std::vector<ForestCut> out;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            std::vector<char> trunk(n);
            for (std::size_t i = 0; i < n; ++i) trunk[i] = !in_pruning[i];
            out.push_back({rebuild(flat, in_pruning), rebuild(flat, trunk)});
            return;
        }
        const int p = flat.parent[v];
        if (p >= 0 && in_pruning[static_cast<std::size_t>(p)]) {
            in_pruning[v] = 1;
            self(self, v + 1);
            return;
        }
        in_pruning[v] = 0;
        self(self, v + 1);
        in_pruning[v] = 1;
        self(self, v + 1);
        in_pruning[v] = 0;
    };
    rec(rec, 0);
    return out;
}

/// Δ_BCK(u) = Σ over admissible cuts of pruning ⊗ trunk.
inline const Tensor2<Forest, Forest>& coproduct_bck(const Forest& u) {
    static ConcurrentMemo<Forest, Tensor2<Forest, Forest>> memo;
    return memo.get_or_compute(u, [&] {
        Tensor2<Forest, Forest> out;
        for (auto& cut : bck_cuts(u)) out.add({std::move(cut.pruning), std::move(cut.trunk)}, 1);
        return out;
    });
}

inline Tensor2<Forest, Forest> coproduct_bck(const LinComb<Forest>& x) {
    Tensor2<Forest, Forest> out;
    for (const auto& [f, c] : x) out.add(coproduct_bck(f), c);
    return out;
}

/// Iterated coproduct with `order` legs (order >= 2), unit legs included.
inline TensorN<Forest> coproduct_bck(const LinComb<Forest>& x, std::size_t order) {
    return iterate_coproduct(x, order, [](const Forest& f) { return coproduct_bck(f); });
}

inline Rational counit(const LinComb<Forest>& x) { return x.coefficient(Forest{}); }

/// Direct multi-grafting F → G: every way of grafting each component of F
/// (components taken as a list) onto a vertex of G.
inline LinComb<Forest> multi_graft(const Forest& f, const Forest& g) {
    if (f.empty()) return LinComb<Forest>(g);
    const FlatForest flat = flatten(g);
    const auto n = static_cast<std::size_t>(flat.size());
    LinComb<Forest> out;
    if (n == 0) return out;
    const std::vector<char> keep(n, 1);
    std::vector<std::vector<Tree>> attach(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == f.size()) {
            out.add(rebuild(flat, keep, &attach), 1);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            attach[v].push_back(f[i]);
            self(self, i + 1);
            attach[v].pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Histogram of all graftings of v on w, each component either grafted on a
/// vertex of w or left as a new component (the ground choice).
inline std::map<Forest, Integer> graft_or_fall_histogram(const Forest& v, const Forest& w) {
    const FlatForest flat = flatten(w);
    const auto n = static_cast<std::size_t>(flat.size());
    const std::vector<char> keep(n, 1);
    std::vector<std::vector<Tree>> attach(n);
    std::vector<Tree> fallen;
    std::map<Forest, Integer> out;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == v.size()) {
            out[rebuild(flat, keep, &attach, fallen)] += 1;
            return;
        }
        fallen.push_back(v[i]);
        self(self, i + 1);
        fallen.pop_back();
        for (std::size_t x = 0; x < n; ++x) {
            attach[x].push_back(v[i]);
            self(self, i + 1);
            attach[x].pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Graft-or-fall presentation F ⋆ G = B₋(F → B₊^c(G)), with → computed by direct multi-grafting.
inline LinComb<Forest> gl_forest_graft_or_fall(const Forest& f, const Forest& g, const Decoration& c = {}) {
    return bminus(multi_graft(f, Forest{bplus(g, c)}), c);
}

struct CutGraftCounts {
    Integer cuts;
    Integer graftings;
};

/// C = admissible cuts of u with pruning v and trunk w; G = graftings of v on w isomorphic to u.
inline CutGraftCounts cut_graft_counts(const Forest& u, const Forest& v, const Forest& w) {
    CutGraftCounts out{0, 0};
    for (const auto& cut : bck_cuts(u))
        if (cut.pruning == v && cut.trunk == w) out.cuts += 1;
    const auto hist = graft_or_fall_histogram(v, w);
    if (auto it = hist.find(u); it != hist.end()) out.graftings = it->second;
    return out;
}

namespace detail {

struct ForestTables {
    std::vector<std::vector<Tree>> trees;      // by vertex count
    std::vector<std::vector<Forest>> forests;  // by vertex count
};

inline ForestTables build_forest_tables(int max_degree, const Alphabet& alphabet) {
    ForestTables tables;
    tables.trees.resize(static_cast<std::size_t>(max_degree) + 1);
    tables.forests.resize(static_cast<std::size_t>(max_degree) + 1);
    tables.forests[0].push_back(Forest{});
    for (int n = 1; n <= max_degree; ++n) {
        auto& trees = tables.trees[static_cast<std::size_t>(n)];
        for (const auto& a : alphabet.letters())
            for (const auto& f : tables.forests[static_cast<std::size_t>(n - 1)]) trees.push_back(bplus(f, a));
        std::sort(trees.begin(), trees.end());
        // forests of n vertices: nondecreasing sequences from the pool of trees of size <= n
        std::vector<Tree> pool;
        for (int d = 1; d <= n; ++d)
            pool.insert(pool.end(), tables.trees[static_cast<std::size_t>(d)].begin(),
                        tables.trees[static_cast<std::size_t>(d)].end());
        std::sort(pool.begin(), pool.end());
        auto& forests = tables.forests[static_cast<std::size_t>(n)];
        std::vector<Tree> current;
        auto rec = [&](auto&& self, std::size_t start, int left) -> void {
            if (left == 0) {
                forests.emplace_back(current);
                return;
            }
            for (std::size_t i = start; i < pool.size(); ++i) {
                if (pool[i].size() > left) continue;
                current.push_back(pool[i]);
                self(self, i, left - pool[i].size());
                current.pop_back();
            }
        };
        rec(rec, 0, n);
        std::sort(forests.begin(), forests.end());
    }
    return tables;
}

inline const ForestTables& forest_tables(int degree, const Alphabet& alphabet) {
    static ConcurrentMemo<std::pair<int, std::vector<Decoration>>, ForestTables> memo;
    return memo.get_or_compute({degree, alphabet.letters()}, [&] { return build_forest_tables(degree, alphabet); });
}

}  // namespace detail

/// All canonical trees with exactly n vertices, sorted.
inline std::vector<Tree> enumerate_trees(int n, const Alphabet& alphabet, int bound = kDefaultDegreeBound) {
    require_degree_bound(n, bound, "enumerate_trees");
    if (n < 1) return {};
    return detail::forest_tables(n, alphabet).trees[static_cast<std::size_t>(n)];
}

/// All canonical forests with exactly n vertices (the unit forest for n = 0), sorted.
inline std::vector<Forest> enumerate_forests(int n, const Alphabet& alphabet, int bound = kDefaultDegreeBound) {
    require_degree_bound(n, bound, "enumerate_forests");
    if (n < 0) return {};
    return detail::forest_tables(n, alphabet).forests[static_cast<std::size_t>(n)];
}

}  // namespace hopfmi
