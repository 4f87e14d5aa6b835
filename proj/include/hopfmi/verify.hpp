#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "bseries.hpp"
#include "errors.hpp"
#include "fertility.hpp"
#include "forests.hpp"
#include "hopf_lot.hpp"
#include "multiindex.hpp"
#include "text.hpp"

namespace hopfmi {

enum class IdentityName {
    PhiPrelie,
    PhiHopf,
    Phib,
    Phibtr,
    Jdbar,
    HopfMorphism,
    CoprodRec,
    MainLemma,
    SymForestCount,
    Duality,
};

inline const std::vector<std::pair<IdentityName, std::string_view>>& identity_table() {
    static const std::vector<std::pair<IdentityName, std::string_view>> table{
        {IdentityName::PhiPrelie, "phi-prelie"},       {IdentityName::PhiHopf, "phi-hopf"},
        {IdentityName::Phib, "phib"},                  {IdentityName::Phibtr, "phibtr"},
        {IdentityName::Jdbar, "jdbar"},                {IdentityName::HopfMorphism, "hopf-morphism"},
        {IdentityName::CoprodRec, "coprod-rec"},       {IdentityName::MainLemma, "main-lemma"},
        {IdentityName::SymForestCount, "sym-forest-count"}, {IdentityName::Duality, "duality"},
    };
    return table;
}

inline std::string_view identity_name(IdentityName id) {
    for (const auto& [k, name] : identity_table())
        if (k == id) return name;
    return "?";
}

struct VerifyReport {
    std::string identity;
    int degree = 0;
    Alphabet alphabet;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    std::chrono::duration<double> elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int bound = kDefaultDegreeBound;
    std::size_t random_cases = 40;
};

namespace detail {

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++report_.cases;
        if (!ok) report_.failures.push_back(describe());
    }

private:
    VerifyReport& report_;
};

inline std::vector<MultiIndex> monomials_up_to(int n, const Alphabet& alphabet, int bound) {
    std::vector<MultiIndex> out;
    for (int d = 1; d <= n; ++d)
        for (auto& k : enumerate_monomials(d, alphabet, bound)) out.push_back(std::move(k));
    return out;
}

inline std::vector<std::vector<MonomialBag>> bags_by_degree(int n, const Alphabet& alphabet, int bound) {
    std::vector<std::vector<MonomialBag>> out(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) out[static_cast<std::size_t>(d)] = enumerate_bags(d, alphabet, bound);
    return out;
}

inline std::vector<std::vector<Forest>> forests_by_degree(int n, const Alphabet& alphabet, int bound) {
    std::vector<std::vector<Forest>> out(static_cast<std::size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) out[static_cast<std::size_t>(d)] = enumerate_forests(d, alphabet, bound);
    return out;
}

inline std::vector<std::vector<Tree>> trees_by_degree(int n, const Alphabet& alphabet, int bound) {
    std::vector<std::vector<Tree>> out(static_cast<std::size_t>(n) + 1);
    for (int d = 1; d <= n; ++d) out[static_cast<std::size_t>(d)] = enumerate_trees(d, alphabet, bound);
    return out;
}

template <class T>
std::vector<T> flatten_levels(const std::vector<std::vector<T>>& levels) {
    std::vector<T> out;
    for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
    return out;
}

template <class T>
std::string show(const T& x) {
    return format(x, TextStyle{true});
}

inline LotElement as_lot(const LinComb<MultiIndex>& x) {
    LotElement out;
    for (const auto& [m, c] : x) out.add(as_bag(m), c);
    return out;
}

/// ∂̄^r by the Leibniz rule over variable occurrences: Σ_{Σℓ_p = r} r!/Πℓ_p! Π x_{j_p - ℓ_p}.
inline LinComb<MultiIndex> dbar_leibniz(const MultiIndex& k, int r) {
    std::vector<Variable> occurrences;
    for (const auto& e : k.entries())
        for (int i = 0; i < e.multiplicity; ++i) occurrences.push_back(e.variable);
    LinComb<MultiIndex> out;
    std::vector<MultiIndex::Entry> current;
    const Integer rf = factorial(static_cast<std::uint64_t>(r));
    auto rec = [&](auto&& self, std::size_t p, int left, Integer denom) -> void {
        if (p == occurrences.size()) {
            if (left == 0) out.add(MultiIndex(current), ratio(rf, denom));
            return;
        }
        const Variable& v = occurrences[p];
        for (int l = 0; l <= std::min(left, v.slot + 1); ++l) {
            current.push_back({Variable{v.decoration, v.slot - l}, 1});
            self(self, p + 1, left - l, denom * factorial(static_cast<std::uint64_t>(l)));
            current.pop_back();
        }
    };
    rec(rec, 0, r, Integer(1));
    return out;
}

template <class K>
bool nonnegative_integers(const LinComb<K>& x) {
    return std::all_of(x.begin(), x.end(), [](const auto& term) { return term.second > 0 && is_integer(term.second); });
}

inline Poly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& c : coeffs) c = ratio(Integer(num(rng)), Integer(den(rng)));
    return Poly(std::move(coeffs));
}

inline FieldFamily random_family(std::mt19937_64& rng, const Alphabet& alphabet) {
    FieldFamily f;
    for (const auto& a : alphabet.letters()) f[a] = random_poly(rng, 3);
    return f;
}

inline std::string show_family(const FieldFamily& f) {
    std::string out;
    for (const auto& [a, p] : f) out += (out.empty() ? "" : "; ") + a.symbol() + "=" + p.to_string();
    return out;
}

// Identity bodies. Each receives the degree bound and fills the checker.

inline void check_phi_prelie(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto trees = trees_by_degree(n, alphabet, bound);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j)
            for (const auto& s : trees[i])
                for (const auto& t : trees[j]) {
                    const auto lhs = phi(graft(s, t));
                    const auto rhs = novikov(phi(s), phi(t));
                    ck.check(lhs == rhs, [&] { return "Φ(" + show(s) + " ▷ " + show(t) + ") = " + show(lhs) + " but Φ(s)▷Φ(t) = " + show(rhs); });
                }
}

inline void check_phi_hopf(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto forests = forests_by_degree(n, alphabet, bound);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (const auto& f : forests[i])
                for (const auto& g : forests[j]) {
                    const auto lhs = phi(gl_forest(f, g));
                    const auto rhs = gl_bags(phi(f), phi(g));
                    ck.check(lhs == rhs, [&] { return "Φ(" + show(f) + " ⋆ " + show(g) + ") = " + show(lhs) + " but Φ(F)⋆Φ(G) = " + show(rhs); });
                }
}

inline void check_phib(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (int d = 0; d < n; ++d)
        for (const auto& f : enumerate_forests(d, alphabet, bound))
            for (const auto& a : alphabet.letters()) {
                const auto lhs = phi(bplus(f, a));
                const auto rhs = L_op(phi(f), a);
                ck.check(lhs == rhs, [&] { return "Φ(B₊^" + a.symbol() + "(" + show(f) + ")) = " + show(lhs) + " but L^a(Φ) = " + show(rhs); });
            }
}

inline void check_phibtr(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (const auto& k : monomials_up_to(n, alphabet, bound))
        for (const auto& a : alphabet.letters()) {
            const auto lhs = jmath(Lbar(k, a));
            const auto rhs = bminus(jmath(k), a);
            ck.check(lhs == rhs, [&] { return "ȷ(L̄^" + a.symbol() + " " + show(k) + ") = " + show(lhs) + " but B₋(ȷ) = " + show(rhs); });
        }
}

inline void check_jdbar(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    std::set<std::pair<MultiIndex, int>> cases;
    for (const auto& k : monomials_up_to(n, alphabet, bound))
        for (const auto& cut : mi_admissible_cuts(k))
            if (cut.r >= 1 && !cut.is_full()) cases.insert({cut.remainder, cut.r});
    for (const auto& [kbar, r] : cases) {
        const auto iterated = dbar_pow(kbar, r);
        const auto leibniz = dbar_leibniz(kbar, r);
        ck.check(iterated == leibniz, [&] {
            return "∂̄^" + std::to_string(r) + " " + show(kbar) + ": iterated " + show(iterated) + " vs Leibniz " + show(leibniz);
        });
        const Integer kf = kbar.factorial();
        LinComb<Forest> expected;
        bool integral = true;
        for (const auto& [m, c] : iterated) {
            const Rational count = c * Rational(m.factorial()) / Rational(kf);
            integral = integral && is_integer(count) && count > 0;
            for (const auto& t : phi_preimage(m)) expected.add(Forest{t}, count * ratio(kf, sigma_tree(t)));
        }
        const auto lhs = jmath(as_lot(iterated));
        ck.check(integral && lhs == expected, [&] {
            return "ȷ(∂̄^" + std::to_string(r) + " " + show(kbar) + ") = " + show(lhs) + " but the fiber sum is " + show(expected);
        });
    }
}

inline void check_hopf_morphism(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (const auto& k : monomials_up_to(n, alphabet, bound)) {
        const auto lhs = jmath(coproduct_lot(k));
        const auto rhs = coproduct_bck(jmath(k));
        ck.check(lhs == rhs, [&] { return "(ȷ⊗ȷ)Δ_LOT(" + show(k) + ") = " + show(lhs) + " but Δ_BCK ȷ = " + show(rhs); });
    }
}

inline void check_coprod_rec(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (const auto& k : monomials_up_to(n, alphabet, bound)) {
        const auto lhs = jmath(coproduct_lot(k));
        Tensor2<Forest, Forest> rhs = tensor(jmath(k), LinComb<Forest>(Forest{}));
        for (const auto& a : alphabet.letters()) {
            const auto inner = jmath(coproduct_lot(Lbar(k, a)));
            auto id = [](const Forest& f) { return LinComb<Forest>(f); };
            auto graft_root = [&](const Forest& f) { return LinComb<Forest>(Forest{bplus(f, a)}); };
            rhs += tensor_map(id, graft_root, inner);
        }
        ck.check(lhs == rhs, [&] { return "recursive coproduct of " + show(k) + ": " + show(lhs) + " vs " + show(rhs); });
    }
}

inline void check_main_lemma(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (const auto& k : monomials_up_to(n, alphabet, bound)) {
        const Integer sk = k.factorial();
        for (const auto& cut : mi_admissible_cuts(k)) {
            const LotElement right = cut.is_full() ? LotElement(MonomialBag{}) : as_lot(dbar_pow(cut.remainder, cut.r));
            Tensor2<Forest, Forest> lhs = tensor(jmath(cut.bag), jmath(right));
            lhs *= Rational(cut.multiplicity);
            Tensor2<Forest, Forest> rhs;
            for (const auto& t : phi_preimage(k)) {
                const Rational weight = ratio(sk, sigma_tree(t));
                for (const auto& c : bck_cuts(Forest{t}))
                    if (phi(c.pruning) == cut.bag) rhs.add({c.pruning, c.trunk}, weight);
            }
            ck.check(lhs == rhs, [&] {
                return "cut " + show(cut.bag) + " of " + show(k) + ": " + show(lhs) + " vs matched tree cuts " + show(rhs);
            });
        }
    }
}

inline void check_sym_forest_count(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (int d = 1; d <= n; ++d)
        for (const auto& f : enumerate_forests(d, alphabet, bound)) {
            const MonomialBag target = phi(f);
            std::vector<Tree> order = f.items();
            Integer tuples = 0;
            do {
                bool match = true;
                for (std::size_t j = 0; j < order.size() && match; ++j) match = phi(order[j]) == target[j];
                if (match) tuples += 1;
            } while (std::next_permutation(order.begin(), order.end()));
            const Integer lhs = tuples * sigma_forest(f).external;
            const Integer rhs = sigma_bag(target).external;
            ck.check(lhs == rhs, [&] {
                return "forest " + show(f) + ": " + to_string(tuples) + " tuples, σ^ext ratio " + to_string(rhs) + "/" +
                       to_string(sigma_forest(f).external);
            });
        }
}

inline void check_duality(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (const auto& k : monomials_up_to(n, alphabet, bound)) {
        const auto& lhs = coproduct_lot(k);
        const auto rhs = coproduct_dual_oracle(k);
        ck.check(lhs == rhs, [&] { return "Δ_LOT(" + show(k) + ") = " + show(lhs) + " but the dual of ⋆ gives " + show(rhs); });
    }
}

// Further properties of the two Hopf algebras and of the B-series map.

template <class B, class Delta>
void check_coassociative(Checker& ck, const std::vector<B>& basis, Delta&& delta, const char* what) {
    for (const auto& b : basis) {
        const Tensor2<B, B> once = delta(b);
        TensorN<B> left, right;
        for (const auto& [legs, c] : once) {
            for (const auto& [inner, c2] : delta(legs.first)) left.add(std::vector<B>{inner.first, inner.second, legs.second}, c * c2);
            for (const auto& [inner, c2] : delta(legs.second)) right.add(std::vector<B>{legs.first, inner.first, inner.second}, c * c2);
        }
        ck.check(left == right, [&] { return std::string(what) + " is not coassociative on " + show(b); });
        LinComb<B> left_counit, right_counit;
        for (const auto& [legs, c] : once) {
            if (legs.first.empty()) left_counit.add(legs.second, c);
            if (legs.second.empty()) right_counit.add(legs.first, c);
        }
        ck.check(left_counit == LinComb<B>(b) && right_counit == LinComb<B>(b),
                 [&] { return std::string(what) + " violates the counit law on " + show(b); });
    }
}

inline void check_coassoc_lot(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    check_coassociative(ck, flatten_levels(bags_by_degree(n, alphabet, bound)),
                        [](const MonomialBag& b) { return coproduct_lot(b); }, "Δ_LOT");
}

inline void check_coassoc_bck(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    check_coassociative(ck, flatten_levels(forests_by_degree(n, alphabet, bound)),
                        [](const Forest& f) { return coproduct_bck(f); }, "Δ_BCK");
}

inline void check_prelie_graft(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto trees = flatten_levels(trees_by_degree(n, alphabet, bound));
    auto assoc = [](const Tree& s, const Tree& t, const Tree& u) {
        return graft(LinComb<Tree>(s), graft(t, u)) - graft(graft(s, t), LinComb<Tree>(u));
    };
    for (const auto& s : trees)
        for (const auto& t : trees)
            for (const auto& u : trees) {
                if (s.size() + t.size() + u.size() > n || t < s) continue;
                ck.check(assoc(s, t, u) == assoc(t, s, u),
                         [&] { return "grafting associator not symmetric on " + show(s) + ", " + show(t) + ", " + show(u); });
            }
}

inline void check_novikov_axioms(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto monos = monomials_up_to(n, alphabet, bound);
    auto nv = [](const LinComb<MultiIndex>& p, const LinComb<MultiIndex>& q) { return novikov(p, q); };
    for (const auto& x : monos)
        for (const auto& y : monos)
            for (const auto& z : monos) {
                if (x.degree() + y.degree() + z.degree() > n) continue;
                const LinComb<MultiIndex> X(x), Y(y), Z(z);
                const auto lhs = nv(X, nv(Y, Z)) - nv(nv(X, Y), Z);
                const auto rhs = nv(Y, nv(X, Z)) - nv(nv(Y, X), Z);
                ck.check(lhs == rhs, [&] { return "left pre-Lie identity fails on " + show(x) + ", " + show(y) + ", " + show(z); });
                ck.check(nv(nv(X, Y), Z) == nv(nv(X, Z), Y),
                         [&] { return "right-NAP identity fails on " + show(x) + ", " + show(y) + ", " + show(z); });
            }
}

template <class B, class Go, class Gl>
void check_gl_key_on(Checker& ck, const std::vector<std::vector<B>>& levels, Go&& go, Gl&& gl, int n, const char* what) {
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (int l = 0; i + j + l <= n; ++l)
                for (const auto& x : levels[i])
                    for (const auto& y : levels[j])
                        for (const auto& z : levels[l]) {
                            const LinComb<B> X(x), Y(y), Z(z);
                            ck.check(go(X, go(Y, Z)) == go(gl(X, Y), Z), [&] {
                                return std::string(what) + ": X▷(Y▷Z) ≠ (X⋆Y)▷Z for " + show(x) + ", " + show(y) + ", " + show(z);
                            });
                        }
}

inline void check_gl_key(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    check_gl_key_on(ck, bags_by_degree(n, alphabet, bound),
                    [](const LotElement& a, const LotElement& b) { return go_bags(a, b); },
                    [](const LotElement& a, const LotElement& b) { return gl_bags(a, b); }, n, "bags");
    check_gl_key_on(ck, forests_by_degree(n, alphabet, bound),
                    [](const LinComb<Forest>& a, const LinComb<Forest>& b) { return guin_oudom_forest(a, b); },
                    [](const LinComb<Forest>& a, const LinComb<Forest>& b) { return gl_forest(a, b); }, n, "forests");
}

inline void check_gl_assoc(Checker& ck, int n, const Alphabet& alphabet, int bound, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const auto bags = bags_by_degree(n, alphabet, bound);
    const auto forests = forests_by_degree(n, alphabet, bound);
    std::uniform_int_distribution<int> deg(0, n);
    for (std::size_t rep = 0; rep < opt.random_cases; ++rep) {
        int d1 = deg(rng), d2 = deg(rng), d3 = deg(rng);
        while (d1 + d2 + d3 > n) {
            if (d1 > 0) --d1;
            else if (d2 > 0) --d2;
            else --d3;
        }
        auto pick = [&](const auto& level) {
            std::uniform_int_distribution<std::size_t> idx(0, level.size() - 1);
            return level[idx(rng)];
        };
        const LotElement x(pick(bags[d1])), y(pick(bags[d2])), z(pick(bags[d3]));
        ck.check(gl_bags(gl_bags(x, y), z) == gl_bags(x, gl_bags(y, z)),
                 [&] { return "⋆ on bags is not associative on " + show(x) + ", " + show(y) + ", " + show(z); });
        const LinComb<Forest> f(pick(forests[d1])), g(pick(forests[d2])), h(pick(forests[d3]));
        ck.check(gl_forest(gl_forest(f, g), h) == gl_forest(f, gl_forest(g, h)),
                 [&] { return "⋆ on forests is not associative on " + show(f) + ", " + show(g) + ", " + show(h); });
    }
}

inline void check_gl_forms(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto forests = forests_by_degree(n, alphabet, bound);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (const auto& f : forests[i])
                for (const auto& g : forests[j]) {
                    const auto recursive = gl_forest(f, g);
                    const auto direct = gl_forest_graft_or_fall(f, g, alphabet.front());
                    ck.check(recursive == direct, [&] {
                        return show(f) + " ⋆ " + show(g) + ": Guin–Oudom gives " + show(recursive) + ", graft-or-fall gives " + show(direct);
                    });
                }
}

inline void check_cut_graft(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto forests = forests_by_degree(n, alphabet, bound);
    for (int d = 0; d <= n; ++d) {
        std::map<std::tuple<Forest, Forest, Forest>, Integer> cuts, grafts;
        for (const auto& u : forests[d])
            for (const auto& c : bck_cuts(u)) cuts[{u, c.pruning, c.trunk}] += 1;
        for (int i = 0; i <= d; ++i)
            for (const auto& v : forests[i])
                for (const auto& w : forests[d - i])
                    for (const auto& [u, g] : graft_or_fall_histogram(v, w)) grafts[{u, v, w}] = g;
        std::set<std::tuple<Forest, Forest, Forest>> keys;
        for (const auto& [key, c] : cuts) keys.insert(key);
        for (const auto& [key, g] : grafts) keys.insert(key);
        for (const auto& key : keys) {
            const auto& [u, v, w] = key;
            const Integer c = cuts.contains(key) ? cuts[key] : Integer(0);
            const Integer g = grafts.contains(key) ? grafts[key] : Integer(0);
            const Integer lhs = c * sigma_forest(v).total * sigma_forest(w).total;
            const Integer rhs = sigma_forest(u).total * g;
            ck.check(lhs == rhs, [&] {
                return "u=" + show(u) + " v=" + show(v) + " w=" + show(w) + ": C=" + to_string(c) + " G=" + to_string(g);
            });
        }
    }
}

inline void check_integrality(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    const auto bags = bags_by_degree(n, alphabet, bound);
    const auto forests = forests_by_degree(n, alphabet, bound);
    for (const auto& level : bags)
        for (const auto& b : level)
            ck.check(nonnegative_integers(coproduct_lot(b)), [&] { return "Δ_LOT(" + show(b) + ") has a non-integral coefficient"; });
    for (const auto& level : forests)
        for (const auto& f : level)
            ck.check(nonnegative_integers(coproduct_bck(f)), [&] { return "Δ_BCK(" + show(f) + ") has a non-integral coefficient"; });
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            for (const auto& x : bags[i])
                for (const auto& y : bags[j])
                    ck.check(nonnegative_integers(gl_bags(x, y)), [&] { return show(x) + " ⋆ " + show(y) + " has a non-integral coefficient"; });
            for (const auto& f : forests[i])
                for (const auto& g : forests[j])
                    ck.check(nonnegative_integers(gl_forest(f, g)), [&] { return show(f) + " ⋆ " + show(g) + " has a non-integral coefficient"; });
        }
    for (const auto& k : monomials_up_to(n, alphabet, bound))
        ck.check(nonnegative_integers(jmath(k)), [&] { return "ȷ(" + show(k) + ") has a non-integral coefficient"; });
}

inline void check_primitives(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (int d = 1; d <= n; ++d)
        for (const auto& b : enumerate_bags(d, alphabet, bound)) {
            LotTensor primitive({b, MonomialBag{}}, 1);
            primitive.add({MonomialBag{}, b}, 1);
            const bool is_primitive = coproduct_lot(b) == primitive;
            ck.check(is_primitive == (d == 1), [&] {
                return show(b) + (is_primitive ? " is primitive but has degree " + std::to_string(d) : " of degree 1 is not primitive");
            });
        }
}

inline void check_antipode(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (const auto& level : bags_by_degree(n, alphabet, bound))
        for (const auto& b : level) {
            LotElement left, right;
            for (const auto& [legs, c] : coproduct_lot(b)) {
                left.add(odot(antipode_lot(legs.first), LotElement(legs.second)), c);
                right.add(odot(LotElement(legs.first), antipode_lot(legs.second)), c);
            }
            const LotElement expected = b.empty() ? LotElement(MonomialBag{}) : LotElement();
            ck.check(left == expected && right == expected, [&] {
                return "S∗id on " + show(b) + " gives " + show(left) + ", id∗S gives " + show(right);
            });
        }
}

inline void check_multiplicativity(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    for (int d = 2; d <= n; ++d)
        for (const auto& b : enumerate_bags(d, alphabet, bound)) {
            if (b.size() < 2) continue;
            const auto lhs = coproduct_lot(b);
            const auto rhs = coproduct_dual_oracle(b);
            ck.check(lhs == rhs, [&] { return "product of factor coproducts differs from the dual of ⋆ on " + show(b); });
        }
}

inline void check_jmath_injective(Checker& ck, int n, const Alphabet& alphabet, int bound) {
    std::map<std::map<Forest, Rational>, MonomialBag> seen;
    for (const auto& level : bags_by_degree(n, alphabet, bound))
        for (const auto& b : level) {
            auto image = jmath(b).terms();
            auto it = seen.find(image);
            ck.check(it == seen.end(), [&] { return "ȷ(" + show(b) + ") = ȷ(" + show(it->second) + ")"; });
            seen.emplace(std::move(image), b);
        }
}

inline void check_novikov_morphism(Checker& ck, int n, const Alphabet& alphabet, int bound, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const auto monos = monomials_up_to(n, alphabet, bound);
    for (const auto& p : monos)
        for (const auto& q : monos) {
            const FieldFamily f = random_family(rng, alphabet);
            const Poly lhs = elementary_differential(novikov(p, q), f);
            const Poly rhs = elementary_differential(p, f) * elementary_differential(q, f).derivative();
            ck.check(lhs == rhs, [&] {
                return "F(" + show(p) + " ▷ " + show(q) + ") = " + lhs.to_string() + " but F(P)·F(Q)' = " + rhs.to_string() +
                       " for " + show_family(f);
            });
        }
}

inline void check_tree_differential(Checker& ck, int n, const Alphabet& alphabet, int bound, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 1);
    for (const auto& t : flatten_levels(trees_by_degree(n, alphabet, bound))) {
        const FieldFamily f = random_family(rng, alphabet);
        const Poly lhs = tree_differential(t, f);
        const Poly rhs = elementary_differential(phi(t), f);
        ck.check(lhs == rhs, [&] { return "tree " + show(t) + ": " + lhs.to_string() + " vs " + rhs.to_string() + " for " + show_family(f); });
    }
}

}  // namespace detail

struct Suite {
    std::string name;
    std::function<void(detail::Checker&, int, const Alphabet&, const VerifyOptions&)> run;
};

/// The named identities first, then the structural properties.
inline const std::vector<Suite>& suites() {
    using detail::Checker;
    auto plain = [](void (*f)(Checker&, int, const Alphabet&, int)) {
        return [f](Checker& ck, int n, const Alphabet& a, const VerifyOptions& o) { f(ck, n, a, o.bound); };
    };
    auto seeded = [](void (*f)(Checker&, int, const Alphabet&, int, const VerifyOptions&)) {
        return [f](Checker& ck, int n, const Alphabet& a, const VerifyOptions& o) { f(ck, n, a, o.bound, o); };
    };
    static const std::vector<Suite> all{
        {"phi-prelie", plain(detail::check_phi_prelie)},
        {"phi-hopf", plain(detail::check_phi_hopf)},
        {"phib", plain(detail::check_phib)},
        {"phibtr", plain(detail::check_phibtr)},
        {"jdbar", plain(detail::check_jdbar)},
        {"hopf-morphism", plain(detail::check_hopf_morphism)},
        {"coprod-rec", plain(detail::check_coprod_rec)},
        {"main-lemma", plain(detail::check_main_lemma)},
        {"sym-forest-count", plain(detail::check_sym_forest_count)},
        {"duality", plain(detail::check_duality)},
        {"coassoc-lot", plain(detail::check_coassoc_lot)},
        {"coassoc-bck", plain(detail::check_coassoc_bck)},
        {"prelie-graft", plain(detail::check_prelie_graft)},
        {"novikov-axioms", plain(detail::check_novikov_axioms)},
        {"gl-key", plain(detail::check_gl_key)},
        {"gl-assoc", seeded(detail::check_gl_assoc)},
        {"gl-forms", plain(detail::check_gl_forms)},
        {"cut-graft", plain(detail::check_cut_graft)},
        {"integrality", plain(detail::check_integrality)},
        {"primitives", plain(detail::check_primitives)},
        {"antipode", plain(detail::check_antipode)},
        {"multiplicativity", plain(detail::check_multiplicativity)},
        {"jmath-injective", plain(detail::check_jmath_injective)},
        {"novikov-morphism", seeded(detail::check_novikov_morphism)},
        {"tree-differential", seeded(detail::check_tree_differential)},
    };
    return all;
}

inline bool is_suite_name(std::string_view name) {
    return std::any_of(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == name; });
}

/// Runs one named check exhaustively up to `max_degree`.
inline VerifyReport verify(std::string_view name, int max_degree, const Alphabet& alphabet,
                           const VerifyOptions& options = {}) {
    require_degree_bound(max_degree, options.bound, "verify");
    auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == name; });
    if (it == suites().end()) throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
    VerifyReport report;
    report.identity = it->name;
    report.degree = max_degree;
    report.alphabet = alphabet;
    const auto start = std::chrono::steady_clock::now();
    detail::Checker ck(report);
    it->run(ck, max_degree, alphabet, options);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

inline VerifyReport verify_identity(IdentityName id, int max_degree, const Alphabet& alphabet,
                                    const VerifyOptions& options = {}) {
    return verify(identity_name(id), max_degree, alphabet, options);
}

}  // namespace hopfmi
